"""Two-qubit signal states, ensembles and their Bloch/Schmidt descriptions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .linalg import (
    IDENTITY2,
    PAULIS,
    TRACE_TOL,
    DimensionError,
    NotHermitianError,
    as_matrix,
    hermiticity_error,
    tensor,
)

NORM_TOL = 1e-12
PROBABILITY_TOL = 1e-12
QUARTER_PI = math.pi / 4
HALF_PI = math.pi / 2


@dataclass(frozen=True, eq=False)
class SignalState:
    """Pure two-qubit state, amplitudes in the basis |00>, |01>, |10>, |11>.

    ``theta`` is recorded when the state was built in Schmidt form
    ``cos(theta)|00> + sin(theta)|11>``.
    """

    amplitudes: np.ndarray
    theta: Optional[float] = None

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (4,):
            raise DimensionError(f"a two-qubit state has 4 amplitudes, got {amps.size}")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalised (norm {norm:.15g})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def overlap(self, other: "SignalState") -> complex:
        """Inner product <self|other>."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Input ensemble of signal states with prior probabilities."""

    members: tuple

    def __post_init__(self):
        members = tuple((float(p), s) for p, s in self.members)
        if not members:
            raise ValueError("an ensemble needs at least one member")
        probs = [p for p, _ in members]
        if min(probs) < 0 or abs(sum(probs) - 1.0) > PROBABILITY_TOL:
            raise ValueError(f"invalid ensemble probabilities {probs}")
        object.__setattr__(self, "members", members)

    @classmethod
    def uniform(cls, states: Sequence[SignalState]) -> "Ensemble":
        p = 1.0 / len(states)
        return cls(tuple((p, s) for s in states))

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([p for p, _ in self.members])

    @property
    def states(self) -> list:
        return [s for _, s in self.members]

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True, eq=False)
class BlochDecomposition:
    """Local Bloch vectors and correlation tensor of a two-qubit operator.

    ``rho = (1/4) [1x1 + sum_k l1_k s_k x 1 + sum_k l2_k 1 x s_k
    + sum_kl chi_kl s_k x s_l]``.
    """

    lambda1: np.ndarray
    lambda2: np.ndarray
    chi: np.ndarray

    def to_matrix(self) -> np.ndarray:
        rho = tensor(IDENTITY2, IDENTITY2).copy()
        for k, s in enumerate(PAULIS):
            rho += self.lambda1[k] * tensor(s, IDENTITY2)
            rho += self.lambda2[k] * tensor(IDENTITY2, s)
            for l, t in enumerate(PAULIS):
                rho += self.chi[k, l] * tensor(s, t)
        return rho / 4.0

    def shrunk(self, eta: float) -> "BlochDecomposition":
        """Local vectors scaled by ``eta``, correlations by ``eta**2``."""
        return BlochDecomposition(
            lambda1=eta * self.lambda1,
            lambda2=eta * self.lambda2,
            chi=eta * eta * self.chi,
        )


def schmidt_state(theta: float) -> SignalState:
    """``cos(theta)|00> + sin(theta)|11>`` for ``theta`` in [0, pi/4]."""
    if not (0.0 <= theta <= QUARTER_PI):
        raise ValueError(f"theta must lie in [0, pi/4], got {theta!r}")
    return SignalState(_schmidt_amplitudes(theta), theta=float(theta))


def _schmidt_amplitudes(theta: float) -> np.ndarray:
    return np.array([math.cos(theta), 0.0, 0.0, math.sin(theta)], dtype=complex)


def product_state(a: Sequence[complex], b: Sequence[complex]) -> SignalState:
    """Tensor product of two normalised single-qubit kets."""
    return SignalState(np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)))


def random_pure_state(rng: np.random.Generator) -> SignalState:
    """Unitarily invariant random state from normalised complex Gaussians."""
    z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    return SignalState(z / np.linalg.norm(z))


def _figure1_states(theta: float, beta: float) -> list:
    ct, st = math.cos(theta), math.sin(theta)
    cb, sb = math.cos(beta), math.sin(beta)
    amps = (
        (ct, 0.0, 0.0, st),
        (st, 0.0, 0.0, -ct),
        (0.0, cb, sb, 0.0),
        (0.0, sb, -cb, 0.0),
    )
    return [SignalState(np.array(a, dtype=complex)) for a in amps]


def figure1_ensemble(theta: float, beta: float) -> Ensemble:
    """Four equiprobable orthogonal states.

    ``cos t|00> + sin t|11>``, ``sin t|00> - cos t|11>``,
    ``cos b|01> + sin b|10>``, ``sin b|01> - cos b|10>``, with angles in
    [0, pi/2].
    """
    for name, v in (("theta", theta), ("beta", beta)):
        if not (0.0 <= v <= HALF_PI):
            raise ValueError(f"{name} must lie in [0, pi/2], got {v!r}")
    return Ensemble.uniform(_figure1_states(theta, beta))


def density_matrix(state: SignalState) -> np.ndarray:
    """Projector ``|psi><psi|``."""
    v = state.amplitudes
    return np.outer(v, v.conj())


def bloch_decompose(rho) -> BlochDecomposition:
    """Expand a two-qubit Hermitian unit-trace operator in Pauli products."""
    m = as_matrix(rho)
    if m.shape != (4, 4):
        raise DimensionError(f"expected a 4x4 matrix, got {m.shape}")
    if hermiticity_error(m) > 1e-12:
        raise NotHermitianError("Bloch decomposition needs a Hermitian matrix")
    if abs(np.trace(m) - 1.0) > TRACE_TOL:
        raise ValueError("Bloch decomposition needs a unit-trace matrix")

    def expect(op):
        return float(np.trace(m @ op).real)

    lam1 = np.array([expect(tensor(s, IDENTITY2)) for s in PAULIS])
    lam2 = np.array([expect(tensor(IDENTITY2, s)) for s in PAULIS])
    chi = np.array([[expect(tensor(s, t)) for t in PAULIS] for s in PAULIS])
    return BlochDecomposition(lambda1=lam1, lambda2=lam2, chi=chi)


def schmidt_decompose(state: SignalState) -> tuple:
    """Schmidt coefficients ``(c1, c2)`` with ``c1 >= c2 >= 0``.

    They are the singular values of the 2x2 amplitude array, obtained in
    closed form from its Frobenius norm (1) and determinant.
    """
    m = state.amplitudes.reshape(2, 2)
    det = abs(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    # c1^2 c2^2 = det^2 and c1^2 + c2^2 = 1
    disc = math.sqrt(max(0.0, 1.0 - 4.0 * det * det))
    c1 = math.sqrt(0.5 * (1.0 + disc))
    c2 = det / c1
    return c1, c2


def binary_entropy(p: float) -> float:
    """Shannon entropy in bits of the distribution ``(p, 1 - p)``."""
    return -sum(x * math.log2(x) for x in (p, 1.0 - p) if x > 0.0)


def entanglement_entropy(state: SignalState) -> float:
    """Entropy of entanglement in bits (0 for product, 1 for Bell states)."""
    c1, c2 = schmidt_decompose(state)
    w2 = c2 * c2
    return binary_entropy(w2) if w2 > 0.0 else 0.0
