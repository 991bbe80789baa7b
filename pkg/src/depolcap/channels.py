"""Kraus-operator qubit channels and their memoryless n-use extension."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .linalg import (
    IDENTITY2,
    PAULIS,
    DimensionError,
    as_matrix,
    check_density_matrix,
    tensor,
)

COMPLETENESS_TOL = 1e-12
PROBABILITY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """A single-qubit channel given by action operators ``A_k``.

    The operators must satisfy ``sum_k A_k^dagger A_k = 1`` to within
    1e-12 in the max norm.  ``eta`` is set for depolarising channels.
    """

    operators: tuple
    label: str = "kraus"
    eta: Optional[float] = None

    def __post_init__(self):
        ops = tuple(as_matrix(a) for a in self.operators)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        for a in ops:
            if a.shape != (2, 2):
                raise DimensionError(f"Kraus operators must be 2x2, got {a.shape}")
            a.setflags(write=False)
        object.__setattr__(self, "operators", ops)
        err = self.completeness_error()
        if err > COMPLETENESS_TOL:
            raise ValueError(f"Kraus operators are not complete (error {err:.3e})")

    def completeness_error(self) -> float:
        total = sum(a.conj().T @ a for a in self.operators)
        return float(np.max(np.abs(total - IDENTITY2)))

    def __len__(self):
        return len(self.operators)


def error_probability(eta: float) -> float:
    """Probability that a depolarising channel applies a Pauli error."""
    _check_eta(eta)
    return 3.0 * (1.0 - eta) / 4.0


def _check_eta(eta: float) -> None:
    if not (0.0 <= eta <= 1.0):
        raise ValueError(f"eta must lie in [0, 1], got {eta!r}")


def depolarising(eta: float) -> KrausChannel:
    """Depolarising channel shrinking every Bloch component by ``eta``."""
    _check_eta(eta)
    a0 = 0.5 * math.sqrt(1.0 + 3.0 * eta) * IDENTITY2
    w = 0.5 * math.sqrt(1.0 - eta)
    ops = (a0,) + tuple(w * s for s in PAULIS)
    return KrausChannel(ops, label=f"depolarising(eta={eta:g})", eta=float(eta))


def pauli_channel(p0: float, px: float, py: float, pz: float) -> KrausChannel:
    """Channel applying ``sigma_k`` with probability ``p_k`` (``sigma_0 = 1``)."""
    probs = (p0, px, py, pz)
    if any(p < 0 for p in probs) or abs(sum(probs) - 1.0) > PROBABILITY_TOL:
        raise ValueError(f"invalid Pauli probabilities {probs}")
    ops = tuple(math.sqrt(p) * s for p, s in zip(probs, (IDENTITY2, *PAULIS)))
    return KrausChannel(ops, label=f"pauli{probs}")


def kraus_map(channel: KrausChannel, operator, n: int = 1) -> np.ndarray:
    """Linear action of the ``n``-fold memoryless channel on any operator.

    Sums ``K X K^dagger`` over every ``n``-tuple of Kraus operators, with
    ``K`` the tensor product of the tuple.  No density-matrix checks, so
    this also maps Pauli operators and other traceless inputs.
    """
    x = as_matrix(operator)
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if x.shape != (2**n, 2**n):
        raise DimensionError(f"operator of shape {x.shape} does not act on {n} qubit(s)")
    out = np.zeros_like(x)
    for combo in itertools.product(channel.operators, repeat=n):
        k = tensor(*combo)
        out += k @ x @ k.conj().T
    return out


def apply(channel: KrausChannel, state) -> np.ndarray:
    """Send a single-qubit density matrix through the channel."""
    rho = as_matrix(state)
    if rho.shape != (2, 2):
        raise DimensionError(f"apply expects a 2x2 density matrix, got {rho.shape}")
    check_density_matrix(rho)
    return kraus_map(channel, rho, 1)


def apply_n(channel: KrausChannel, state, n: int) -> np.ndarray:
    """Send an ``n``-qubit density matrix through ``n`` independent uses."""
    rho = as_matrix(state)
    if rho.shape != (2**n, 2**n):
        raise DimensionError(f"state of shape {rho.shape} is not a {n}-qubit state")
    check_density_matrix(rho)
    return kraus_map(channel, rho, n)
