"""Dense complex linear algebra for one- and two-qubit operators.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  The basis
ordering for two qubits is ``|00>, |01>, |10>, |11>``, the first tensor
factor being qubit 1.

The Hermitian eigensolver is a cyclic Jacobi method written out here so
that every closed-form spectrum in the package can be checked against an
independent numerical route.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
CLAMP_TOL = 1e-12
MAX_SWEEPS = 50

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

for _m in (IDENTITY2, *PAULIS):
    _m.setflags(write=False)


class DimensionError(ValueError):
    """Operands have incompatible or unsupported shapes."""


class NotHermitianError(ValueError):
    pass


class InvalidDensityMatrix(ValueError):
    """Matrix is not Hermitian, unit-trace and positive semidefinite."""


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    """Eigenvalues of a Hermitian matrix, largest first.

    ``residual`` is the largest entry of ``M v - lambda v`` over all
    returned eigenpairs.
    """

    eigenvalues: np.ndarray
    residual: float
    sweeps: int = 0


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a square, finite complex matrix."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionError(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def mat_mul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def tensor(*factors) -> np.ndarray:
    """Kronecker product; the first factor acts on the leftmost qubit."""
    if not factors:
        raise DimensionError("tensor needs at least one factor")
    out = as_matrix(factors[0])
    for f in factors[1:]:
        out = np.kron(out, as_matrix(f))
    return out


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(as_matrix(a)))


def partial_trace(a, subsystem: int) -> np.ndarray:
    """Trace out qubit ``subsystem`` (1 or 2) of a two-qubit operator.

    Returns the 2x2 operator on the remaining qubit.
    """
    m = as_matrix(a)
    if m.shape != (4, 4):
        raise DimensionError(f"partial_trace expects a 4x4 matrix, got {m.shape}")
    # indices: (row q1, row q2, col q1, col q2)
    t = m.reshape(2, 2, 2, 2)
    if subsystem == 1:
        return np.einsum("ijik->jk", t)
    if subsystem == 2:
        return np.einsum("ijkj->ik", t)
    raise ValueError(f"subsystem must be 1 or 2, got {subsystem!r}")


def hermiticity_error(a) -> float:
    m = as_matrix(a)
    return float(np.max(np.abs(m - m.conj().T)))


def is_hermitian(a, tol: float = HERMITIAN_TOL) -> bool:
    return hermiticity_error(a) <= tol


def hermitian_eigenvalues(a, max_sweeps: int = MAX_SWEEPS) -> SpectrumResult:
    """Full spectrum of a Hermitian matrix by cyclic complex Jacobi rotations.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies the real symmetric Jacobi rotation that annihilates it.

    Raises
    ------
    NotHermitianError
        If ``a`` deviates from its conjugate transpose by more than 1e-12.
    ConvergenceError
        If the off-diagonal part has not vanished after ``max_sweeps``.
    """
    m = as_matrix(a)
    if hermiticity_error(m) > HERMITIAN_TOL:
        raise NotHermitianError(
            f"matrix is not Hermitian (deviation {hermiticity_error(m):.3e})"
        )
    n = m.shape[0]
    work = 0.5 * (m + m.conj().T)
    vecs = np.eye(n, dtype=complex)
    scale = float(np.linalg.norm(work))
    threshold = 1e-15 * scale

    sweeps = 0
    while True:
        off = np.abs(work - np.diag(np.diag(work)))
        if scale == 0.0 or off.max() <= threshold:
            break
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal {off.max():.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(work, vecs, p, q, threshold)

    diag = work.diagonal().real.copy()
    order = np.argsort(diag)[::-1]
    values = diag[order]
    vecs = vecs[:, order]
    residual = float(np.max(np.abs(m @ vecs - vecs * values))) if n else 0.0
    return SpectrumResult(eigenvalues=values, residual=residual, sweeps=sweeps)


def _rotate(work: np.ndarray, vecs: np.ndarray, p: int, q: int, threshold: float) -> None:
    apq = work[p, q]
    g = abs(apq)
    if g <= threshold:
        return
    phase = apq / g
    app = work[p, p].real
    aqq = work[q, q].real
    theta = (aqq - app) / (2.0 * g)
    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    # phase removal diag(1, conj(phase)) followed by the real rotation [[c, s], [-s, c]]
    u = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
    idx = [p, q]
    work[:, idx] = work[:, idx] @ u
    work[idx, :] = u.conj().T @ work[idx, :]
    vecs[:, idx] = vecs[:, idx] @ u
    work[p, q] = work[q, p] = 0.0
    work[p, p] = app - t * g
    work[q, q] = aqq + t * g


def clamp_spectrum(values, tol: float = CLAMP_TOL) -> np.ndarray:
    """Set eigenvalues within ``tol`` of zero to exactly zero."""
    out = np.array(values, dtype=float)
    out[np.abs(out) < tol] = 0.0
    return out


def check_density_matrix(rho) -> SpectrumResult:
    """Validate ``rho`` as a density matrix and return its spectrum.

    Tolerances: Hermiticity 1e-12, trace 1e-12, smallest eigenvalue
    no lower than -1e-10.
    """
    m = as_matrix(rho)
    herm = hermiticity_error(m)
    if herm > HERMITIAN_TOL:
        raise InvalidDensityMatrix(f"not Hermitian (deviation {herm:.3e})")
    tr = np.trace(m)
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidDensityMatrix(f"trace is {tr.real:.15g}, expected 1")
    spec = hermitian_eigenvalues(m)
    if spec.eigenvalues[-1] < -PSD_TOL:
        raise InvalidDensityMatrix(
            f"negative eigenvalue {spec.eigenvalues[-1]:.3e}"
        )
    return spec
