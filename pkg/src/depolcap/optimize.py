"""Extremum analysis of the two-use mutual information in the entanglement angle.

The sampler at the bottom draws random, generally non-orthogonal and
entangled, ensembles and records how far each falls below the product-state
maximum.  It is numerical evidence only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .channels import KrausChannel, depolarising, kraus_map
from .info import entropy_of_spectrum, mutual_information
from .linalg import hermitian_eigenvalues
from .states import (
    QUARTER_PI,
    Ensemble,
    SignalState,
    _figure1_states,
    _schmidt_amplitudes,
    entanglement_entropy,
    random_pure_state,
)

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
GSS_TOL = 1e-8
GSS_MAX_ITER = 500
SECOND_DIFF_STEP = 1e-4
# Relative size of round-off in an entropy evaluation; improvements smaller
# than this cannot be told apart from a boundary value.
ENTROPY_NOISE = 1e-14


@dataclass(frozen=True)
class StationarityReport:
    theta: float
    residual: float
    classification: str  # "maximum", "minimum" or "interior-non-stationary"
    mutual_information: float


@dataclass(frozen=True)
class SampleRecord:
    seed: int
    index: int
    size: int
    mutual_information: float
    max_entanglement: float


def stationarity_residual(eta: float, theta: float) -> float:
    """Left-hand side of the stationarity condition for the output entropy.

    ``cos 2t sin 2t [log2(1 + eta^2 + 2 eta r) - log2(1 + eta^2 - 2 eta r)]``
    with ``r = sqrt(cos^2 2t + eta^2 sin^2 2t)``.  At ``eta = 1`` the second
    logarithm diverges; the residual is then 0 where the trigonometric
    prefactor vanishes and ``inf`` elsewhere.
    """
    if not (0.0 < eta <= 1.0):
        raise ValueError(f"eta must lie in (0, 1], got {eta!r}")
    if not (0.0 <= theta <= QUARTER_PI):
        raise ValueError(f"theta must lie in [0, pi/4], got {theta!r}")
    c, s = math.cos(2 * theta), math.sin(2 * theta)
    # cos(pi/2) is 6e-17 in floating point, not 0
    if theta == QUARTER_PI:
        c = 0.0
    prefactor = c * s
    if prefactor == 0.0:
        return 0.0
    root = math.sqrt(c * c + eta * eta * s * s)
    lo = 1.0 + eta * eta - 2.0 * eta * root
    if lo <= 0.0:
        return math.inf
    return prefactor * (math.log2(1.0 + eta * eta + 2.0 * eta * root) - math.log2(lo))


def signal_output_entropy(eta: float, theta: float, channel: KrausChannel | None = None) -> float:
    """Entropy of the two-use output for ``cos t|00> + sin t|11>``.

    Evaluated through the Kraus sum and the Jacobi solver.  ``theta`` is not
    range-checked so that finite differences may step past the endpoints.
    """
    ch = channel if channel is not None else depolarising(eta)
    v = _schmidt_amplitudes(theta)
    rho = kraus_map(ch, np.outer(v, v.conj()), 2)
    return entropy_of_spectrum(hermitian_eigenvalues(rho).eigenvalues)


def _figure1_i2(channel: KrausChannel, theta: float, beta: float) -> float:
    ens = Ensemble.uniform(_figure1_states(theta, beta))
    return mutual_information(channel, ens).mutual_information


def scan_theta(eta: float, points: int) -> list:
    """``(theta, I2)`` for the four-state ensemble with ``beta = theta``.

    The grid is uniform on [0, pi/4] with both endpoints included.
    """
    if points < 2:
        raise ValueError("scan_theta needs at least 2 points")
    channel = depolarising(eta)
    thetas = [QUARTER_PI * k / (points - 1) for k in range(points)]
    thetas[-1] = QUARTER_PI
    return [(t, _figure1_i2(channel, t, t)) for t in thetas]


def golden_section(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = GSS_TOL,
    max_iter: int = GSS_MAX_ITER,
) -> tuple:
    """Shrink ``[a, b]`` around a minimum of ``f`` until ``b - a <= tol``.

    Returns ``(x, f(x), iterations)`` with ``x`` the midpoint of the final
    bracket.
    """
    a, b = min(a, b), max(a, b)
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    it = 0
    while b - a > tol:
        if it >= max_iter:
            raise RuntimeError(f"golden-section search exceeded {max_iter} iterations")
        it += 1
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x), it


def _classify(theta: float, channel: KrausChannel) -> str:
    """Sign of the centred second difference of ``I2`` along ``beta = theta``."""
    h = SECOND_DIFF_STEP
    left, mid, right = (_figure1_i2(channel, t, t) for t in (theta - h, theta, theta + h))
    d2 = left - 2.0 * mid + right
    slope = abs(right - left) / (2 * h)
    if slope > 1e-6:
        return "interior-non-stationary"
    return "maximum" if d2 < 0 else "minimum"


def _refine(objective, lo: float, hi: float, boundary: float | None) -> float:
    """Golden-section minimum of ``objective`` on ``[lo, hi]``.

    ``boundary`` is the domain endpoint inside the bracket, if any.  When the
    refined point is no better than it beyond round-off, the boundary is
    returned.
    """
    x, fx, _ = golden_section(objective, lo, hi)
    if boundary is None:
        return x
    fb = objective(boundary)
    if fx >= fb - ENTROPY_NOISE * max(1.0, abs(fb)):
        return boundary
    return x


def locate_extrema(eta: float, points: int = 33) -> tuple:
    """Maximum and minimum of ``I2`` over ``theta`` in [0, pi/4].

    The scan's best and worst grid cells are refined by golden-section
    search on the per-signal output entropy.  Returns
    ``(maximum_report, minimum_report)``.
    """
    if not (0.0 < eta < 1.0):
        raise ValueError(f"eta must lie in (0, 1), got {eta!r}")
    channel = depolarising(eta)
    scan = scan_theta(eta, points)
    thetas = [t for t, _ in scan]
    values = [v for _, v in scan]
    step = thetas[1] - thetas[0]

    def cell(k):
        lo = max(0.0, thetas[k] - step)
        hi = min(QUARTER_PI, thetas[k] + step)
        boundary = 0.0 if k == 0 else QUARTER_PI if k == len(thetas) - 1 else None
        return lo, hi, boundary

    entropy = lambda t: signal_output_entropy(eta, t, channel)  # noqa: E731
    neg_entropy = lambda t: -signal_output_entropy(eta, t, channel)  # noqa: E731

    reports = []
    for k, objective in ((int(np.argmax(values)), entropy), (int(np.argmin(values)), neg_entropy)):
        lo, hi, boundary = cell(k)
        theta = _refine(objective, lo, hi, boundary)
        reports.append(
            StationarityReport(
                theta=theta,
                residual=stationarity_residual(eta, theta),
                classification=_classify(theta, channel),
                mutual_information=_figure1_i2(channel, theta, theta),
            )
        )
    return tuple(reports)


def random_probabilities(rng: np.random.Generator, size: int) -> np.ndarray:
    """Uniform draw from the probability simplex via normalised exponentials."""
    e = rng.exponential(size=size)
    return e / e.sum()


def random_ensemble(rng: np.random.Generator, size: int) -> Ensemble:
    probs = random_probabilities(rng, size)
    states = [random_pure_state(rng) for _ in range(size)]
    # absorb rounding so the probabilities sum to 1 within tolerance
    probs[-1] = 1.0 - probs[:-1].sum()
    return Ensemble(tuple(zip(probs, states)))


def sample_random_ensembles(eta: float, count: int, size: int, seed: int) -> list:
    """Mutual information of ``count`` random ensembles of ``size`` pure states.

    Sample ``i`` uses its own generator seeded with ``(seed, i)``, so the
    records do not depend on evaluation order.
    """
    if not (2 <= size <= 16):
        raise ValueError(f"size must lie in [2, 16], got {size!r}")
    if count < 1:
        raise ValueError(f"count must be positive, got {count!r}")
    channel = depolarising(eta)
    records = []
    for i in range(count):
        rng = np.random.default_rng([seed, i])
        ens = random_ensemble(rng, size)
        report = mutual_information(channel, ens)
        records.append(
            SampleRecord(
                seed=seed,
                index=i,
                size=size,
                mutual_information=report.mutual_information,
                max_entanglement=max(entanglement_entropy(s) for s in ens.states),
            )
        )
    return records


def orthogonal_product_control(eta: float) -> float:
    """``I2`` of the four computational basis states, the product optimum."""
    basis = [SignalState(np.eye(4, dtype=complex)[k]) for k in range(4)]
    return mutual_information(depolarising(eta), Ensemble.uniform(basis)).mutual_information

