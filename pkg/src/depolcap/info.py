"""Entropies and mutual information of channel outputs, in bits."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import KrausChannel, kraus_map
from .linalg import DimensionError, check_density_matrix, clamp_spectrum
from .states import QUARTER_PI, Ensemble, density_matrix


@dataclass(frozen=True)
class MutualInformationReport:
    total_entropy: float
    conditional_sum: float
    mutual_information: float
    per_state_entropies: tuple


def entropy_of_spectrum(values) -> float:
    """``-sum p log2 p`` over a clamped spectrum, with ``0 log 0 = 0``."""
    p = clamp_spectrum(values)
    p = p[p > 0.0]
    return float(-np.sum(p * np.log2(p)))


def von_neumann_entropy(rho) -> float:
    """Von Neumann entropy ``-tr(rho log2 rho)`` of a density matrix."""
    return entropy_of_spectrum(check_density_matrix(rho).eigenvalues)


def output_states(channel: KrausChannel, ensemble: Ensemble) -> list:
    """Outputs of two channel uses for every signal in the ensemble."""
    return [kraus_map(channel, density_matrix(s), 2) for s in ensemble.states]


def mutual_information(channel: KrausChannel, ensemble: Ensemble) -> MutualInformationReport:
    """Holevo quantity ``S(rho) - sum_i p_i S(rho_i)`` for two channel uses.

    Every signal goes through the full 16-term Kraus sum; no closed forms
    are used here.
    """
    for s in ensemble.states:
        if s.amplitudes.shape != (4,):
            raise DimensionError("mutual_information expects two-qubit signals")
    outputs = output_states(channel, ensemble)
    probs = ensemble.probabilities
    per_state = tuple(von_neumann_entropy(r) for r in outputs)
    average = sum(p * r for p, r in zip(probs, outputs))
    total = von_neumann_entropy(average)
    conditional = float(np.dot(probs, per_state))
    return MutualInformationReport(
        total_entropy=total,
        conditional_sum=conditional,
        mutual_information=total - conditional,
        per_state_entropies=per_state,
    )


def _check_eta(eta: float) -> None:
    if not (0.0 <= eta <= 1.0):
        raise ValueError(f"eta must lie in [0, 1], got {eta!r}")


def output_spectrum_closed_form(eta: float, theta: float) -> tuple:
    """Eigenvalues of the two-use output for ``cos t|00> + sin t|11>``.

    Returned in the order ``(a1, a2, a3, a4)`` with ``a1 = a2 = (1 - eta^2)/4``
    and ``a3``/``a4`` the ``+``/``-`` branches.
    """
    _check_eta(eta)
    if not (0.0 <= theta <= QUARTER_PI):
        raise ValueError(f"theta must lie in [0, pi/4], got {theta!r}")
    c, s = math.cos(2 * theta), math.sin(2 * theta)
    root = math.sqrt(c * c + eta * eta * s * s)
    flat = 0.25 * (1.0 - eta * eta)
    plus = 0.25 * (1.0 + eta * eta + 2.0 * eta * root)
    minus = 0.25 * (1.0 + eta * eta - 2.0 * eta * root)
    return (flat, flat, plus, max(minus, 0.0))


def _xlog2x(x: float) -> float:
    return x * math.log2(x) if x > 0.0 else 0.0


def i2_max(eta: float) -> float:
    """Largest two-use mutual information, reached by product signals."""
    _check_eta(eta)
    return _xlog2x(1.0 + eta) + _xlog2x(1.0 - eta)


def one_shot_capacity(eta: float) -> float:
    return 0.5 * i2_max(eta)
