"""Cross-checks between the Kraus pipeline and the closed-form results.

Each check returns a :class:`CheckResult`; ``run_all`` drives them with
fixed seeds so the outcome is deterministic.  ``channel_factory`` lets a
caller substitute a deliberately wrong channel to confirm the checks fail.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .channels import KrausChannel, depolarising, kraus_map
from .info import i2_max, mutual_information, one_shot_capacity, output_spectrum_closed_form
from .linalg import PAULIS, hermitian_eigenvalues
from .optimize import signal_output_entropy, stationarity_residual
from .states import QUARTER_PI, bloch_decompose, density_matrix, figure1_ensemble, schmidt_state

ChannelFactory = Callable[[float], KrausChannel]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def random_density_matrix(rng: np.random.Generator, dim: int = 4, rank: int | None = None) -> np.ndarray:
    """Random density matrix ``G G^dagger / tr`` from a complex Ginibre ``G``."""
    k = dim if rank is None else rank
    g = rng.standard_normal((dim, k)) + 1j * rng.standard_normal((dim, k))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def check_single_qubit_shrink(factory: ChannelFactory, etas=(0.0, 0.25, 0.5, 0.75, 1.0)) -> CheckResult:
    worst = 0.0
    for eta in etas:
        ch = factory(eta)
        for s in PAULIS:
            worst = max(worst, float(np.max(np.abs(kraus_map(ch, s) - eta * s))))
    return CheckResult("single-qubit Pauli shrink by eta", worst <= 1e-12, f"max error {worst:.2e}")


def check_two_qubit_shrink(
    factory: ChannelFactory, etas=(0.25, 0.5, 0.75), samples: int = 100, seed: int = 2024
) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for eta in etas:
        ch = factory(eta)
        for _ in range(samples):
            rho = random_density_matrix(rng)
            before = bloch_decompose(rho)
            after = bloch_decompose(kraus_map(ch, rho, 2))
            predicted = before.shrunk(eta)
            worst = max(
                worst,
                float(np.max(np.abs(after.lambda1 - predicted.lambda1))),
                float(np.max(np.abs(after.lambda2 - predicted.lambda2))),
                float(np.max(np.abs(after.chi - predicted.chi))),
            )
    return CheckResult(
        "two-qubit Bloch shrink (eta, eta^2)", worst <= 1e-12, f"max error {worst:.2e}"
    )


def check_output_spectra(factory: ChannelFactory, n_eta: int = 17, n_theta: int = 9) -> CheckResult:
    worst = 0.0
    for eta in np.linspace(0.0, 1.0, n_eta):
        ch = factory(float(eta))
        for theta in np.linspace(0.0, QUARTER_PI, n_theta):
            rho = kraus_map(ch, density_matrix(schmidt_state(float(theta))), 2)
            numeric = hermitian_eigenvalues(rho).eigenvalues
            closed = np.sort(output_spectrum_closed_form(float(eta), float(theta)))[::-1]
            worst = max(worst, float(np.max(np.abs(numeric - closed))))
    return CheckResult(
        f"output spectrum vs closed form ({n_eta}x{n_theta} grid)",
        worst <= 1e-10,
        f"max error {worst:.2e}",
    )


def check_stationarity(factory: ChannelFactory, etas=(0.3, 0.5, 0.8), h: float = 1e-5) -> CheckResult:
    worst_res = 0.0
    worst_fd = 0.0
    for eta in etas:
        ch = factory(eta)
        for theta in (0.0, QUARTER_PI):
            worst_res = max(worst_res, abs(stationarity_residual(eta, theta)))
            fd = (signal_output_entropy(eta, theta + h, ch) - signal_output_entropy(eta, theta - h, ch)) / (2 * h)
            worst_fd = max(worst_fd, abs(fd))
    ok = worst_res <= 1e-12 and worst_fd <= 1e-6
    return CheckResult(
        "stationary at theta = 0 and pi/4",
        ok,
        f"residual {worst_res:.2e}, finite-difference slope {worst_fd:.2e}",
    )


def check_i2_max(factory: ChannelFactory, n_eta: int = 101) -> CheckResult:
    worst = 0.0
    for eta in np.linspace(0.0, 1.0, n_eta):
        eta = float(eta)
        value = mutual_information(factory(eta), figure1_ensemble(0.0, 0.0)).mutual_information
        worst = max(worst, abs(value - i2_max(eta)), abs(i2_max(eta) - 2 * one_shot_capacity(eta)))
    return CheckResult(
        "product-state I2 equals closed-form maximum", worst <= 1e-9, f"max error {worst:.2e}"
    )


def run_all(channel_factory: ChannelFactory = depolarising) -> list:
    return [
        check_single_qubit_shrink(channel_factory),
        check_two_qubit_shrink(channel_factory),
        check_output_spectra(channel_factory),
        check_stationarity(channel_factory),
        check_i2_max(channel_factory),
    ]
