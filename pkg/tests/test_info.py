import math

import numpy as np
import pytest

from depolcap.channels import depolarising, kraus_map, pauli_channel
from depolcap.info import (
    i2_max,
    mutual_information,
    one_shot_capacity,
    output_spectrum_closed_form,
    von_neumann_entropy,
)
from depolcap.linalg import InvalidDensityMatrix, hermitian_eigenvalues
from depolcap.states import Ensemble, density_matrix, figure1_ensemble, random_pure_state, schmidt_state

# mpmath, 30 digits: entropy of {0.81, 0.09, 0.09, 0.01}; (1.8 log2 1.8 + 0.2 log2 0.2); half of it
ENTROPY_08 = 0.937991187178562442507
I2_MAX_08 = 1.062008812821437557493
C1_08 = 0.531004406410718778746


def test_entropy_basic(rng):
    assert von_neumann_entropy(density_matrix(random_pure_state(rng))) == pytest.approx(0.0, abs=1e-10)
    assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0, abs=1e-15)
    assert von_neumann_entropy(np.diag([0.81, 0.09, 0.09, 0.01])) == pytest.approx(ENTROPY_08, abs=1e-14)


def test_entropy_rejects_invalid():
    with pytest.raises(InvalidDensityMatrix):
        von_neumann_entropy(np.diag([1.2, -0.2]))


def test_entropy_of_output_matrix():
    rho = kraus_map(depolarising(0.8), density_matrix(schmidt_state(0.0)), 2)
    assert von_neumann_entropy(rho) == pytest.approx(ENTROPY_08, abs=1e-14)


def test_i2_max_values():
    assert i2_max(1.0) == 2.0
    assert i2_max(0.0) == 0.0
    assert i2_max(0.8) == pytest.approx(I2_MAX_08, abs=1e-14)
    with pytest.raises(ValueError):
        i2_max(1.5)


def test_one_shot_capacity():
    assert one_shot_capacity(1.0) == 1.0
    assert one_shot_capacity(0.0) == 0.0
    assert one_shot_capacity(0.8) == pytest.approx(C1_08, abs=1e-14)
    for eta in np.linspace(0, 1, 51):
        assert i2_max(eta) == 2 * one_shot_capacity(eta)


def test_mutual_information_product_ensemble():
    rep = mutual_information(depolarising(0.8), figure1_ensemble(0.0, 0.0))
    assert rep.mutual_information == pytest.approx(I2_MAX_08, abs=1e-9)
    assert rep.total_entropy == pytest.approx(2.0, abs=1e-12)
    assert rep.mutual_information == rep.total_entropy - rep.conditional_sum
    assert len(rep.per_state_entropies) == 4


def test_mutual_information_noiseless_and_fully_depolarising(rng):
    assert mutual_information(depolarising(1.0), figure1_ensemble(0.0, 0.0)).mutual_information == pytest.approx(
        2.0, abs=1e-12
    )
    for _ in range(5):
        ens = Ensemble.uniform([random_pure_state(rng) for _ in range(3)])
        assert mutual_information(depolarising(0.0), ens).mutual_information == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("eta", np.linspace(0, 1, 11))
def test_pipeline_matches_i2_max(eta):
    got = mutual_information(depolarising(eta), figure1_ensemble(0.0, 0.0)).mutual_information
    assert got == pytest.approx(i2_max(eta), abs=1e-9)


@pytest.mark.parametrize("theta", np.linspace(0, math.pi / 2, 9))
def test_orthogonal_equiprobable_average_is_maximally_mixed(theta):
    rep = mutual_information(depolarising(0.6), figure1_ensemble(theta, theta))
    assert rep.total_entropy == pytest.approx(2.0, abs=1e-9)


def test_report_bounds(rng):
    for _ in range(30):
        size = int(rng.integers(1, 6))
        p = rng.dirichlet(np.ones(size))
        p[-1] = 1 - p[:-1].sum()
        ens = Ensemble(tuple(zip(p, [random_pure_state(rng) for _ in range(size)])))
        ch = pauli_channel(*rng.dirichlet(np.ones(4)))
        rep = mutual_information(ch, ens)
        assert -1e-12 <= rep.mutual_information <= 2 + 1e-9


def test_closed_form_spectrum_examples():
    np.testing.assert_allclose(sorted(output_spectrum_closed_form(0.8, 0.0)), [0.01, 0.09, 0.09, 0.81], atol=1e-15)
    assert output_spectrum_closed_form(0.0, 0.3) == (0.25, 0.25, 0.25, 0.25)
    for eta in np.linspace(0, 1, 11):
        got = output_spectrum_closed_form(eta, math.pi / 4)
        np.testing.assert_allclose(
            sorted(got), sorted([(1 - eta**2) / 4] * 3 + [(1 + 3 * eta**2) / 4]), atol=1e-15
        )


def test_closed_form_spectrum_is_a_distribution():
    for eta in np.linspace(0, 1, 17):
        for theta in np.linspace(0, math.pi / 4, 9):
            a = output_spectrum_closed_form(eta, theta)
            assert min(a) >= 0
            assert sum(a) == pytest.approx(1.0, abs=1e-15)


def test_closed_form_range():
    with pytest.raises(ValueError):
        output_spectrum_closed_form(1.2, 0.0)
    with pytest.raises(ValueError):
        output_spectrum_closed_form(0.5, 1.0)


@pytest.mark.parametrize("eta", np.linspace(0, 1, 17))
@pytest.mark.parametrize("theta", np.linspace(0, math.pi / 4, 9))
def test_numeric_spectrum_matches_closed_form(eta, theta):
    rho = kraus_map(depolarising(eta), density_matrix(schmidt_state(theta)), 2)
    numeric = hermitian_eigenvalues(rho).eigenvalues
    np.testing.assert_allclose(numeric, sorted(output_spectrum_closed_form(eta, theta), reverse=True), atol=1e-10)


@pytest.mark.parametrize("eta", [0.1, 0.5, 0.8, 0.95])
def test_i2_non_increasing_in_entanglement(eta):
    ch = depolarising(eta)
    values = [
        mutual_information(ch, figure1_ensemble(t, t)).mutual_information for t in np.linspace(0, math.pi / 4, 25)
    ]
    assert np.all(np.diff(values) <= 1e-12)
