import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from depolcap.linalg import hermitian_eigenvalues, partial_trace
from depolcap.states import (
    BlochDecomposition,
    Ensemble,
    SignalState,
    bloch_decompose,
    density_matrix,
    entanglement_entropy,
    figure1_ensemble,
    product_state,
    random_pure_state,
    schmidt_decompose,
    schmidt_state,
)

from conftest import random_density_matrix

# -cos^2 log2 cos^2 - sin^2 log2 sin^2 at pi/8, evaluated with mpmath at 30 digits
ENTROPY_PI_OVER_8 = 0.600876036692856100842027

angles = st.floats(0.0, math.pi / 2)


def test_schmidt_state_values():
    np.testing.assert_array_equal(schmidt_state(0.0).amplitudes, [1, 0, 0, 0])
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(schmidt_state(math.pi / 4).amplitudes, [r, 0, 0, r], atol=1e-16)
    np.testing.assert_allclose(
        schmidt_state(math.pi / 8).amplitudes,
        [0.923879532511286756, 0, 0, 0.382683432365089772],
        atol=1e-16,
    )
    assert schmidt_state(0.2).theta == 0.2


@pytest.mark.parametrize("theta", [-1e-9, math.pi / 4 + 1e-9, 1.0])
def test_schmidt_state_range(theta):
    with pytest.raises(ValueError):
        schmidt_state(theta)


def test_signal_state_must_be_normalised():
    with pytest.raises(ValueError):
        SignalState(np.array([1, 1, 0, 0]))
    with pytest.raises(ValueError):
        SignalState(np.array([1, 0, 0]))


def test_ensemble_validation():
    s = schmidt_state(0.0)
    with pytest.raises(ValueError):
        Ensemble(((0.5, s), (0.6, s)))
    with pytest.raises(ValueError):
        Ensemble(((1.5, s), (-0.5, s)))
    with pytest.raises(ValueError):
        Ensemble(())
    assert len(Ensemble.uniform([s, s, s])) == 3


def _gram(ens):
    v = np.array([s.amplitudes for s in ens.states])
    return v.conj() @ v.T


def test_figure1_computational_basis():
    ens = figure1_ensemble(0.0, 0.0)
    got = np.abs(np.array([s.amplitudes for s in ens.states]))
    np.testing.assert_array_equal(got, np.eye(4)[[0, 3, 1, 2]])
    np.testing.assert_array_equal(ens.probabilities, [0.25] * 4)


def test_figure1_bell_basis():
    ens = figure1_ensemble(math.pi / 4, math.pi / 4)
    r = 1 / math.sqrt(2)
    bells = np.array([[r, 0, 0, r], [r, 0, 0, -r], [0, r, r, 0], [0, r, -r, 0]])
    for s, b in zip(ens.states, bells):
        assert abs(abs(np.vdot(b, s.amplitudes)) - 1) < 1e-15
    for s in ens.states:
        assert entanglement_entropy(s) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(angles, angles)
def test_figure1_orthonormal(theta, beta):
    np.testing.assert_allclose(_gram(figure1_ensemble(theta, beta)), np.eye(4), atol=1e-12)


def test_figure1_range():
    with pytest.raises(ValueError):
        figure1_ensemble(-0.1, 0.0)
    with pytest.raises(ValueError):
        figure1_ensemble(0.0, 2.0)


def test_density_matrix(rng):
    np.testing.assert_array_equal(density_matrix(schmidt_state(0.0)), np.diag([1, 0, 0, 0]))
    bell = density_matrix(schmidt_state(math.pi / 4))
    expected = np.zeros((4, 4))
    expected[np.ix_([0, 3], [0, 3])] = 0.5
    np.testing.assert_allclose(bell, expected, atol=1e-15)
    for _ in range(20):
        rho = density_matrix(random_pure_state(rng))
        assert abs(np.trace(rho @ rho) - 1) < 1e-12
        assert abs(np.trace(rho) - 1) < 1e-12


@pytest.mark.parametrize("theta", np.linspace(0, math.pi / 4, 9))
def test_bloch_of_schmidt_state(theta):
    b = bloch_decompose(density_matrix(schmidt_state(theta)))
    c, s = math.cos(2 * theta), math.sin(2 * theta)
    np.testing.assert_allclose(b.lambda1, [0, 0, c], atol=1e-15)
    np.testing.assert_allclose(b.lambda2, [0, 0, c], atol=1e-15)
    np.testing.assert_allclose(b.chi, np.diag([s, -s, 1]), atol=1e-15)


def test_bloch_of_maximally_mixed():
    b = bloch_decompose(np.eye(4) / 4)
    assert not b.lambda1.any() and not b.lambda2.any() and not b.chi.any()


def test_bloch_round_trip(rng):
    for _ in range(100):
        rho = random_density_matrix(rng)
        np.testing.assert_allclose(bloch_decompose(rho).to_matrix(), rho, atol=1e-12, rtol=0)


def test_bloch_rejects_bad_input():
    with pytest.raises(ValueError):
        bloch_decompose(np.triu(np.ones((4, 4))) / 4)
    with pytest.raises(ValueError):
        bloch_decompose(np.eye(4))


def test_shrunk():
    b = BlochDecomposition(np.ones(3), 2 * np.ones(3), np.ones((3, 3)))
    s = b.shrunk(0.5)
    np.testing.assert_array_equal(s.lambda1, 0.5 * np.ones(3))
    np.testing.assert_array_equal(s.lambda2, np.ones(3))
    np.testing.assert_array_equal(s.chi, 0.25 * np.ones((3, 3)))


def test_schmidt_decompose_basic():
    assert schmidt_decompose(schmidt_state(0.0)) == (1.0, 0.0)
    c1, c2 = schmidt_decompose(schmidt_state(math.pi / 4))
    assert c1 == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert c2 == pytest.approx(1 / math.sqrt(2), abs=1e-15)


def test_schmidt_decompose_random_product_states(rng):
    for _ in range(100):
        a = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        c1, c2 = schmidt_decompose(product_state(a / np.linalg.norm(a), b / np.linalg.norm(b)))
        assert c1 == pytest.approx(1.0, abs=1e-10)
        assert c2 == pytest.approx(0.0, abs=1e-10)


def test_schmidt_weights_match_reduced_spectra(rng):
    for _ in range(100):
        s = random_pure_state(rng)
        c1, c2 = schmidt_decompose(s)
        assert c1 >= c2 >= 0
        assert c1**2 + c2**2 == pytest.approx(1.0, abs=1e-12)
        rho = density_matrix(s)
        for k in (1, 2):
            spec = hermitian_eigenvalues(partial_trace(rho, k)).eigenvalues
            np.testing.assert_allclose(spec, [c1**2, c2**2], atol=1e-10)


def test_schmidt_decompose_against_svd(rng):
    for _ in range(50):
        s = random_pure_state(rng)
        np.testing.assert_allclose(
            schmidt_decompose(s), np.linalg.svd(s.amplitudes.reshape(2, 2), compute_uv=False), atol=1e-12
        )


def test_entanglement_entropy_values():
    assert entanglement_entropy(schmidt_state(0.0)) == 0.0
    assert entanglement_entropy(schmidt_state(math.pi / 4)) == pytest.approx(1.0, abs=1e-12)
    assert entanglement_entropy(schmidt_state(math.pi / 8)) == pytest.approx(ENTROPY_PI_OVER_8, abs=1e-12)


def test_entanglement_entropy_strictly_increasing():
    values = [entanglement_entropy(schmidt_state(t)) for t in np.linspace(1e-3, math.pi / 4 - 1e-3, 200)]
    assert np.all(np.diff(values) > 0)
