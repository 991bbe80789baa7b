import numpy as np
import pytest

from depolcap.checks import random_density_matrix


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_unitary(rng, dim=4):
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


__all__ = ["random_density_matrix", "random_unitary"]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
