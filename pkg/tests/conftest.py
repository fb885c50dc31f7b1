import numpy as np
import pytest

from opentropy import HermitianMatrix, PositiveDefiniteMatrix


def random_hermitian(rng, dim, scale=1.0) -> HermitianMatrix:
    g = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    return HermitianMatrix(scale * (g + g.conj().T) / 2.0)


def random_pd(rng, dim, ridge=None) -> PositiveDefiniteMatrix:
    g = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
    ridge = 0.5 * dim if ridge is None else ridge
    return PositiveDefiniteMatrix(g @ g.conj().T + ridge * np.eye(dim))


@pytest.fixture
def rng():
    return np.random.default_rng(12911)
