import numpy as np
import pytest

from logmaj import GenSpec, random_matrix, stream


@pytest.fixture
def rng():
    return stream(2024, "tests")


def rand_pd(n, rng, cond=100.0, scale=1.0):
    return random_matrix(GenSpec(n, "pd", cond_target=cond, scale=scale), rng)


def rand_psd(n, rank, rng, cond=100.0):
    return random_matrix(GenSpec(n, "psd", rank=rank, cond_target=cond), rng)


def rand_hermitian(n, rng, cond=100.0):
    return random_matrix(GenSpec(n, "hermitian", cond_target=cond), rng)


def rand_square(n, rng):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def rand_unitary(n, rng):
    q, r = np.linalg.qr(rand_square(n, rng))
    return q * (np.diag(r) / np.abs(np.diag(r)))
