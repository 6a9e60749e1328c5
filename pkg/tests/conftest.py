import numpy as np
import pytest
from hypothesis import HealthCheck, settings

import qodimer as q

settings.register_profile(
    "ci", deadline=None, max_examples=25, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("ci")


@pytest.fixture
def base_params():
    """Resonant pair at the coupling used throughout the reference figures."""
    return q.ModelParams(omega0=1.0, omega=1.0, g=0.025, lam=0.05, mu=1.0, gamma=5e-5)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_density_matrix(rng, dim=4):
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng, dim=2):
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    qmat, r = np.linalg.qr(a)
    return qmat * (np.diag(r) / np.abs(np.diag(r)))
