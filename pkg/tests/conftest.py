import pytest
from hypothesis import HealthCheck, settings

from qg2.coeff.modes import GENERIC, RootOfUnity
from qg2.pbw.ops import get_algebra

settings.register_profile("qg2", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qg2")


@pytest.fixture(scope="session")
def gen_alg():
    return get_algebra(GENERIC)


@pytest.fixture(scope="session")
def root_mode():
    return RootOfUnity(5, 1, 2)


@pytest.fixture(scope="session")
def u_alg(root_mode):
    """The restricted quotient at ell=5, y=1, z=2."""
    return get_algebra(root_mode, restricted=True)
