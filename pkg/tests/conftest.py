import pytest

from warptunnel.params import DEFAULT_CONFIG, specs_from_config
from warptunnel.matching import zeta_terms, solve_coefficients
from warptunnel.dynamics import trajectory_constants


@pytest.fixture(scope="session")
def specs():
    return specs_from_config(DEFAULT_CONFIG)


@pytest.fixture(scope="session")
def barrier(specs):
    return specs[0]


@pytest.fixture(scope="session")
def bubble(specs):
    return specs[1]


@pytest.fixture(scope="session")
def coeffs(barrier, bubble):
    return solve_coefficients(barrier, zeta_terms(barrier, bubble))


@pytest.fixture(scope="session")
def traj_consts(coeffs, barrier, bubble):
    return trajectory_constants(coeffs, barrier, bubble)
