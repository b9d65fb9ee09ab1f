import pytest

from qmock.helpers.utils import sample_taus
from qmock.indefinite import MAIN_FORM, MAIN_CHARACTERISTIC
from qmock.settings import SCALE


@pytest.fixture
def q_terms():
    return 30


@pytest.fixture
def horizon(q_terms):
    return q_terms * SCALE


@pytest.fixture
def taus():
    return sample_taus(seed=1, count=2, min_imag=0.8, max_imag=1.2)


@pytest.fixture
def tol():
    return 1e-8


@pytest.fixture
def main_form():
    return MAIN_FORM


@pytest.fixture
def main_chars():
    return MAIN_CHARACTERISTIC


@pytest.fixture
def small_config():
    return {
        'exact': {'terms': 20},
        'numeric': {'samples': 2, 'tol': 1e-8, 'tau_seed': 3},
    }
