from fractions import Fraction

import pytest

from qmock.genfun import GenFunId, series_of, S_series, C_series, Ck_series, \
    D_series, omega_series, f_series, A_series, conjecture_lhs, conjecture_rhs, \
    check_thm14, check_eq41, check_eq42, check_c_factorization, check_ck_limit, \
    check_prop41_holomorphic
from qmock.indefinite import H_series
from qmock.settings import SCALE
from qmock.verify.report import compare_series


def test_leading_coefficients():
    T = 4 * SCALE
    assert S_series(T).q_coeffs() == [1, 0, 1, -2]
    assert D_series(T).q_coeffs()[:3] == [1, 2, 4]
    assert omega_series(T).q_coeffs() == [1, 2, 3, 4]
    assert C_series(T).q_coeffs() == [0, 1, 2, 5]
    assert f_series(7 * SCALE).q_coeffs() == [1, 1, -2, 3, -3, 3, -5]


def test_genfun_ids():
    assert str(GenFunId('Ck', 3)) == 'C3'
    assert str(GenFunId('omega')) == 'omega'
    with pytest.raises(ValueError):
        GenFunId('Ck')
    with pytest.raises(ValueError):
        GenFunId('bogus')
    assert series_of('D', 3 * SCALE) == D_series(3 * SCALE)
    assert series_of(GenFunId('Ck', 2), 6 * SCALE) == Ck_series(2, 6 * SCALE)


def test_main_identity_leading_terms():
    T = 12 * SCALE
    expected = [1, 1, 0, 0, 2, -1, 0, 2, -1, 0, 0, 0]
    assert H_series(T).q_coeffs() == expected
    assert A_series(T).q_coeffs() == expected


def test_conjecture_in_original_variable(horizon):
    report = compare_series('original', conjecture_lhs(horizon), conjecture_rhs(horizon))
    assert report.passed
    assert report.horizon_or_tol == horizon


@pytest.mark.parametrize('check', [
    check_thm14, check_eq41, check_eq42, check_c_factorization,
    check_prop41_holomorphic
])
def test_series_identities(check, horizon):
    report = check(horizon)
    assert report.passed, report.witnesses
    assert report.mode == 'exact'


def test_prop41_stays_on_grid(horizon):
    report = check_prop41_holomorphic(horizon)
    assert report.details['off_grid_terms'] == 0


@pytest.mark.parametrize('k', [0, 2, 5])
def test_ck_limit(k, horizon):
    report = check_ck_limit(k, horizon)
    assert report.passed
    assert report.details['first_disagreement'] == Fraction(2 * k + 1)
    assert report.details['threshold'] == Fraction(2 * k + 1)
