from fractions import Fraction

import numpy as np
import pytest

from qmock.errors import InvalidCharacteristic, UnsupportedCharacteristic
from qmock.indefinite import QuadraticForm2, ThetaCharacteristic, Q_eval, B_eval, \
    sgn_factor, validate_characteristic, cone_sum_series, check_prop31_exact, \
    H_series
from qmock.series_core import QSeries
from qmock.settings import SCALE


def test_form_values(main_form, main_chars):
    assert main_form.det == -12
    assert main_form.diagonal == (6, -2)
    assert Q_eval(main_form, (Fraction(1, 3), 0)) == Fraction(1, 3)
    assert Q_eval(main_form, main_chars.b) == Fraction(-1, 24)
    shifted = (main_chars.b[0] + Fraction(1, 3), main_chars.b[1])
    assert Q_eval(main_form, shifted) == Fraction(11, 24)
    assert B_eval(main_form, main_chars.c1, main_chars.c2) == -24
    assert main_form.solve(main_form.apply((1, 2))) == (1, 2)


def test_sign_factors(main_form, main_chars):
    n = (1, 0)
    assert sgn_factor(main_form, main_chars.c1, n) == 1
    assert sgn_factor(main_form, main_chars.c2, n) == -1
    assert sgn_factor(main_form, main_chars.c1, (1, 1)) == 0


def test_form_validation():
    with pytest.raises(ValueError):
        QuadraticForm2(((2, 0), (0, 2)))
    with pytest.raises(ValueError):
        QuadraticForm2(((1, 2), (3, -4)))
    with pytest.raises(ValueError):
        QuadraticForm2(((Fraction(1, 2), 0), (0, -2)))


def test_dual_lattice(main_form):
    assert main_form.in_dual_lattice((Fraction(5, 6), Fraction(1, 2)))
    assert not main_form.in_dual_lattice((Fraction(1, 7), 0))


def test_majorant_is_positive_definite(main_form, main_chars):
    majorant = main_form.majorant(main_chars.c1)
    assert majorant == ((12, -6), (-6, 4))
    assert np.all(np.linalg.eigvalsh(np.array(majorant, dtype=float)) > 0)
    with pytest.raises(InvalidCharacteristic):
        main_form.majorant((1, 0))


def test_characteristic_validation(main_form, main_chars):
    assert validate_characteristic(main_form, main_chars) is main_chars
    with pytest.raises(InvalidCharacteristic):
        validate_characteristic(main_form, main_chars.replace(c1=(1, 0)))
    # c1 and -c2 lie in opposite components of the negative cone
    with pytest.raises(InvalidCharacteristic):
        validate_characteristic(main_form, main_chars.replace(c2=(1, -3)))


def test_isotropic_characteristic():
    form = QuadraticForm2(((2, 0), (0, -2)))
    chars = ThetaCharacteristic(
        a=(Fraction(1, 4), 0), b=(0, 0), c1=(1, 1), c2=(1, 3)
    )
    assert validate_characteristic(form, chars) is chars
    with pytest.raises(InvalidCharacteristic):
        validate_characteristic(form, chars.replace(a=(0, 0)))
    with pytest.raises(InvalidCharacteristic):
        validate_characteristic(form, chars, allow_isotropic=False)


def test_characteristic_transform(main_chars):
    reflected = main_chars.transformed(((-1, 0), (0, 1)))
    assert reflected.c1 == main_chars.c2
    assert reflected.c2 == main_chars.c1
    assert reflected.a == (Fraction(-1, 3), 0)


def test_cone_sum(horizon, main_chars):
    assert cone_sum_series(main_chars, horizon) == H_series(horizon)
    assert check_prop31_exact(horizon).passed
    other = main_chars.replace(b=(0, 0))
    with pytest.raises(UnsupportedCharacteristic):
        cone_sum_series(other, horizon)


def test_H_horizon():
    H = H_series(9 * SCALE)
    assert H.order == 9 * SCALE
    assert H.coeff(8 * SCALE) == -1


def _double_sum(n_max, T):
    coeffs = {}
    for n in range(n_max + 1):
        for j in range(-n, n + 1):
            term = (-1) ** (n + j)
            for e in (3 * n * n + 2 * n - j * j, 3 * n * n + 4 * n + 1 - j * j):
                coeffs[e * SCALE] = coeffs.get(e * SCALE, 0) + term
    return QSeries(coeffs, T)


@pytest.mark.parametrize('terms', [1, 4, 13, 40])
def test_double_sum_outer_bound(terms):
    T = terms * SCALE
    # outer terms start at q^(2n^2 + 2n); the first one at or past T adds nothing
    n_stop = 0
    while (2 * n_stop * n_stop + 2 * n_stop) * SCALE < T:
        n_stop += 1
    assert _double_sum(n_stop, T) == H_series(T)
    assert _double_sum(n_stop + 2, T) == H_series(T)
