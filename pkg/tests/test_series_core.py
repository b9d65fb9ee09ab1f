from fractions import Fraction

import numpy as np
import pytest

from qmock.errors import ZeroLeadingTerm, OffGrid, NonIntegerExponents, BeyondOrder
from qmock.series_core import QSeries
from qmock.settings import SCALE


def test_geometric_inverse():
    one_minus_q = QSeries.from_q_coeffs([1, -1], T=6)
    inverse = one_minus_q.inverse()
    assert inverse.order == 6 * SCALE
    assert inverse.q_coeffs() == [1] * 6
    assert one_minus_q * inverse == QSeries.one(6 * SCALE)


def test_inverse_with_rational_leading_term():
    f = QSeries.from_q_coeffs([2, 1], T=4)
    inverse = f.inverse()
    assert inverse.q_coeffs() == [
        Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8), Fraction(-1, 16)
    ]


def test_inverse_of_zero_series():
    with pytest.raises(ZeroLeadingTerm):
        QSeries.zero(5 * SCALE).inverse()


def test_multiplication_horizon():
    f = QSeries.from_q_coeffs([1, -1], T=5)
    g = QSeries.from_q_coeffs([1, 1], T=8)
    product = f * g
    assert product.order == 5 * SCALE
    assert product.q_coeffs() == [1, 0, -1, 0, 0]
    # a leading q^2 of the right factor moves the horizon
    shifted = f * g.shift(2 * SCALE)
    assert shifted.order == 7 * SCALE


def test_binomials_match_multiplication():
    base = QSeries.from_q_coeffs([1, 3, 0, 2], T=10)
    binomial = QSeries({0: 1, 2 * SCALE: -5}, 10 * SCALE)
    assert base.mul_binomial(-5, 2 * SCALE) == base * binomial
    assert base.mul_binomial(-5, 2 * SCALE).div_binomial(-5, 2 * SCALE) == base


def test_coefficient_beyond_horizon():
    f = QSeries.from_q_coeffs([1, 2, 3])
    assert f.coeff(2 * SCALE) == 3
    assert f.coeff(SCALE // 2) == 0
    with pytest.raises(BeyondOrder):
        f.coeff(3 * SCALE)


def test_substitute_power():
    f = QSeries.from_q_coeffs([1, 1, 1], T=3)
    doubled = f.substitute_power(2)
    assert dict(doubled.items()) == {0: 1, 2 * SCALE: 1, 4 * SCALE: 1}
    assert doubled.order == 6 * SCALE
    halved = doubled.substitute_power(Fraction(1, 2))
    assert halved == f
    with pytest.raises(OffGrid):
        QSeries({1: 1}, SCALE).substitute_power(Fraction(1, 2))


def test_sieve_and_flip():
    f = QSeries.from_q_coeffs([1, 2, 3, 4, 5, 6])
    assert f.sieve(2, 1).q_coeffs() == [0, 2, 0, 4, 0, 6]
    assert f.flip().q_coeffs() == [1, -2, 3, -4, 5, -6]
    fractional = QSeries({SCALE // 2: 1}, SCALE)
    with pytest.raises(NonIntegerExponents):
        fractional.sieve(2, 0)
    with pytest.raises(NonIntegerExponents):
        fractional.flip()


def test_power_and_negative_power():
    f = QSeries.from_q_coeffs([1, 1], T=5)
    assert f.power(2).q_coeffs() == [1, 2, 1, 0, 0]
    assert (f.power(-2) * f.power(2)) == QSeries.one(5 * SCALE)


def test_zero_coefficients_are_dropped():
    f = QSeries({0: 1, SCALE: 0, 2 * SCALE: Fraction(2, 2)}, 3 * SCALE)
    assert list(f.exponents()) == [0, 2 * SCALE]
    assert isinstance(f.coeff(2 * SCALE), Fraction)


def test_to_string():
    f = QSeries({0: 1, SCALE: -1, 8: Fraction(1, 2)}, 2 * SCALE)
    assert f.to_string() == '1 + 1/2*q^(1/3) - q + O(q^2)'


def _random_series(rng, steps=(8, 12, 24), terms=5):
    """Series with a nonzero leading term, negative or fractional exponents."""
    step = int(rng.choice(steps))
    start = int(rng.integers(-2, 2)) * step
    coeffs = {start: Fraction(int(rng.choice([-2, -1, 1, 3])), int(rng.integers(1, 4)))}
    for k in range(1, terms):
        coeffs[start + k * step] = Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4)))
    return QSeries(coeffs, start + 6 * SCALE)


def _agree(a, b):
    T = min(a.order, b.order)
    return a.truncate(T) == b.truncate(T)


@pytest.mark.parametrize('seed', range(8))
def test_ring_axioms(seed):
    rng = np.random.default_rng(seed)
    f, g, h = (_random_series(rng) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert _agree(f * (g + h), f * g + f * h)
    assert (f + g) + h == f + (g + h)
    assert (f - f).is_zero()


def test_inverse_of_polynomial():
    f = QSeries.from_q_coeffs([1, -2, 0, 1], T=12)
    assert f * f.inverse() == QSeries.one(12 * SCALE)
    assert f.inverse().inverse() == f
    assert f.inverse().q_coeffs()[:5] == [1, 2, 4, 7, 12]


def test_sieve_projections():
    f = QSeries.from_q_coeffs([1, -2, 0, 5, Fraction(1, 2), 3, -1, 7], start=-2)
    g = QSeries.from_q_coeffs([4, 0, 1, 1, -3, 2, 2, 9], start=-2)
    for r in range(3):
        assert (f + g).sieve(3, r) == f.sieve(3, r) + g.sieve(3, r)
        assert f.sieve(3, r).sieve(3, r) == f.sieve(3, r)
        assert f.sieve(3, r).sieve(3, r + 1).is_zero()
    assert f.sieve(3, 0) + f.sieve(3, 1) + f.sieve(3, 2) == f
