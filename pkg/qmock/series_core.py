"""Exact truncated q-series on the 1/24 exponent grid.

A QSeries stores integer exponents counted in units of 1/24 together with
exact rational coefficients and a correctness horizon ``order``: every
coefficient with exponent below ``order`` is exact, nothing at or beyond it is
known. No floating point is used in this module.
"""
import math
import logging
from fractions import Fraction
from functools import reduce
from types import MappingProxyType

from qmock.errors import ZeroLeadingTerm, OffGrid, NonIntegerExponents, \
    BeyondOrder
from qmock.settings import SCALE

logger = logging.getLogger(__name__)


def _exact(value):
    """Integers stay Python ints, everything else becomes a Fraction."""
    if isinstance(value, bool):
        raise TypeError('booleans are not series coefficients')
    if isinstance(value, int):
        return value
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def _grid_step(exponents, *extra):
    return reduce(math.gcd, extra, reduce(math.gcd, exponents, 0)) or 1


class QSeries():
    """Immutable truncated series sum c_e q^(e/24) + O(q^(order/24))."""

    __slots__ = ('_coeffs', '_order')

    scale = SCALE

    def __init__(self, coeffs=None, order=0):
        if isinstance(order, bool) or not isinstance(order, int):
            raise TypeError('order must be an integer scaled exponent')
        cleaned = {}
        for exponent, value in (coeffs or {}).items():
            if exponent >= order:
                continue
            value = _exact(value)
            if value != 0:
                cleaned[int(exponent)] = value
        self._coeffs = dict(sorted(cleaned.items()))
        self._order = order

    # --- construction ---------------------------------------------------

    @classmethod
    def monomial(cls, c, e, T):
        if c != 0 and not T > e:
            raise ValueError('horizon %s must exceed exponent %s' % (T, e))
        return cls({e: c}, T)

    @classmethod
    def zero(cls, T):
        return cls({}, T)

    @classmethod
    def one(cls, T):
        return cls({0: 1}, T)

    @classmethod
    def from_q_coeffs(cls, coeffs, T=None, start=0):
        """Build from a list of coefficients of q^start, q^(start+1), ...

        Args:
            coeffs: coefficients at consecutive integer powers of q
            T: horizon in powers of q, defaults to just past the last entry
            start: integer power of the first entry
        """
        T = start + len(coeffs) if T is None else T
        return cls(
            {(start + i) * SCALE: c for i, c in enumerate(coeffs)},
            T * SCALE
        )

    # --- inspection -----------------------------------------------------

    @property
    def coeffs(self):
        return MappingProxyType(self._coeffs)

    @property
    def order(self):
        return self._order

    def items(self):
        return self._coeffs.items()

    def exponents(self):
        return list(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def leading(self):
        """Lowest (exponent, coefficient) pair or None for the zero series."""
        for exponent, value in self._coeffs.items():
            return exponent, value
        return None

    def min_exponent(self):
        lead = self.leading()
        return self._order if lead is None else lead[0]

    def has_integer_exponents(self):
        return all(e % SCALE == 0 for e in self._coeffs)

    def coeff(self, e):
        if e >= self._order:
            raise BeyondOrder(
                'exponent %s/%s is at or beyond the horizon %s/%s' % (
                    e, SCALE, self._order, SCALE)
            )
        return Fraction(self._coeffs.get(e, 0))

    def q_coeffs(self, count=None):
        """Coefficients of q^0 .. q^(count-1) for integer-exponent series."""
        count = self._order // SCALE if count is None else count
        return [self.coeff(n * SCALE) for n in range(count)]

    # --- ring operations ------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        return QSeries({0: other}, self._order)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self._order, other._order)
        out = dict(self._coeffs)
        for exponent, value in other._coeffs.items():
            out[exponent] = out.get(exponent, 0) + value
        return QSeries(out, order)

    __radd__ = __add__

    def __neg__(self):
        return QSeries({e: -c for e, c in self._coeffs.items()}, self._order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale_by(other)
        order = min(
            self._order + other.min_exponent(),
            other._order + self.min_exponent()
        )
        out = {}
        right = list(other._coeffs.items())
        for e1, c1 in self._coeffs.items():
            limit = order - e1
            for e2, c2 in right:
                if e2 >= limit:
                    break
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return QSeries(out, order)

    def __rmul__(self, other):
        return self.scale_by(other)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    __hash__ = None

    def scale_by(self, c):
        c = _exact(c)
        return QSeries({e: c * v for e, v in self._coeffs.items()}, self._order)

    def power(self, n):
        if n < 0:
            return self.inverse().power(-n)
        if n == 0:
            return QSeries.one(self._order)
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def inverse(self):
        lead = self.leading()
        if lead is None:
            raise ZeroLeadingTerm('series is zero up to its horizon %s' % self._order)
        e0, c0 = lead
        relative = self._order - e0
        step = _grid_step([e - e0 for e in self._coeffs])
        size = -(-relative // step)
        unit = c0 in (1, -1)
        tail = [
            ((e - e0) // step, (v * c0) if unit else Fraction(v) / c0)
            for e, v in self._coeffs.items() if e != e0
        ]
        values = [0] * size
        values[0] = 1
        for n in range(1, size):
            acc = 0
            for k, h in tail:
                if k > n:
                    break
                acc += h * values[n - k]
            values[n] = -acc
        inv_c0 = c0 if unit else Fraction(1) / c0
        return QSeries(
            {-e0 + n * step: v * inv_c0 for n, v in enumerate(values)},
            relative - e0
        )

    # --- exponent maps --------------------------------------------------

    def shift(self, e):
        """Multiply by q^(e/24); the horizon moves along."""
        return QSeries({x + e: v for x, v in self._coeffs.items()}, self._order + e)

    def truncate(self, T):
        return QSeries(self._coeffs, min(self._order, T))

    def substitute_power(self, r):
        r = Fraction(r)
        if r <= 0:
            raise ValueError('substitution power must be positive, got %s' % r)
        out = {}
        for exponent, value in self._coeffs.items():
            scaled = exponent * r
            if scaled.denominator != 1:
                raise OffGrid(
                    'exponent %s/%s times %s leaves the 1/%s grid' % (
                        exponent, SCALE, r, SCALE)
                )
            out[int(scaled)] = value
        return QSeries(out, math.ceil(self._order * r))

    def _require_integer(self, what):
        if not self.has_integer_exponents():
            raise NonIntegerExponents('%s needs integer exponents' % what)

    def sieve(self, N, r):
        if N <= 0:
            raise ValueError('modulus must be positive, got %s' % N)
        self._require_integer('sieve')
        return QSeries(
            {e: v for e, v in self._coeffs.items() if (e // SCALE - r) % N == 0},
            self._order
        )

    def flip(self):
        """q -> -q, only defined on integer exponents."""
        self._require_integer('q -> -q')
        return QSeries(
            {e: (-v if (e // SCALE) % 2 else v) for e, v in self._coeffs.items()},
            self._order
        )

    # --- binomial factors -----------------------------------------------

    def _dense(self, k):
        base = self.min_exponent()
        step = _grid_step([e - base for e in self._coeffs], k)
        size = max(0, -(-(self._order - base) // step))
        values = [0] * size
        for e, v in self._coeffs.items():
            values[(e - base) // step] = v
        return base, step, values

    def mul_binomial(self, c, k):
        """Multiply by (1 + c q^(k/24)) for k > 0."""
        if k <= 0:
            raise ValueError('binomial exponent must be positive, got %s' % k)
        if self.is_zero():
            return self
        c = _exact(c)
        base, step, values = self._dense(k)
        ks = k // step
        for i in range(len(values) - 1, ks - 1, -1):
            if values[i - ks]:
                values[i] += c * values[i - ks]
        return QSeries({base + i * step: v for i, v in enumerate(values)}, self._order)

    def div_binomial(self, c, k):
        """Divide by (1 + c q^(k/24)) for k > 0."""
        if k <= 0:
            raise ValueError('binomial exponent must be positive, got %s' % k)
        if self.is_zero():
            return self
        c = _exact(c)
        base, step, values = self._dense(k)
        ks = k // step
        for i in range(ks, len(values)):
            if values[i - ks]:
                values[i] -= c * values[i - ks]
        return QSeries({base + i * step: v for i, v in enumerate(values)}, self._order)

    # --- display ----------------------------------------------------------

    def to_string(self, var='q', limit=12):
        def power(e):
            x = Fraction(e, SCALE)
            if x == 0:
                return ''
            if x == 1:
                return var
            return '%s^%s' % (var, x if x.denominator == 1 else '(%s)' % x)

        terms = []
        for e, v in list(self._coeffs.items())[:limit]:
            p = power(e)
            if p and v == 1:
                terms.append(p)
            elif p and v == -1:
                terms.append('-' + p)
            else:
                terms.append('%s%s' % (v, '*' + p if p else ''))
        if len(self._coeffs) > limit:
            terms.append('...')
        terms.append('O(%s)' % (power(self._order) or '1'))
        return ' + '.join(terms).replace('+ -', '- ')

    def __repr__(self):
        return 'QSeries(%s)' % self.to_string()


def monomial(c, e, T):
    return QSeries.monomial(c, e, T)


def add(f, g):
    return f + g


def mul(f, g):
    return f * g


def neg(f):
    return -f


def inverse(f):
    return f.inverse()


def substitute_power(f, r):
    return f.substitute_power(r)


def sieve(f, N, r):
    return f.sieve(N, r)


def coeff(f, e):
    return f.coeff(e)
