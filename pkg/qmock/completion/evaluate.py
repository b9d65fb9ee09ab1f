"""Point values of q-series and of the classical theta and eta functions."""
import math
import logging
from dataclasses import dataclass

import numpy as np

from qmock.errors import EvaluationFailure
from qmock.settings import SCALE

logger = logging.getLogger(__name__)

TWO_PI_I = 2j * np.pi


# evaluated terms are pushed this far below the requested tolerance
TAIL_MARGIN = 1e-3


@dataclass(frozen=True)
class UpperHalfPoint:
    u: float
    v: float

    def __post_init__(self):
        if not self.v > 0:
            raise ValueError('tau must lie in the upper half plane, got v=%s' % self.v)

    @classmethod
    def from_complex(cls, tau):
        tau = complex(tau)
        return cls(tau.real, tau.imag)

    @property
    def tau(self):
        return complex(self.u, self.v)

    @property
    def q(self):
        return np.exp(TWO_PI_I * self.tau)

    def __complex__(self):
        return self.tau

    def __str__(self):
        return '%.6g%+.6gi' % (self.u, self.v)


def zeta(n, k=1):
    """exp(2 pi i k / n)."""
    return np.exp(TWO_PI_I * k / n)


def as_point(tau):
    if isinstance(tau, UpperHalfPoint):
        return tau
    return UpperHalfPoint.from_complex(tau)


@dataclass(frozen=True)
class CompletionValue:
    """A numeric value together with a bound on its truncation error."""

    value: complex
    est_tail: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'value', complex(self.value))
        object.__setattr__(self, 'est_tail', float(self.est_tail))
        if not (np.isfinite(self.value) and self.est_tail >= 0
                and math.isfinite(self.est_tail)):
            raise EvaluationFailure(
                'non-finite value %s (tail %s)' % (self.value, self.est_tail)
            )

    def __complex__(self):
        return self.value

    def __abs__(self):
        return abs(self.value)

    def _coerce(self, other):
        if isinstance(other, CompletionValue):
            return other
        return CompletionValue(other, 0.0)

    def __add__(self, other):
        other = self._coerce(other)
        return CompletionValue(self.value + other.value, self.est_tail + other.est_tail)

    __radd__ = __add__

    def __neg__(self):
        return CompletionValue(-self.value, self.est_tail)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        tail = (
            abs(self.value) * other.est_tail + abs(other.value) * self.est_tail
            + self.est_tail * other.est_tail
        )
        return CompletionValue(self.value * other.value, tail)

    __rmul__ = __mul__


def gaussian_cutoff(rate, tol, shift=0.0):
    """Index N >= 1 past which exp(-rate (K - shift)^2) stays below tol * TAIL_MARGIN."""
    target = -math.log(tol * TAIL_MARGIN)
    return max(1, int(math.ceil(math.sqrt(target / rate) + shift)))


def gaussian_tail(rate, start, weight=1.0, shift=0.0, terms=64):
    """sum_{K > start} weight(K) exp(-rate (K - shift)^2) for a polynomial weight."""
    total = 0.0
    for K in range(start + 1, start + 1 + terms):
        w = weight(K) if callable(weight) else weight
        total += w * math.exp(-rate * (K - shift) ** 2)
    return total


def evaluate_series(series, tau):
    """sum c_e q^(e/24) at q = exp(2 pi i tau).

    The tail estimate takes the largest coefficient seen as a bound on the
    unknown ones and sums the geometric remainder beyond the horizon. It is a
    heuristic: the series here have subexponential coefficient growth.
    """
    point = as_point(tau)
    if series.is_zero():
        return CompletionValue(0j, 0.0)
    exponents = np.array([e for e, _ in series.items()], dtype=float) / SCALE
    coeffs = np.array([float(c) for _, c in series.items()])
    terms = coeffs * np.exp(TWO_PI_I * point.tau * exponents)
    value = complex(
        math.fsum(terms.real), math.fsum(terms.imag)
    )
    r = math.exp(-2 * math.pi * point.v / SCALE)
    est_tail = float(np.max(np.abs(coeffs))) * r ** series.order / (1 - r)
    return CompletionValue(value, est_tail)


def eta_numeric(tau, tol=1e-14):
    """Dedekind eta by the pentagonal number sum q^(1/24) sum (-1)^n q^(n(3n-1)/2)."""
    point = as_point(tau)
    # |q^(n(3n-1)/2)| <= exp(-3 pi v (|n| - 1/2)^2)
    rate = 3 * math.pi * point.v
    N = gaussian_cutoff(rate, tol, shift=0.5)
    n = np.arange(-N, N + 1)
    terms = np.where(n % 2, -1.0, 1.0) * np.exp(
        TWO_PI_I * point.tau * (n * (3 * n - 1) / 2 + 1 / 24)
    )
    value = complex(math.fsum(terms.real), math.fsum(terms.imag))
    est_tail = 2 * gaussian_tail(rate, N, shift=0.5) * math.exp(-2 * math.pi * point.v / 24)
    return CompletionValue(value, est_tail)


def theta_numeric(tau, tol=1e-14):
    """Theta(tau) = sum_n q^(n^2)."""
    point = as_point(tau)
    rate = 2 * math.pi * point.v
    N = gaussian_cutoff(rate, tol)
    n = np.arange(1, N + 1)
    terms = np.exp(TWO_PI_I * point.tau * n * n)
    value = 1 + 2 * complex(math.fsum(terms.real), math.fsum(terms.imag))
    return CompletionValue(value, 2 * gaussian_tail(rate, N))


def theta_half_numeric(j, tau, tol=1e-14):
    """Theta((tau + j) / 2)."""
    return theta_numeric((complex(as_point(tau).tau) + j) / 2, tol=tol)


def theta_odd_eighths_numeric(tau, tol=1e-14):
    """2 sum_{n>=0} q^((2n+1)^2 / 8)."""
    point = as_point(tau)
    # (2n+1)^2 / 8 >= n^2 / 2
    rate = math.pi * point.v
    N = gaussian_cutoff(rate, tol)
    n = np.arange(0, N + 1)
    terms = np.exp(TWO_PI_I * point.tau * (2 * n + 1) ** 2 / 8)
    value = 2 * complex(math.fsum(terms.real), math.fsum(terms.imag))
    return CompletionValue(value, 2 * gaussian_tail(rate, N))


def E_cal(tau, tol=1e-14):
    """eta^6(2 tau) / eta^4(tau)."""
    point = as_point(tau)
    num = eta_numeric(2 * point.tau, tol=tol)
    den = eta_numeric(point.tau, tol=tol)
    value = num.value ** 6 / den.value ** 4
    rel = 6 * num.est_tail / abs(num.value) + 4 * den.est_tail / abs(den.value)
    return CompletionValue(value, abs(value) * rel)


def T_vector(tau, tol=1e-14):
    """(Theta(tau/2), Theta((tau+1)/2), 2 sum q^((2n+1)^2/8)) as a numpy vector."""
    return np.array([
        theta_half_numeric(0, tau, tol).value,
        theta_half_numeric(1, tau, tol).value,
        theta_odd_eighths_numeric(tau, tol).value,
    ])
