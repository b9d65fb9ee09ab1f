import math
import logging
from dataclasses import dataclass
from functools import lru_cache

from qmock.errors import DivergentSpec
from qmock.series_core import QSeries
from qmock.settings import SCALE
from qmock.verify.report import compare_series, merge_reports

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PochSpec:
    """(a; q^step)_length with a = sign * q^alpha, exponents in 1/24 units."""

    sign: int
    alpha: int
    step: int
    length: float = math.inf

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError('sign must be +1 or -1, got %s' % self.sign)
        if self.step <= 0:
            raise ValueError('step must be positive, got %s' % self.step)
        if self.length != math.inf and (self.length < 0 or self.length % 1):
            raise ValueError('length must be a nonnegative integer or inf')


def times_binomial(series, c, k):
    """series * (1 + c q^k) for any integer k."""
    if k > 0:
        return series.mul_binomial(c, k)
    if k == 0:
        return series.scale_by(1 + c)
    # 1 + c q^k = c q^k (1 + c q^-k) since c = +-1
    return series.mul_binomial(c, -k).scale_by(c).shift(k)


def pochhammer(spec, T):
    """Truncated product prod_j (1 - sign q^(alpha + j*step)) to horizon T.

    Factors of an infinite product whose exponent reaches T are 1 modulo the
    horizon and are dropped.
    """
    if spec.length == math.inf and spec.alpha < 0:
        raise DivergentSpec(
            'infinite product needs alpha >= 0, got alpha=%s' % spec.alpha
        )
    out = QSeries.one(T)
    j = 0
    while j < spec.length:
        exponent = spec.alpha + j * spec.step
        if exponent >= T and exponent > 0:
            if spec.length == math.inf:
                break
        else:
            out = times_binomial(out, -spec.sign, exponent)
        j += 1
    return out


def q_poch(sign, alpha_q, step_q, T, length=math.inf):
    """pochhammer with alpha and step given in integer powers of q."""
    return pochhammer(PochSpec(sign, alpha_q * SCALE, step_q * SCALE, length), T)


@lru_cache(maxsize=None)
def eta_series(m, T):
    """q^(m/24) (q^m; q^m)_inf, the expansion of eta(m tau)."""
    if m <= 0:
        raise ValueError('eta argument multiplier must be positive, got %s' % m)
    return q_poch(1, m, m, T - m).shift(m)


def eta_quotient(powers, T):
    """prod_m eta(m tau)^powers[m] truncated at T.

    Each factor is normalised to leading coefficient 1 before the product is
    formed, so the horizon of the result is exactly T.
    """
    lead = sum(m * p for m, p in powers.items())
    relative = T - lead
    out = QSeries.one(relative)
    for m, p in sorted(powers.items()):
        if p == 0:
            continue
        unit = eta_series(m, relative + m).shift(-m)
        out = out * unit.power(p)
    return out.shift(lead)


def eta6_over_eta4(T):
    """eta^6(2 tau) / eta^4(tau)."""
    return eta_quotient({2: 6, 1: -4}, T)


@lru_cache(maxsize=None)
def theta_series(T):
    """Theta(tau) = sum_n q^(n^2)."""
    coeffs = {}
    n = 0
    while SCALE * n * n < T:
        coeffs[SCALE * n * n] = 1 if n == 0 else 2
        n += 1
    return QSeries(coeffs, T)


@lru_cache(maxsize=None)
def theta_half(j, T):
    """Theta((tau + j)/2) = sum_n (-1)^(j n) q^(n^2/2) for j in {0, 1}."""
    if j not in (0, 1):
        raise ValueError('j must be 0 or 1, got %s' % j)
    coeffs = {}
    n = 0
    while SCALE // 2 * n * n < T:
        sign = -1 if (j and n % 2) else 1
        coeffs[SCALE // 2 * n * n] = sign * (1 if n == 0 else 2)
        n += 1
    return QSeries(coeffs, T)


@lru_cache(maxsize=None)
def theta_odd_eighths(T):
    """2 sum_{n>=0} q^((2n+1)^2/8)."""
    coeffs = {}
    n = 0
    while 3 * (2 * n + 1) ** 2 < T:
        coeffs[3 * (2 * n + 1) ** 2] = 2
        n += 1
    return QSeries(coeffs, T)


def odd_square_series(T):
    """sum_{n>=0} q^((2n+1)^2)."""
    coeffs = {}
    n = 0
    while SCALE * (2 * n + 1) ** 2 < T:
        coeffs[SCALE * (2 * n + 1) ** 2] = 1
        n += 1
    return QSeries(coeffs, T)


def check_theta_eta_identity(T):
    return compare_series(
        'eq2.4a', theta_series(T), eta_quotient({2: 5, 1: -2, 4: -2}, T)
    )


def check_shifted_theta_identity(T):
    return compare_series(
        'eq2.4b', theta_series(T).flip(), eta_quotient({1: 2, 2: -1}, T)
    )


def check_odd_square_identity(T):
    return compare_series(
        'eq2.4c', eta_quotient({16: 2, 8: -1}, T), odd_square_series(T)
    )


def check_ono_identities(T):
    """All three eta-theta identities, coefficientwise to horizon T."""
    return merge_reports('eq2.4', [
        check_theta_eta_identity(T),
        check_shifted_theta_identity(T),
        check_odd_square_identity(T)
    ])
