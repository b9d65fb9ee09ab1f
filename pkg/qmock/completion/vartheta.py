"""Lattice sums for indefinite theta functions of binary forms.

    vartheta_{a,b}(tau) = sum_{n in a + Z^2} (rho^c1 - rho^c2)(n; tau)
                          e^(2 pi i B(b, n)) q^(Q(n))

with rho^c(n; tau) = E(B(c, n) sqrt(v) / sqrt(-Q(c))). The kernel difference is
written as (sgn x1 - sgn x2) minus two scaled erfc corrections so that every
exponent that is evaluated has a nonpositive real part.
"""
import math
import logging
from fractions import Fraction

import numpy as np

from qmock.completion.evaluate import as_point, CompletionValue, TAIL_MARGIN
from qmock.completion.special import erfc_scaled_abs
from qmock.errors import InvalidCharacteristic, RadiusTooSmall
from qmock.indefinite import MAIN_FORM, validate_characteristic

logger = logging.getLogger(__name__)

# radius never grows beyond this when chosen automatically
MAX_RADIUS = 200


def _reduce(a):
    """Representative of a + Z^2 in [-1/2, 1/2)^2 together with the shift."""
    shift = tuple(math.floor(x + Fraction(1, 2)) for x in a)
    return tuple(x - s for x, s in zip(a, shift)), shift


def _decay_rate(form, chars, v):
    """gamma with |summand(n)| <= 4 exp(-gamma |n|^2) for n in a + Z^2."""
    rates = []
    for c in (chars.c1, chars.c2):
        majorant = np.array(form.majorant(c), dtype=float)
        rates.append(math.pi * v * float(np.linalg.eigvalsh(majorant)[0]))
        # the sign difference lives between the two walls B(c_i, n) = 0;
        # Q is smallest relative to |n|^2 on a wall direction
        ac = form.apply(c)
        wall = (-ac[1], ac[0])
        norm = float(wall[0] ** 2 + wall[1] ** 2)
        rates.append(2 * math.pi * v * float(form.Q(wall)) / norm)
    gamma = min(rates)
    if not gamma > 0:
        raise InvalidCharacteristic('lattice sum has no Gaussian decay, rate %s' % gamma)
    return gamma


def lattice_tail(gamma, R):
    """Bound on the summands with max-norm index above R.

    The shell |m|_inf = K holds 8K points with |n| >= K - 1/2.
    """
    total = 0.0
    for K in range(R + 1, R + 65):
        total += 32 * K * math.exp(-gamma * (K - 0.5) ** 2)
    return total


def choose_radius(gamma, tol):
    R = 1
    while lattice_tail(gamma, R) > tol * TAIL_MARGIN:
        R += 1
        if R > MAX_RADIUS:
            raise RadiusTooSmall(
                'no radius up to %s meets tolerance %s' % (MAX_RADIUS, tol)
            )
    return R


def _check_numeric_chars(form, chars):
    validate_characteristic(form, chars)
    for c in (chars.c1, chars.c2):
        if form.Q(c) == 0:
            raise InvalidCharacteristic(
                'lattice evaluation supports Q(c) < 0 only, got c=%s' % (c,)
            )


def vartheta_numeric(form, chars, tau, R=None, tol=None):
    """Truncated lattice sum over |n - a_reduced|_inf <= R with tail estimate.

    Args:
        form: QuadraticForm2
        chars: ThetaCharacteristic, validated against the cone conditions
        tau: UpperHalfPoint or complex
        R: lattice radius, chosen from ``tol`` when omitted
        tol: requested accuracy; with an explicit R a larger tail raises
            RadiusTooSmall
    """
    _check_numeric_chars(form, chars)
    point = as_point(tau)
    u, v = point.u, point.v
    gamma = _decay_rate(form, chars, v)
    if R is None:
        R = choose_radius(gamma, tol or 1e-10)
    if R < 1:
        raise ValueError('lattice radius must be at least 1, got %s' % R)
    est_tail = lattice_tail(gamma, R)
    if tol is not None and est_tail > tol:
        raise RadiusTooSmall(
            'tail %.3g at radius %s exceeds tolerance %.3g' % (est_tail, R, tol)
        )

    a_red, _ = _reduce(chars.a)
    A = np.array(form.matrix, dtype=float)
    m = np.arange(-R, R + 1, dtype=float)
    n1, n2 = np.meshgrid(m + float(a_red[0]), m + float(a_red[1]), indexing='ij')
    n = np.stack([n1.ravel(), n2.ravel()])
    An = A @ n
    Qn = 0.5 * np.einsum('ij,ij->j', n, An)
    Bbn = np.array([float(x) for x in chars.b]) @ An

    exponent = 2j * np.pi * (Bbn + Qn * u) - 2 * np.pi * v * Qn
    total = np.zeros(Qn.shape, dtype=complex)
    signs = []
    for c, weight in ((chars.c1, 1.0), (chars.c2, -1.0)):
        cf = np.array([float(x) for x in c])
        x = (cf @ An) * math.sqrt(v / -float(form.Q(c)))
        signs.append(np.sign(x))
        total -= weight * signs[-1] * erfc_scaled_abs(x) * np.exp(exponent - np.pi * x * x)
    s1, s2 = signs
    inside = s1 != s2
    total[inside] += (s1[inside] - s2[inside]) * np.exp(exponent[inside])

    value = complex(math.fsum(total.real), math.fsum(total.imag))
    logger.debug(
        'vartheta at %s: radius %s, decay %.4g, tail %.3g', point, R, gamma, est_tail
    )
    return CompletionValue(value, est_tail)


def vartheta_point(chars, form=MAIN_FORM, R=None, tol=None):
    """Curried evaluator tau -> vartheta value, for the transformation checks."""

    def evaluate(tau):
        return vartheta_numeric(form, chars, tau, R=R, tol=tol).value

    return evaluate
