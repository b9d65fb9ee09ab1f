"""Non-holomorphic parts and the completed functions.

The non-holomorphic sums use Gamma(1/2, 6 pi x^2 v) q^(-3x^2/2), which is
evaluated as sqrt(pi) erfcx(sqrt(6 pi v) |x|) exp(-3 pi x^2 v - 3 pi i x^2 u)
so nothing overflows for small v. Holomorphic parts are the exact series of
qmock.genfun and qmock.indefinite evaluated at q = exp(2 pi i tau).
"""
import math
import logging
from functools import lru_cache

import numpy as np
from scipy import integrate, special

from qmock.completion.evaluate import as_point, CompletionValue, evaluate_series, \
    gaussian_cutoff, gaussian_tail, theta_half_numeric, E_cal
from qmock.completion.vartheta import vartheta_numeric
from qmock.genfun import A_series, F1holo_series, F2holo_series, F3holo_series
from qmock.indefinite import H_series, MAIN_FORM, MAIN_CHARACTERISTIC
from qmock.settings import SCALE, NUMERIC_PARAMETERS, get_param

logger = logging.getLogger(__name__)

THIRD = SCALE // 3
# e^(-pi i / 3) / 2
HALF_PHASE = np.exp(-1j * np.pi / 3) / 2

DEFAULT_TOL = 1e-12


def default_terms():
    return get_param(
        param_name='holomorphic_terms',
        process_config={},
        default_config=NUMERIC_PARAMETERS,
        prefix='NUMERIC_'
    )


@lru_cache(maxsize=None)
def holomorphic_series(tag, terms):
    """Exact holomorphic part of a completed function to q^terms."""
    T = terms * SCALE
    builders = {
        'H': lambda: H_series(T - THIRD).shift(THIRD),
        'A': lambda: A_series(T - THIRD).shift(THIRD),
        'F1': lambda: F1holo_series(T),
        'F2': lambda: F2holo_series(T),
        'F3': lambda: F3holo_series(T),
    }
    if tag not in builders:
        raise ValueError('no holomorphic part named %s' % tag)
    logger.debug('expanding holomorphic part %s to q^%s', tag, terms)
    return builders[tag]()


def holomorphic_value(tag, tau, terms=None):
    return evaluate_series(holomorphic_series(tag, terms or default_terms()), tau)


# --- unary incomplete gamma sums -------------------------------------------

def _fminus_data(j, n):
    """Shifted index x and coefficient of sgn(x) for F_j^-."""
    if j == 1:
        return n + 1 / 6, -np.ones(n.shape)
    if j == 2:
        return n + 1 / 3, np.where(n % 2, -1.0, 1.0)
    if j == 3:
        return n + 1 / 3, -np.ones(n.shape)
    raise ValueError('F_minus index must be 1, 2 or 3, got %s' % j)


def _gamma_weights(x, point):
    """Gamma(1/2, 6 pi x^2 v) q^(-3x^2/2) / sqrt(pi), without the sign."""
    u, v = point.u, point.v
    return special.erfcx(math.sqrt(6 * math.pi * v) * np.abs(x)) * np.exp(
        -3 * math.pi * x * x * v - 3j * math.pi * x * x * u
    )


def F_minus(j, tau, N=None, tol=DEFAULT_TOL):
    """F_j^- = c_j (2/sqrt(pi)) sum_n sgn(x) Gamma(1/2, 6 pi x^2 v) q^(-3x^2/2).

    x = n + 1/6 for j = 1 and n + 1/3 otherwise; x never vanishes.
    """
    point = as_point(tau)
    rate = 3 * math.pi * point.v
    if N is None:
        N = gaussian_cutoff(rate, tol, shift=0.5)
    n = np.arange(-N, N + 1)
    x, coeff = _fminus_data(j, n)
    terms = 2 * coeff * np.sign(x) * _gamma_weights(x, point)
    value = complex(math.fsum(terms.real), math.fsum(terms.imag))
    return CompletionValue(value, 4 * gaussian_tail(rate, N, shift=0.5))


def _unary_theta(j, w, N=30):
    """t_j(w), the weight 3/2 unary theta function behind F_j^-."""
    n = np.arange(-N, N + 1)
    x, coeff = _fminus_data(j, n)
    return complex(np.sum(coeff * x * np.exp(3j * math.pi * x * x * w)))


def F_minus_integral(j, tau, limit=400):
    """F_j^- from its period integral -2i sqrt(3) int_{-conj(tau)}^{i inf}.

    With w = -u + i(v + t) the integral becomes
    2 sqrt(3) int_0^inf t_j(w) / sqrt(2v + t) dt, evaluated by adaptive
    quadrature on the real and imaginary parts separately.
    """
    point = as_point(tau)
    u, v = point.u, point.v

    def integrand(t, part):
        value = _unary_theta(j, complex(-u, v + t)) / math.sqrt(2 * v + t)
        return value.real if part == 'real' else value.imag

    kwargs = dict(limit=limit, epsabs=1e-13, epsrel=1e-12)
    re, _ = integrate.quad(integrand, 0, np.inf, args=('real',), **kwargs)
    im, _ = integrate.quad(integrand, 0, np.inf, args=('imag',), **kwargs)
    return 2 * math.sqrt(3) * complex(re, im)


# --- binary non-holomorphic parts ------------------------------------------

def _binary_cutoff(point, tol):
    # gamma side: |x| >= 2|r| - 2, theta side: |k| >= 2|n| - 1
    return max(
        gaussian_cutoff(12 * math.pi * point.v, tol, shift=1.0),
        gaussian_cutoff(4 * math.pi * point.v, tol, shift=0.5),
    )


def _binary_terms(eps, point, N):
    """Terms of sum_n q^((2n+eps+1)^2/2) and of sum_r sgn(x) Gamma(...) q^(...)."""
    n = np.arange(-N - 1, N + 1)
    k = 2 * n + eps + 1
    theta_terms = np.exp(1j * math.pi * point.tau * k * k)
    r = np.arange(-N, N + 1)
    x = 2 * r + eps + 1 / 3
    gamma_terms = np.sign(x) * _gamma_weights(x, point)
    return theta_terms, gamma_terms


def _binary_tail(point, N, theta_sum, gamma_sum):
    theta_tail = 2 * gaussian_tail(math.pi * point.v, 2 * N)
    gamma_tail = 2 * gaussian_tail(12 * math.pi * point.v, N, shift=1.0)
    return (
        abs(theta_sum) * gamma_tail + abs(gamma_sum) * theta_tail
        + theta_tail * gamma_tail
    )


def _fsum(values):
    return complex(math.fsum(values.real), math.fsum(values.imag))


def H_minus(tau, N=None, tol=DEFAULT_TOL):
    """Non-holomorphic part of H-hat.

    The double sum over (n, r) factors into a theta sum times an incomplete
    gamma sum for each parity eps.
    """
    point = as_point(tau)
    N = N or _binary_cutoff(point, tol)
    value, tail = 0j, 0.0
    for eps in (0, 1):
        theta_terms, gamma_terms = _binary_terms(eps, point, N)
        theta_sum, gamma_sum = _fsum(theta_terms), _fsum(gamma_terms)
        value -= (-1) ** eps * theta_sum * gamma_sum
        tail += _binary_tail(point, N, theta_sum, gamma_sum)
    return CompletionValue(value, tail)


def A_minus(tau, N=None, tol=DEFAULT_TOL):
    """Non-holomorphic part of A-hat, summed over the full (n, r) grid."""
    point = as_point(tau)
    N = N or _binary_cutoff(point, tol)
    value, tail = 0j, 0.0
    for eps in (0, 1):
        theta_terms, gamma_terms = _binary_terms(eps, point, N)
        value -= (-1) ** eps * _fsum(np.outer(theta_terms, gamma_terms).ravel())
        tail += _binary_tail(point, N, _fsum(theta_terms), _fsum(gamma_terms))
    return CompletionValue(value, tail)


def A_star(tau, tol=DEFAULT_TOL):
    """-(Theta(tau/2) F_2^- + Theta((tau+1)/2) F_3^-) / 4."""
    theta_part = (
        theta_half_numeric(0, tau) * F_minus(2, tau, tol=tol)
        + theta_half_numeric(1, tau) * F_minus(3, tau, tol=tol)
    )
    return theta_part * -0.25


def vartheta_main(tau, R=None, tol=None):
    return vartheta_numeric(MAIN_FORM, MAIN_CHARACTERISTIC, tau, R=R, tol=tol)


def H_star(tau, terms=None, R=None):
    """(e^(-pi i/3) / 2) vartheta(tau) - q^(1/3) H(q), the reconstructed H^-."""
    return vartheta_main(tau, R=R) * HALF_PHASE - holomorphic_value('H', tau, terms)


# --- completions -------------------------------------------------------------

def H_hat(tau, terms=None, N=None):
    return holomorphic_value('H', tau, terms) + H_minus(tau, N)


def A_hat(tau, terms=None, N=None):
    return holomorphic_value('A', tau, terms) + A_minus(tau, N)


def M_hat(tau, terms=None, N=None):
    return H_hat(tau, terms, N) - A_hat(tau, terms, N)


def F_hat(j, tau, terms=None, N=None):
    return holomorphic_value('F%s' % j, tau, terms) + F_minus(j, tau, N)


def F_hat_vector(tau, terms=None, N=None):
    return np.array([F_hat(j, tau, terms, N).value for j in (1, 2, 3)])


def A_hat_eta_theta(tau, terms=None, N=None):
    """2 eta^6(2tau)/eta^4(tau) - (Theta(tau/2) F2-hat + Theta((tau+1)/2) F3-hat) / 4."""
    theta_part = (
        theta_half_numeric(0, tau) * F_hat(2, tau, terms, N)
        + theta_half_numeric(1, tau) * F_hat(3, tau, terms, N)
    )
    return E_cal(tau) * 2 - theta_part * 0.25


def H_minus_unsplit(tau, N=None, tol=DEFAULT_TOL):
    """H^- before the parity split of r:

        -sum_{n,r} sgn(r + 1/3) (-1)^r beta(6 (r + 1/3)^2 v)
                   q^(2 (n + (r+1)/2)^2 - 3/2 (r + 1/3)^2).
    """
    point = as_point(tau)
    N = N or 2 * _binary_cutoff(point, tol)
    r = np.arange(-N, N + 1)
    x = r + 1 / 3
    gamma_terms = np.where(r % 2, -1.0, 1.0) * np.sign(x) * _gamma_weights(x, point)
    n = np.arange(-2 * N, 2 * N + 1)
    shifted = n[:, None] + (r[None, :] + 1) / 2
    theta_terms = np.exp(2j * np.pi * point.tau * 2 * shifted * shifted)
    value = -_fsum((theta_terms * gamma_terms[None, :]).ravel())
    tail = 2 * _binary_tail(point, N // 2, _fsum(theta_terms[:, 0]), _fsum(gamma_terms))
    return CompletionValue(value, tail)
