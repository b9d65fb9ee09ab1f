"""Incomplete gamma pieces of the non-holomorphic kernels.

Everything goes through the complementary error function,
Gamma(1/2, u) = sqrt(pi) erfc(sqrt(u)), which is accurate to well below 1e-12
absolute on the argument range used here. The ``*_scaled`` variants carry a
factor exp(u) so that large arguments can be combined with growing
exponentials without overflow.
"""
import logging

import numpy as np
from scipy import special

logger = logging.getLogger(__name__)

SQRT_PI = np.sqrt(np.pi)


def gamma_half(u):
    """Upper incomplete gamma Gamma(1/2, u) for u >= 0."""
    u = np.asarray(u, dtype=float)
    if np.any(u < 0):
        raise ValueError('Gamma(1/2, u) needs u >= 0')
    return SQRT_PI * special.erfc(np.sqrt(u))


def gamma_half_scaled(u):
    """exp(u) Gamma(1/2, u)."""
    u = np.asarray(u, dtype=float)
    return SQRT_PI * special.erfcx(np.sqrt(u))


def beta_func(x):
    """beta(x) = int_x^inf w^(-1/2) exp(-pi w) dw = Gamma(1/2, pi x) / sqrt(pi)."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError('beta(x) needs x >= 0')
    return special.erfc(np.sqrt(np.pi * x))


def E_func(w):
    """E(w) = sgn(w) (1 - beta(w^2)) = 2 int_0^w exp(-pi t^2) dt."""
    w = np.asarray(w, dtype=float)
    return np.sign(w) * (1.0 - beta_func(w * w))


def erfc_scaled_abs(x):
    """erfcx(sqrt(pi) |x|), so that 1 - E(x) sgn(x) = erfcx(...) exp(-pi x^2)."""
    return special.erfcx(SQRT_PI * np.abs(np.asarray(x, dtype=float)))
