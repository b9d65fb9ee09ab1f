import time
import logging
from datetime import timedelta

import numpy as np

from qmock.completion.evaluate import UpperHalfPoint
from qmock.errors import QMockConfigError

logger = logging.getLogger(__name__)

# sampling below this imaginary part makes the lattice sums slow
SAFE_MIN_IMAG = 0.5


def timer(start, what='computation'):
    '''A helper function to log a time elapsed statement

    Args:
        start (float): time.time() at the start
        what (str): label for the log line

    '''
    elapsed = time.time() - start
    logger.debug('%s took %s', what, timedelta(seconds=elapsed))
    return elapsed


def _warn_below_window(v):
    if v < SAFE_MIN_IMAG:
        logger.warning(
            'evaluating with imaginary part down to %s, lattice sums will be large', v
        )


def sample_taus(seed=0, count=10, min_imag=0.5, max_imag=2.0):
    """Reproducible points with u in [-1/2, 1/2] and v in [min_imag, max_imag]."""
    if not 0 < min_imag <= max_imag:
        raise QMockConfigError(
            'imaginary window must satisfy 0 < min <= max, got [%s, %s]'
            % (min_imag, max_imag)
        )
    _warn_below_window(min_imag)
    rng = np.random.default_rng(seed)
    us = rng.uniform(-0.5, 0.5, size=count)
    vs = rng.uniform(min_imag, max_imag, size=count)
    return [UpperHalfPoint(float(u), float(v)) for u, v in zip(us, vs)]


def parse_tau(text):
    """'re,im' -> UpperHalfPoint."""
    try:
        re_part, im_part = (float(x) for x in text.split(','))
    except ValueError:
        raise QMockConfigError('tau must be given as <re>,<im>, got %r' % text)
    if im_part <= 0:
        raise QMockConfigError('tau must lie in the upper half plane, got %r' % text)
    _warn_below_window(im_part)
    return UpperHalfPoint(re_part, im_part)
