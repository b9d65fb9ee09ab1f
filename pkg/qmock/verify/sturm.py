import logging
from dataclasses import dataclass, field

import numpy as np
from sympy import primefactors

from qmock.completion.evaluate import zeta
from qmock.verify.report import numeric_report

logger = logging.getLogger(__name__)


def sturm_index(level):
    """Index of Gamma_0(level) in SL_2(Z): N prod_{p | N} (1 + 1/p)."""
    if level < 1:
        raise ValueError('level must be a positive integer, got %s' % level)
    index = level
    for p in primefactors(level):
        index = index // p * (p + 1)
    return index


def sturm_coeff_count(weight, level):
    """Number of leading coefficients whose vanishing forces a form to vanish.

    Coefficients 0 .. floor(k * index / 12) are needed, one more than the
    bound itself.
    """
    if weight < 0:
        raise ValueError('weight must be nonnegative, got %s' % weight)
    return weight * sturm_index(level) // 12 + 1


@dataclass
class SturmData:
    weight: int
    level: int
    index: int = field(init=False)
    bound: int = field(init=False)

    def __post_init__(self):
        self.index = sturm_index(self.level)
        self.bound = self.weight * self.index // 12

    @property
    def coeff_count(self):
        return self.bound + 1

    def to_dict(self):
        return {
            'weight': self.weight,
            'level': self.level,
            'index': self.index,
            'bound': self.bound,
            'coeff_count': self.coeff_count,
        }


def check_multiplier_power(power=12, tol=1e-12):
    """The multipliers of M-hat under tau + 1 and tau / (2tau + 1) die in the 12th power.

    M-hat^12 is treated as a form on Gamma_0(2) with trivial character;
    this records that assumption numerically.
    """
    rows = []
    for name, value in (('T', zeta(3)), ('G0', zeta(12))):
        lifted = value ** power
        rows.append((name, float(abs(lifted - 1)), lifted, 1))
    return numeric_report(
        'sturm:multiplier', rows, tol,
        details={'power': power, 'orders': multiplier_orders(), 'assumption': True}
    )


def multiplier_orders():
    """Smallest powers trivialising each multiplier."""
    out = {}
    for name, value in (('T', zeta(3)), ('G0', zeta(12))):
        k = 1
        while not np.isclose(value ** k, 1):
            k += 1
        out[name] = k
    return out
