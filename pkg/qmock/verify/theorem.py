"""The main identity H = A, checked directly and along the Sturm route.

M-hat = H-hat - A-hat has holomorphic part q^(1/3)(H - A). Its 12th power
transforms like a weight 12 form on Gamma_0(2), so by the Sturm bound it
vanishes as soon as its first sturm_coeff_count(12, 2) coefficients do.
"""
import time
import logging

from qmock.errors import QMockConfigError
from qmock.genfun import A_series, conjecture_lhs, conjecture_rhs
from qmock.helpers.utils import timer
from qmock.indefinite import H_series
from qmock.series_core import QSeries
from qmock.settings import SCALE
from qmock.verify.report import compare_series, merge_reports
from qmock.verify.sturm import SturmData, check_multiplier_power

logger = logging.getLogger(__name__)

THIRD = SCALE // 3
STURM_WEIGHT = 12
STURM_LEVEL = 2
# q^(1/3) to the 12th power
POWER_SHIFT = STURM_WEIGHT * THIRD


def perturbed(series, perturb):
    """series + delta q^n for perturb = (n, delta), n in powers of q."""
    if perturb is None:
        return series
    n, delta = perturb
    return series + QSeries.monomial(delta, n * SCALE, series.order)


def check_sturm_path(H, A, sturm=None):
    """Leading coefficients of q^(1/3)(H - A) and of its 12th power vanish."""
    sturm = sturm or SturmData(STURM_WEIGHT, STURM_LEVEL)
    window = sturm.coeff_count * SCALE
    if min(H.order, A.order) < window:
        raise QMockConfigError(
            'the Sturm bound needs %s coefficients, horizon is q^(%s/%s)'
            % (sturm.coeff_count, min(H.order, A.order), SCALE)
        )
    difference = (H - A).truncate(window)
    zero = QSeries.zero(window)
    leading = compare_series(
        'sturm:coefficients', difference.shift(THIRD), zero, T=window
    )
    twelfth = difference.power(STURM_WEIGHT).shift(POWER_SHIFT)
    power = compare_series('sturm:power', twelfth, zero, T=window)
    report = merge_reports('sturm', [leading, power])
    multiplier = check_multiplier_power(STURM_WEIGHT)
    report.details.update({
        'sturm': sturm.to_dict(),
        'multiplier': multiplier.to_dict(),
    })
    if not multiplier.passed:
        report.witnesses.append(('sturm:multiplier', None, None))
        report.verdict = 'fail'
    return report


def check_main_theorem(T, perturb=None, original_T=None):
    """H(q) = A(q) to horizon T, its form in the original variable, and the
    Sturm route.

    Args:
        T: scaled horizon of the rescaled identity
        perturb: optional (n, delta) added to the coefficient of q^n of H
        original_T: scaled horizon in the original variable, default 2 T
    """
    start = time.time()
    original_T = original_T or 2 * T
    H = perturbed(H_series(T), perturb)
    A = A_series(T)
    reports = [
        compare_series('conj1.1:rescaled', H, A),
        compare_series(
            'conj1.1:substituted', H.substitute_power(2), conjecture_rhs(2 * T)
        ),
        compare_series(
            'conj1.1:original', conjecture_lhs(original_T), conjecture_rhs(original_T)
        ),
    ]
    sturm = check_sturm_path(H, A)
    reports.append(sturm)
    # headline horizon is the one of the identity itself, not the Sturm window
    report = merge_reports('conj1.1', reports, bound=reports[0].horizon_or_tol)
    report.details['sturm'] = sturm.details['sturm']
    timer(start, 'main theorem to q^(%s/%s)' % (T, SCALE))
    return report
