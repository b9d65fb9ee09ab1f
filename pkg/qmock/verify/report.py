import os
import json
import logging
from fractions import Fraction
from dataclasses import dataclass, field

import pandas as pd

from qmock.settings import SCALE

logger = logging.getLogger(__name__)

MAX_WITNESSES = 10


@dataclass
class IdentityReport:
    """Verdict of one identity check.

    ``horizon_or_tol`` is the scaled exponent horizon for exact checks and the
    residual tolerance for numeric ones. Witnesses are ``(location, lhs, rhs)``
    triples: a scaled exponent for exact checks, a point tau for numeric ones.
    """

    id: str
    mode: str
    horizon_or_tol: object
    max_deviation: object
    witnesses: list = field(default_factory=list)
    verdict: str = 'pass'
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        bound = 0 if self.mode == 'exact' else self.horizon_or_tol
        passed = not self.witnesses and self.max_deviation <= bound
        self.verdict = 'pass' if passed else 'fail'
        if not passed:
            logger.warning(
                '%s failed, first witness %s', self.id,
                self.witnesses[0] if self.witnesses else None
            )

    @property
    def passed(self):
        return self.verdict == 'pass'

    @property
    def first_failure(self):
        return self.witnesses[0][0] if self.witnesses else None

    def to_dict(self):
        return {
            'id': self.id,
            'mode': self.mode,
            'horizon_or_tol': _jsonable(self.horizon_or_tol),
            'max_deviation': _jsonable(self.max_deviation),
            'witnesses': [[_jsonable(x) for x in w] for w in self.witnesses],
            'verdict': self.verdict,
            'details': {k: _jsonable(v) for k, v in self.details.items()},
        }

    def to_json(self):
        return json.dumps(self.to_dict())


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, IdentityReport):
        return value.to_dict()
    if hasattr(value, 'item'):
        # numpy scalars
        return _jsonable(value.item())
    return value


def compare_series(identity_id, lhs, rhs, T=None):
    """Coefficientwise comparison of two QSeries below their common horizon."""
    horizon = min(lhs.order, rhs.order)
    if T is not None:
        horizon = min(horizon, T)
    exponents = sorted(
        e for e in set(lhs.coeffs) | set(rhs.coeffs) if e < horizon
    )
    witnesses = []
    max_deviation = Fraction(0)
    for e in exponents:
        left, right = lhs.coeff(e), rhs.coeff(e)
        if left != right:
            max_deviation = max(max_deviation, abs(left - right))
            if len(witnesses) < MAX_WITNESSES:
                witnesses.append((e, left, right))
    logger.debug(
        '%s compared to q^(%s/%s), %s mismatches', identity_id, horizon, SCALE,
        len(witnesses)
    )
    return IdentityReport(
        id=identity_id,
        mode='exact',
        horizon_or_tol=horizon,
        max_deviation=max_deviation,
        witnesses=witnesses,
    )


def numeric_report(identity_id, rows, tol, details=None):
    """Build a numeric report from (tau, residual, lhs, rhs) rows."""
    max_deviation = max((row[1] for row in rows), default=0.0)
    witnesses = [
        (tau, lhs, rhs) for tau, residual, lhs, rhs in rows if not residual <= tol
    ][:MAX_WITNESSES]
    return IdentityReport(
        id=identity_id,
        mode='numeric',
        horizon_or_tol=tol,
        max_deviation=float(max_deviation),
        witnesses=witnesses,
        details=details or {},
    )


def merge_reports(identity_id, reports, bound=None):
    """Combine sub-reports of the same mode into one verdict.

    The merged horizon (or tolerance) is the weakest of the parts unless
    ``bound`` names it; every part keeps its own in ``details["horizons"]``.
    """
    modes = {r.mode for r in reports}
    if len(modes) != 1:
        raise ValueError('cannot merge reports of modes %s' % sorted(modes))
    mode = modes.pop()
    if bound is None:
        weakest = min if mode == 'exact' else max
        bound = weakest(r.horizon_or_tol for r in reports)
    witnesses = [
        ((r.id, w[0]), w[1], w[2]) for r in reports for w in r.witnesses
    ][:MAX_WITNESSES]
    # a numeric part can fail on its own tolerance below the merged one
    failed = [r.id for r in reports if not r.passed]
    merged = IdentityReport(
        id=identity_id,
        mode=mode,
        horizon_or_tol=bound,
        max_deviation=max(r.max_deviation for r in reports),
        witnesses=witnesses or [((r_id, None), None, None) for r_id in failed],
        details={
            'parts': {r.id: r.verdict for r in reports},
            'horizons': {r.id: r.horizon_or_tol for r in reports},
        },
    )
    return merged


def reports_to_frame(reports):
    rows = []
    for r in reports:
        rows.append({
            'id': r.id,
            'mode': r.mode,
            'horizon_or_tol': _jsonable(r.horizon_or_tol),
            'max_deviation': float(r.max_deviation),
            'witnesses': len(r.witnesses),
            'first_failure': _jsonable(r.first_failure),
            'verdict': r.verdict,
        })
    return pd.DataFrame(
        rows, columns=['id', 'mode', 'horizon_or_tol', 'max_deviation',
                       'witnesses', 'first_failure', 'verdict']
    )


def write_reports(reports, path):
    """Write reports as csv table or json lines, chosen by file suffix."""
    suffix = os.path.splitext(path)[1].lower()
    if suffix == '.csv':
        reports_to_frame(reports).to_csv(path, index=False)
    else:
        with open(path, 'w') as handle:
            for r in reports:
                handle.write(r.to_json() + '\n')
    logger.info('wrote %s reports to %s', len(reports), path)
    return path
