"""Residual checks of transformation laws at sample points.

Every check evaluates both sides at a list of points and turns the scaled
residuals |lhs - rhs| / max(1, |rhs|) into an IdentityReport. Vector-valued
functions use the max norm and a 3x3 multiplier matrix.
"""
import cmath
import math
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np
from godale import Executor

from qmock.completion.evaluate import as_point, CompletionValue, eta_numeric, \
    theta_numeric, theta_half_numeric, theta_odd_eighths_numeric, E_cal, \
    T_vector, evaluate_series, UpperHalfPoint, zeta
from qmock.completion.nonholomorphic import A_hat, H_hat, M_hat, F_hat_vector, \
    A_hat_eta_theta, vartheta_main, HALF_PHASE, H_minus, H_star, A_minus, \
    A_star, F_minus, F_minus_integral, H_minus_unsplit
from qmock.completion.vartheta import vartheta_point
from qmock.errors import EvaluationFailure, RadiusTooSmall
from qmock.etatheta import theta_series, eta_series, eta6_over_eta4, theta_half, \
    theta_odd_eighths
from qmock.indefinite import MAIN_FORM, MAIN_CHARACTERISTIC
from qmock.settings import SCALE, MAIN_T_SHIFT, MAIN_REFLECTION
from qmock.verify.report import numeric_report, merge_reports

logger = logging.getLogger(__name__)


# map and automorphy factor j(tau), the law reads f(map tau) = mult j^k g(tau)
MAPS = {
    'T': (lambda t: t + 1, lambda t: 1),
    'T-2': (lambda t: t - 2, lambda t: 1),
    'S': (lambda t: -1 / t, lambda t: -1j * t),
    'S2': (lambda t: -1 / (2 * t), lambda t: -1j * t),
    'G0': (lambda t: t / (2 * t + 1), lambda t: 2 * t + 1),
}


@dataclass(frozen=True)
class TransformSpec:
    map: str
    weight: Fraction = Fraction(0)
    multiplier: object = 1

    def __post_init__(self):
        if self.map not in MAPS:
            raise ValueError('unknown map %s, choose from %s' % (self.map, list(MAPS)))
        object.__setattr__(self, 'weight', Fraction(self.weight))
        entries = np.atleast_1d(np.asarray(self.multiplier, dtype=complex)).ravel()
        nonzero = entries[entries != 0]
        if nonzero.size == 0 or not np.allclose(np.abs(nonzero), 1.0):
            raise ValueError('multiplier entries must have modulus 1')

    def apply(self, tau):
        return MAPS[self.map][0](complex(tau))

    def factor(self, tau):
        j = complex(MAPS[self.map][1](complex(tau)))
        # principal branch for half-integral weights
        scale = 1 if self.weight == 0 else j ** float(self.weight)
        return scale * np.asarray(self.multiplier, dtype=complex)


def _value(f, tau):
    try:
        out = f(tau)
    except (RadiusTooSmall, FloatingPointError, ZeroDivisionError) as e:
        raise EvaluationFailure('%s at tau=%s' % (e, tau), tau=tau) from e
    except EvaluationFailure as e:
        raise EvaluationFailure(str(e), tau=tau) from e
    if isinstance(out, CompletionValue):
        out = out.value
    out = np.asarray(out, dtype=complex)
    if not np.all(np.isfinite(out)):
        raise EvaluationFailure('non-finite value at tau=%s' % tau, tau=tau)
    return out


def residual(lhs, rhs):
    return float(np.max(np.abs(lhs - rhs)) / max(1.0, float(np.max(np.abs(rhs)))))


def _row(item, lhs_func, rhs_func):
    index, point = item
    lhs, rhs = lhs_func(point), rhs_func(point)
    return index, (str(point), residual(lhs, rhs), _plain(lhs), _plain(rhs))


def _plain(value):
    return complex(value) if value.ndim == 0 else [complex(x) for x in value]


def _run_rows(lhs_func, rhs_func, taus, threads=1):
    items = list(enumerate(as_point(t) for t in taus))
    if threads <= 1:
        results = [_row(item, lhs_func, rhs_func) for item in items]
    else:
        results = []
        executor = Executor(executor='concurrent_threads', max_workers=threads)
        for task in executor.as_completed(
                func=_row,
                iterable=items,
                fargs=(lhs_func, rhs_func)
        ):
            results.append(task.result())
    return [row for _, row in sorted(results, key=lambda r: r[0])]


def check_transform(f, spec, taus, tol, partner=None, identity_id=None, threads=1):
    """Residuals of f(map tau) = multiplier * j(tau)^weight * g(tau), g = partner or f."""
    g = partner or f

    def lhs(point):
        return _value(f, spec.apply(point.tau))

    def rhs(point):
        factor = spec.factor(point.tau)
        base = _value(g, point.tau)
        return factor @ base if factor.ndim == 2 else factor * base

    rows = _run_rows(lhs, rhs, taus, threads)
    return numeric_report(
        identity_id or 'transform:%s' % spec.map, rows, tol,
        details={'map': spec.map, 'weight': spec.weight}
    )


def compare_values(identity_id, f, g, taus, tol, threads=1):
    """Residuals of f(tau) = g(tau) at every sample point."""
    rows = _run_rows(
        lambda p: _value(f, p.tau), lambda p: _value(g, p.tau), taus, threads
    )
    return numeric_report(identity_id, rows, tol)


# --- classical modular forms -------------------------------------------------

def check_eta_laws(taus, tol, threads=1):
    return merge_reports('eq2.1', [
        check_transform(eta_numeric, TransformSpec('T', 0, zeta(24)), taus, tol,
                        identity_id='eq2.1:T', threads=threads),
        check_transform(eta_numeric, TransformSpec('S', Fraction(1, 2)), taus, tol,
                        identity_id='eq2.1:S', threads=threads),
    ])


def check_theta_classical_laws(taus, tol, threads=1):
    return merge_reports('eq2.3', [
        check_transform(theta_numeric, TransformSpec('T'), taus, tol,
                        identity_id='eq2.3:T', threads=threads),
        check_transform(theta_numeric, TransformSpec('S2', Fraction(1, 2)), taus, tol,
                        partner=lambda t: theta_half_numeric(0, t),
                        identity_id='eq2.3:S2', threads=threads),
    ])


def check_E_cal_laws(taus, tol, threads=1):
    return merge_reports('ecal', [
        check_transform(E_cal, TransformSpec('T', 0, zeta(3)), taus, tol,
                        identity_id='ecal:T', threads=threads),
        check_transform(E_cal, TransformSpec('G0', 1, zeta(12)), taus, tol,
                        identity_id='ecal:G0', threads=threads),
    ])


T_VECTOR_LAWS = {
    'T': TransformSpec('T', 0, [[0, 1, 0], [1, 0, 0], [0, 0, zeta(8)]]),
    'S': TransformSpec('S', Fraction(1, 2), [[1, 0, 0], [0, 0, 1], [0, 1, 0]]),
    'G0': TransformSpec('G0', Fraction(1, 2), np.diag([1, zeta(4, 3), 1])),
}

F_HAT_LAWS = {
    'T': TransformSpec('T', 0, [[zeta(24, -1), 0, 0], [0, 0, zeta(3)], [0, zeta(3), 0]]),
    'S': TransformSpec('S', Fraction(1, 2), [[0, 1, 0], [1, 0, 0], [0, 0, -1]]),
    'G0': TransformSpec('G0', Fraction(1, 2), np.diag([zeta(3), zeta(12), zeta(3)])),
}

# A-hat, H-hat and their difference share these laws
WEIGHT_ONE_LAWS = {
    'T': TransformSpec('T', 0, zeta(3)),
    'G0': TransformSpec('G0', 1, zeta(12)),
}


def _law_family(identity_id, f, laws, taus, tol, threads=1):
    return merge_reports(identity_id, [
        check_transform(f, spec, taus, tol, identity_id='%s:%s' % (identity_id, name),
                        threads=threads)
        for name, spec in laws.items()
    ])


def check_T_vector_laws(taus, tol, maps=('T', 'S', 'G0'), identity_id='eq5', threads=1):
    laws = {name: T_VECTOR_LAWS[name] for name in maps}
    return _law_family(identity_id, T_vector, laws, taus, tol, threads)


def check_F_hat_laws(taus, tol, threads=1):
    return _law_family('thm2.5', F_hat_vector, F_HAT_LAWS, taus, tol, threads)


def check_A_hat_laws(taus, tol, threads=1):
    return _law_family('prop5.1', A_hat, WEIGHT_ONE_LAWS, taus, tol, threads)


def check_H_hat_laws(taus, tol, threads=1):
    return _law_family('prop5.2', H_hat, WEIGHT_ONE_LAWS, taus, tol, threads)


# --- completions against each other ------------------------------------------

def check_prop31_numeric(taus, tol, threads=1):
    """H-hat as (e^(-pi i/3) / 2) vartheta."""
    return compare_values(
        'prop3.1', H_hat, lambda t: vartheta_main(t) * HALF_PHASE, taus, tol, threads
    )


def check_eq33(taus, tol, threads=1):
    """H^- rebuilt from vartheta, and its unsplit double sum."""
    return merge_reports('eq3.3', [
        compare_values('eq3.3:hstar', H_star, H_minus, taus, tol, threads),
        compare_values('eq3.3:unsplit', H_minus_unsplit, H_minus, taus, tol, threads),
    ])


def check_eq44(taus, tol, threads=1):
    """A^- against A^* and the two finite double sums against each other."""
    return merge_reports('eq4.4', [
        compare_values('eq4.4:astar', A_minus, A_star, taus, tol, threads),
        compare_values('eq4.4:hminus', H_minus, A_minus, taus, tol, threads),
    ])


def check_prop41_numeric(taus, tol, threads=1):
    return merge_reports('prop4.1', [
        compare_values('prop4.1:ahat', A_hat, A_hat_eta_theta, taus, tol, threads),
        check_E_cal_laws(taus, tol, threads),
    ])


def check_cor42(taus, tol, threads=1):
    """M-hat = H-hat - A-hat vanishes and keeps the weight one laws."""
    return merge_reports('cor4.2', [
        compare_values('cor4.2:vanish', M_hat, lambda t: 0j, taus, tol, threads),
        _law_family('cor4.2:laws', M_hat, WEIGHT_ONE_LAWS, taus, tol, threads),
    ])


def check_fminus_integral(taus, tol, threads=1):
    reports = []
    for j in (1, 2, 3):
        reports.append(compare_values(
            'fminus-integral:%s' % j,
            lambda t, j=j: F_minus(j, t),
            lambda t, j=j: F_minus_integral(j, t),
            taus, tol, threads
        ))
    return merge_reports('fminus-integral', reports)


def check_series_vs_direct(taus, tol, terms=240, threads=1):
    """Exact expansions summed at tau against their direct numeric definitions."""
    T = terms * SCALE
    pairs = {
        'theta': (theta_series(T), theta_numeric),
        'eta': (eta_series(1, T), eta_numeric),
        'ecal': (eta6_over_eta4(T), E_cal),
        'theta-half0': (theta_half(0, T), lambda t: theta_half_numeric(0, t)),
        'theta-half1': (theta_half(1, T), lambda t: theta_half_numeric(1, t)),
        'theta-odd': (theta_odd_eighths(T), theta_odd_eighths_numeric),
    }
    reports = []
    for name, (series, direct) in pairs.items():
        reports.append(compare_values(
            'series-vs-direct:%s' % name,
            lambda t, s=series: evaluate_series(s, t), direct, taus, tol, threads
        ))
    return merge_reports('series-vs-direct', reports)


def check_cusp_zero(ys=(1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 5)), tol=1e-8):
    """|A-hat(iy)| along a vertical approach to the cusp 0.

    Only finiteness is asserted; the moduli are recorded so that growth can be
    inspected, nothing is certified about the rate.
    """
    rows, moduli = [], []
    for y in ys:
        point = UpperHalfPoint(0.0, float(y))
        value = _value(A_hat, point.tau)
        moduli.append(float(abs(value)))
        rows.append((str(point), 0.0, complex(value), complex(value)))
    return numeric_report(
        'cusp-zero', rows, tol,
        details={'ys': [float(y) for y in ys], 'moduli': moduli,
                 'max_modulus': max(moduli)}
    )


# --- indefinite theta laws ---------------------------------------------------

def dual_representatives(form):
    """Representatives of A^-1 Z^2 / Z^2, reduced into [0, 1)^2."""
    size = abs(form.det)
    reps = set()
    for k in product(range(size), repeat=2):
        p = form.solve(k)
        reps.add(tuple(x - math.floor(x) for x in p))
    return sorted(reps)


def _theta(chars, form, **kwargs):
    return vartheta_point(chars, form=form, **kwargs)


def rho(l1, l2, chars=MAIN_CHARACTERISTIC):
    """b + (l1/6, l2/2), the coset characteristics of the main chain."""
    return (chars.b[0] + Fraction(l1, 6), chars.b[1] + Fraction(l2, 2))


def _is_main(form, chars):
    return form == MAIN_FORM and chars == MAIN_CHARACTERISTIC


def check_theta_laws(chars, taus, tol, form=MAIN_FORM, lam=(1, -2), mu=MAIN_T_SHIFT,
                     threads=1):
    """Elliptic and modular laws of vartheta_{a,b}.

    For the main characteristic the reduced inversion over l1 in {0, 2} and
    the tau - 2 law of the four remaining characteristics are added.
    """
    if not form.in_dual_lattice(mu):
        raise ValueError('shift %s is not in A^-1 Z^2' % (mu,))
    a, b = chars.a, chars.b
    theta = _theta(chars, form)
    reports = []

    shifted = chars.replace(a=tuple(x + l for x, l in zip(a, lam)))
    reports.append(compare_values(
        'thm2.6(1)', _theta(shifted, form), theta, taus, tol, threads))

    phase = cmath.exp(2j * math.pi * float(form.B(a, mu)))
    shifted = chars.replace(b=tuple(x + m for x, m in zip(b, mu)))
    reports.append(compare_values(
        'thm2.6(2)', _theta(shifted, form), lambda t: phase * theta(t),
        taus, tol, threads))

    negated = chars.replace(a=tuple(-x for x in a), b=tuple(-x for x in b))
    reports.append(compare_values(
        'thm2.6(3)', _theta(negated, form), lambda t: -theta(t), taus, tol, threads))

    half_diag = tuple(x / 2 for x in form.solve(form.diagonal))
    t_phase = cmath.exp(
        -2j * math.pi * float(form.Q(a)) - 2j * math.pi * float(form.B(half_diag, a))
    )
    t_chars = chars.replace(b=tuple(x + y + z for x, y, z in zip(a, b, half_diag)))
    reports.append(check_transform(
        theta, TransformSpec('T', 0, t_phase), taus, tol,
        partner=_theta(t_chars, form), identity_id='thm2.6(4)', threads=threads))

    reps = dual_representatives(form)
    coset = [_theta(chars.replace(a=tuple(x + y for x, y in zip(b, p)),
                                  b=tuple(-x for x in a)), form) for p in reps]
    s_mult = 1j * cmath.exp(2j * math.pi * float(form.B(a, b))) / math.sqrt(-form.det)
    reports.append(check_transform(
        theta, TransformSpec('S', 1, s_mult / abs(s_mult)), taus, tol,
        partner=lambda t: abs(s_mult) * sum(g(t) for g in coset),
        identity_id='thm2.6(5)', threads=threads))

    details = {'coset_size': len(reps), 'shifted_b': t_chars.b}
    if _is_main(form, chars):
        reports.extend(_main_chain_theta_laws(taus, tol, threads))
        details['shifted_b_matches'] = t_chars.b == tuple(
            x + y for x, y in zip(b, MAIN_T_SHIFT))
        details['vanishing_coset_coefficient'] = abs(1 - zeta(3, 3))
    merged = merge_reports('thm2.6', reports)
    merged.details.update(details)
    return merged


def _main_chain_theta_laws(taus, tol, threads=1):
    chars = MAIN_CHARACTERISTIC
    minus_a = tuple(-x for x in chars.a)
    theta = _theta(chars, MAIN_FORM)
    kept = [
        (1 - zeta(3, 2 * l1 + 1),
         _theta(chars.replace(a=rho(l1, l2), b=minus_a), MAIN_FORM))
        for l1, l2 in product((0, 2), (0, 1))
    ]
    scale = 1 / (2 * math.sqrt(3))
    reports = [check_transform(
        theta, TransformSpec('S', 1, 1j * zeta(6)), taus, tol,
        partner=lambda t: scale * sum(c * g(t) for c, g in kept),
        identity_id='thm2.6(5)-reduced', threads=threads)]
    for l1, l2 in product((0, 2), (0, 1)):
        g = _theta(chars.replace(a=rho(l1, l2), b=minus_a), MAIN_FORM)
        reports.append(check_transform(
            g, TransformSpec('T-2', 0, zeta(12)), taus, tol,
            identity_id='thm2.6(tau-2):%s,%s' % (l1, l2), threads=threads))
    return reports


def _is_orthogonal(form, C, chars):
    A = np.array(form.matrix)
    Cm = np.array(C)
    if not np.array_equal(Cm.T @ A @ Cm, A):
        return False
    image = chars.transformed(C).c1
    return image == chars.c1 or form.B(image, chars.c1) < 0


def check_orthogonal_invariance(chars, taus, tol, form=MAIN_FORM,
                                matrices=(((1, 0), (0, 1)), MAIN_REFLECTION),
                                threads=1):
    """vartheta^{Cc1,Cc2}_{Ca,Cb} = vartheta^{c1,c2}_{a,b} for C in O_A^+(Z)."""
    theta = _theta(chars, form)
    reports = []
    for C in matrices:
        if not _is_orthogonal(form, C, chars):
            raise ValueError('%s does not preserve the form and the cone' % (C,))
        reports.append(compare_values(
            'thm2.7:%s' % (C,), _theta(chars.transformed(C), form), theta,
            taus, tol, threads))
    if _is_main(form, chars):
        minus_a = tuple(-x for x in chars.a)
        for l1, l2 in product(range(6), (0, 1)):
            lhs = _theta(chars.replace(a=rho(l1, l2), b=minus_a), form)
            rhs = _theta(chars.replace(a=rho(5 - l1, l2), b=minus_a), form)
            factor = -zeta(3, l1 + 2)
            reports.append(compare_values(
                'thm2.7:sign:%s,%s' % (l1, l2), lhs,
                lambda t, g=rhs, c=factor: c * g(t), taus, tol, threads))
    return merge_reports('thm2.7', reports)
