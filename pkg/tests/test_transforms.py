from fractions import Fraction

import numpy as np
import pytest

from qmock.completion import transforms
from qmock.completion.evaluate import eta_numeric, zeta
from qmock.completion.transforms import TransformSpec, check_transform, residual, \
    dual_representatives, rho
from qmock.errors import EvaluationFailure, RadiusTooSmall


def test_transform_spec_validation():
    spec = TransformSpec('S', Fraction(1, 2))
    assert spec.apply(1j) == pytest.approx(1j)
    assert spec.factor(1j) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        TransformSpec('X')
    with pytest.raises(ValueError):
        TransformSpec('T', 0, 2)
    with pytest.raises(ValueError):
        TransformSpec('T', 0, [[0, 0], [0, 0]])


def test_residual_is_scaled():
    assert residual(np.asarray(101 + 0j), np.asarray(100 + 0j)) == pytest.approx(0.01)
    assert residual(np.asarray(0.5 + 0j), np.asarray(0.25 + 0j)) == pytest.approx(0.25)
    vector = residual(np.array([1, 2 + 1e-3]), np.array([1, 2]))
    assert vector == pytest.approx(5e-4)


def test_wrong_multiplier_fails(taus, tol):
    report = check_transform(eta_numeric, TransformSpec('T', 0, zeta(12)), taus, tol)
    assert not report.passed
    assert len(report.witnesses) == len(taus)


def test_failures_carry_the_point(taus, tol):
    def broken(tau):
        raise RadiusTooSmall('tail too large')

    with pytest.raises(EvaluationFailure) as error:
        check_transform(broken, TransformSpec('T'), taus, tol)
    assert error.value.tau is not None


@pytest.mark.parametrize('check', [
    transforms.check_eta_laws,
    transforms.check_theta_classical_laws,
    transforms.check_E_cal_laws,
    transforms.check_T_vector_laws,
    transforms.check_F_hat_laws,
    transforms.check_A_hat_laws,
    transforms.check_H_hat_laws,
])
def test_modular_laws(check, taus, tol):
    report = check(taus, tol)
    assert report.passed, report.to_dict()
    assert report.mode == 'numeric'


@pytest.mark.parametrize('check', [
    transforms.check_prop31_numeric,
    transforms.check_eq33,
    transforms.check_eq44,
    transforms.check_prop41_numeric,
    transforms.check_cor42,
])
def test_completions(check, taus, tol):
    report = check(taus, tol)
    assert report.passed, report.to_dict()


def test_threaded_rows_keep_order(taus, tol):
    serial = transforms.check_eta_laws(taus, tol)
    threaded = transforms.check_eta_laws(taus, tol, threads=2)
    assert serial.max_deviation == threaded.max_deviation


def test_series_against_direct(taus, tol):
    report = transforms.check_series_vs_direct(taus, tol, terms=60)
    assert report.passed, report.to_dict()
    assert len(report.details['parts']) == 6


def test_fminus_integral(taus):
    report = transforms.check_fminus_integral(taus[:1], 1e-7)
    assert report.passed, report.to_dict()


def test_cusp_zero():
    report = transforms.check_cusp_zero(ys=(1, Fraction(1, 2)))
    assert report.passed
    assert report.details['max_modulus'] == max(report.details['moduli'])
    assert np.isfinite(report.details['max_modulus'])


def test_dual_lattice_cosets(main_form, main_chars):
    reps = dual_representatives(main_form)
    assert len(reps) == 12
    assert (0, 0) in reps
    assert rho(0, 0) == main_chars.b
    assert rho(2, 1) == (main_chars.b[0] + Fraction(1, 3), main_chars.b[1] + Fraction(1, 2))


def test_theta_laws(main_chars, taus, tol):
    report = transforms.check_theta_laws(main_chars, taus, tol)
    assert report.passed, report.to_dict()
    assert report.details['coset_size'] == 12
    assert report.details['shifted_b_matches']
    assert report.details['vanishing_coset_coefficient'] < 1e-14
    parts = report.details['parts']
    assert 'thm2.6(5)-reduced' in parts
    assert len([p for p in parts if p.startswith('thm2.6(tau-2)')]) == 4


def test_theta_laws_need_dual_shift(main_chars, taus, tol):
    with pytest.raises(ValueError):
        transforms.check_theta_laws(main_chars, taus, tol, mu=(Fraction(1, 7), 0))


def test_orthogonal_invariance(main_chars, taus, tol):
    report = transforms.check_orthogonal_invariance(main_chars, taus, tol)
    assert report.passed, report.to_dict()
    # identity, reflection and the twelve sign relations
    assert len(report.details['parts']) == 14
    with pytest.raises(ValueError):
        transforms.check_orthogonal_invariance(
            main_chars, taus, tol, matrices=(((0, 1), (1, 0)),))
