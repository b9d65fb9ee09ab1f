import json
from fractions import Fraction

import pytest

from qmock.completion import transforms
from qmock.errors import UnknownIdentity, QMockConfigError
from qmock.genfun import A_series
from qmock.indefinite import H_series
from qmock.series_core import QSeries
from qmock.settings import SCALE
from qmock.verify import registry
from qmock.verify.report import IdentityReport, compare_series, numeric_report, \
    merge_reports, reports_to_frame, write_reports
from qmock.verify.sturm import SturmData, sturm_index, sturm_coeff_count, \
    check_multiplier_power, multiplier_orders
from qmock.verify.theorem import check_main_theorem, check_sturm_path, perturbed


@pytest.mark.parametrize('level, index', [(1, 1), (2, 3), (4, 6), (6, 12), (23, 24)])
def test_sturm_index(level, index):
    assert sturm_index(level) == index


@pytest.mark.parametrize('weight, level, count', [(12, 2, 4), (2, 1, 1), (12, 1, 2), (2, 6, 3)])
def test_sturm_coeff_count(weight, level, count):
    assert sturm_coeff_count(weight, level) == count
    assert SturmData(weight, level).coeff_count == count


def test_sturm_rejects_bad_input():
    with pytest.raises(ValueError):
        sturm_index(0)
    with pytest.raises(ValueError):
        sturm_coeff_count(-1, 2)


def test_multiplier_power():
    report = check_multiplier_power(12)
    assert report.passed
    assert multiplier_orders() == {'T': 3, 'G0': 12}
    assert not check_multiplier_power(6).passed


def test_compare_series_witnesses():
    lhs = QSeries.from_q_coeffs([1, 2, 3, 4])
    rhs = QSeries.from_q_coeffs([1, 2, 5, 4, 7])
    report = compare_series('demo', lhs, rhs)
    assert not report.passed
    assert report.horizon_or_tol == 4 * SCALE
    assert report.witnesses == [(2 * SCALE, 3, 5)]
    assert report.max_deviation == 2
    assert report.first_failure == 2 * SCALE


def test_numeric_report_and_merge():
    good = numeric_report('a', [('i', 1e-12, 1j, 1j)], 1e-8)
    bad = numeric_report('b', [('i', 1e-3, 1j, 1.001j)], 1e-8)
    assert good.passed
    assert not bad.passed
    merged = merge_reports('ab', [good, bad])
    assert not merged.passed
    assert merged.witnesses[0][0] == ('b', 'i')
    assert merged.details['parts'] == {'a': 'pass', 'b': 'fail'}
    exact = compare_series('c', QSeries.one(SCALE), QSeries.one(SCALE))
    with pytest.raises(ValueError):
        merge_reports('mixed', [good, exact])


def test_report_serialisation(tmp_path):
    report = IdentityReport(
        id='demo', mode='exact', horizon_or_tol=48, max_deviation=Fraction(1, 2),
        witnesses=[(24, Fraction(1, 2), 0)]
    )
    data = json.loads(report.to_json())
    assert data['max_deviation'] == '1/2'
    assert data['verdict'] == 'fail'
    frame = reports_to_frame([report])
    assert list(frame['verdict']) == ['fail']
    assert frame.loc[0, 'first_failure'] == 24
    csv_path = write_reports([report], str(tmp_path / 'reports.csv'))
    assert open(csv_path).readline().startswith('id,mode')
    json_path = write_reports([report], str(tmp_path / 'reports.json'))
    assert json.loads(open(json_path).readline())['id'] == 'demo'


def test_main_theorem(horizon):
    report = check_main_theorem(horizon)
    assert report.passed, report.to_dict()
    assert report.details['sturm']['coeff_count'] == 4
    # the headline horizon is the compared range, the Sturm window stays a part
    assert report.horizon_or_tol == horizon
    assert report.details['horizons']['sturm'] == 4 * SCALE
    assert set(report.details['parts']) == {
        'conj1.1:rescaled', 'conj1.1:substituted', 'conj1.1:original', 'sturm'
    }


def test_fault_injection(horizon):
    report = check_main_theorem(horizon, perturb=(4, 1))
    assert not report.passed
    assert report.witnesses[0] == (('conj1.1:rescaled', 4 * SCALE), 3, 2)
    # the perturbation sits past the Sturm window
    assert report.details['parts']['sturm'] == 'pass'


def test_sturm_path_catches_leading_difference(horizon):
    H = perturbed(H_series(horizon), (1, 1))
    report = check_sturm_path(H, A_series(horizon))
    assert not report.passed
    assert report.details['parts']['sturm:coefficients'] == 'fail'
    assert report.details['multiplier']['verdict'] == 'pass'


def test_sturm_path_needs_the_full_window():
    with pytest.raises(QMockConfigError):
        check_sturm_path(H_series(2 * SCALE), A_series(2 * SCALE))
    assert check_sturm_path(H_series(4 * SCALE), A_series(4 * SCALE)).passed


def test_sturm_entry_rejects_short_horizon():
    with pytest.raises(QMockConfigError):
        registry.run_registry('exact:sturm', {'exact': {'terms': 2}})


def test_select():
    assert registry.select('exact:thm1.4') == ['exact:thm1.4']
    assert registry.select('prop3.1') == ['exact:prop3.1', 'numeric:prop3.1']
    assert all(k.startswith('numeric:') for k in registry.select('numeric:*'))
    assert len(registry.select('*')) == len(registry.REGISTRY)
    with pytest.raises(UnknownIdentity):
        registry.select('bogus')


def test_run_exact_registry(small_config):
    reports = registry.run_registry('exact:*', small_config)
    assert [r.id for r in reports][:2] == ['conj1.1', 'thm1.4']
    assert registry.exit_code(reports) == 0
    assert all(r.details['registry_id'].startswith('exact:') for r in reports)


def test_run_numeric_entry(small_config):
    reports = registry.run_registry('numeric:eq2.1', small_config)
    assert len(reports) == 1
    assert reports[0].passed
    assert reports[0].horizon_or_tol == 1e-8


def test_numeric_entries_use_the_thread_setting(monkeypatch, small_config):
    monkeypatch.delenv('QMOCK_THREADS', raising=False)
    seen = []
    run_rows = transforms._run_rows

    def recording(lhs, rhs, taus, threads=1):
        seen.append(threads)
        return run_rows(lhs, rhs, taus, threads)

    monkeypatch.setattr(transforms, '_run_rows', recording)
    reports = registry.run_registry('numeric:eq2.1', dict(small_config, threads=2))
    assert reports[0].passed
    assert seen and set(seen) == {2}
