import logging

import pytest

from qmock import log
from qmock.errors import QMockConfigError
from qmock.helpers.utils import sample_taus, parse_tau, timer
from qmock.settings import parse_config, get_param, NUMERIC_PARAMETERS


def test_defaults():
    config = parse_config({})
    assert config['threads'] == 1
    assert config['executor'] == 'concurrent_threads'
    assert config['exact']['terms'] == 500
    assert config['numeric']['tol'] == 1e-8
    assert config['numeric']['holomorphic_terms'] == 240


def test_caller_values_and_validation():
    config = parse_config({'exact': {'terms': 12}, 'numeric': {'tol': 1}})
    assert config['exact']['terms'] == 12
    assert config['numeric']['tol'] == 1.0
    with pytest.raises(QMockConfigError):
        parse_config({'bogus': 1})
    with pytest.raises(QMockConfigError):
        parse_config({'exact': {'terms': 'many'}})
    with pytest.raises(QMockConfigError):
        parse_config({'exact': {'terms': 0}})
    with pytest.raises(QMockConfigError):
        parse_config({'executor': 'dask'})


def test_environment_wins(monkeypatch):
    monkeypatch.setenv('QMOCK_THREADS', '3')
    monkeypatch.setenv('QMOCK_EXACT_TERMS', '7')
    config = parse_config({'exact': {'terms': 12}})
    assert config['threads'] == 3
    assert config['exact']['terms'] == 7
    monkeypatch.setenv('QMOCK_NUMERIC_TOL', '1e-6')
    assert get_param('tol', {}, NUMERIC_PARAMETERS, prefix='NUMERIC_') == 1e-6


def test_sample_taus_are_reproducible():
    first = sample_taus(seed=5, count=4, min_imag=0.7, max_imag=1.3)
    second = sample_taus(seed=5, count=4, min_imag=0.7, max_imag=1.3)
    assert first == second
    assert all(-0.5 <= p.u <= 0.5 and 0.7 <= p.v <= 1.3 for p in first)
    with pytest.raises(QMockConfigError):
        sample_taus(min_imag=2.0, max_imag=1.0)


def test_sampling_below_safe_window_warns(caplog):
    with caplog.at_level(logging.WARNING, logger='qmock'):
        sample_taus(count=1, min_imag=0.1, max_imag=0.2)
    assert 'imaginary part down to 0.1' in caplog.text


def test_parse_tau_below_safe_window_warns(caplog):
    with caplog.at_level(logging.WARNING, logger='qmock'):
        parse_tau('0,1')
    assert caplog.text == ''
    with caplog.at_level(logging.WARNING, logger='qmock'):
        parse_tau('0.1,0.3')
    assert 'imaginary part down to 0.3' in caplog.text


def test_parse_tau():
    point = parse_tau('0.25,1.5')
    assert (point.u, point.v) == (0.25, 1.5)
    with pytest.raises(QMockConfigError):
        parse_tau('1.5')
    with pytest.raises(QMockConfigError):
        parse_tau('0,-1')


def test_log_level_and_file(tmp_path):
    log.set_log_level('DEBUG')
    assert logging.getLogger('qmock').level == logging.DEBUG
    handler = log.setup_logfile(str(tmp_path / 'qmock.log'))
    try:
        timer(0.0, 'nothing')
        handler.flush()
        assert 'nothing took' in (tmp_path / 'qmock.log').read_text()
    finally:
        logging.getLogger().removeHandler(handler)
        handler.close()
        log.set_log_level('ERROR')
