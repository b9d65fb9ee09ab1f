"""Data-driven registry of every identity the package can check.

Each entry maps ``mode:id`` to a builder taking the parsed configuration and
returning one IdentityReport. Adding an identity is a one-line change here.
"""
import time
import logging

from godale import Executor
from tqdm.auto import tqdm

from qmock import settings
from qmock.completion import transforms
from qmock.errors import UnknownIdentity
from qmock.etatheta import check_theta_eta_identity, check_shifted_theta_identity, \
    check_odd_square_identity
from qmock.genfun import A_series, check_thm14, check_eq41, check_eq42, \
    check_c_factorization, check_ck_limit, check_prop41_holomorphic
from qmock.helpers.utils import timer, sample_taus
from qmock.indefinite import H_series, check_prop31_exact, MAIN_CHARACTERISTIC
from qmock.settings import SCALE
from qmock.verify.theorem import check_main_theorem, check_sturm_path

logger = logging.getLogger(__name__)

# integration oracles are slow, a few points are enough
INTEGRAL_POINTS = 3


def horizon(config):
    return config['exact']['terms'] * SCALE


def original_horizon(config):
    terms = config['exact']['original_terms'] or 2 * config['exact']['terms']
    return terms * SCALE


def taus(config):
    numeric = config['numeric']
    return sample_taus(
        seed=numeric['tau_seed'],
        count=numeric['samples'],
        min_imag=numeric['min_imag'],
        max_imag=numeric['max_imag'],
    )


def _numeric(check, **kwargs):
    def build(config):
        return check(
            taus(config), config['numeric']['tol'], threads=config['threads'], **kwargs
        )
    return build


def _sturm(config):
    T = horizon(config)
    return check_sturm_path(H_series(T), A_series(T))


REGISTRY = {
    'exact:conj1.1': lambda c: check_main_theorem(
        horizon(c), original_T=original_horizon(c)),
    'exact:thm1.4': lambda c: check_thm14(horizon(c)),
    'exact:eq4.1': lambda c: check_eq41(horizon(c)),
    'exact:eq4.2': lambda c: check_eq42(horizon(c)),
    'exact:eq2.4a': lambda c: check_theta_eta_identity(original_horizon(c)),
    'exact:eq2.4b': lambda c: check_shifted_theta_identity(original_horizon(c)),
    'exact:eq2.4c': lambda c: check_odd_square_identity(original_horizon(c)),
    'exact:prop3.1': lambda c: check_prop31_exact(horizon(c)),
    'exact:prop4.1': lambda c: check_prop41_holomorphic(horizon(c)),
    'exact:c=qds': lambda c: check_c_factorization(horizon(c)),
    'exact:ck-limit': lambda c: check_ck_limit(c['exact']['ck_k'], horizon(c)),
    'exact:sturm': _sturm,
    'numeric:prop3.1': _numeric(transforms.check_prop31_numeric),
    'numeric:eq3.3': _numeric(transforms.check_eq33),
    'numeric:eq4.4': _numeric(transforms.check_eq44),
    'numeric:prop4.1': _numeric(transforms.check_prop41_numeric),
    'numeric:cor4.2': _numeric(transforms.check_cor42),
    'numeric:prop5.1': _numeric(transforms.check_A_hat_laws),
    'numeric:prop5.2': _numeric(transforms.check_H_hat_laws),
    'numeric:thm2.5': _numeric(transforms.check_F_hat_laws),
    'numeric:thm2.6': lambda c: transforms.check_theta_laws(
        MAIN_CHARACTERISTIC, taus(c), c['numeric']['tol'], threads=c['threads']),
    'numeric:thm2.7': lambda c: transforms.check_orthogonal_invariance(
        MAIN_CHARACTERISTIC, taus(c), c['numeric']['tol'], threads=c['threads']),
    'numeric:eq5.1': _numeric(
        transforms.check_T_vector_laws, maps=('T', 'S'), identity_id='eq5.1'),
    'numeric:eq5.2': _numeric(
        transforms.check_T_vector_laws, maps=('G0',), identity_id='eq5.2'),
    'numeric:eq2.1': _numeric(transforms.check_eta_laws),
    'numeric:eq2.3': _numeric(transforms.check_theta_classical_laws),
    'numeric:fminus-integral': lambda c: transforms.check_fminus_integral(
        taus(c)[:INTEGRAL_POINTS], c['numeric']['tol'], threads=c['threads']),
    'numeric:series-vs-direct': lambda c: transforms.check_series_vs_direct(
        taus(c), c['numeric']['tol'], terms=c['numeric']['holomorphic_terms'],
        threads=c['threads']),
    'numeric:cusp-zero': lambda c: transforms.check_cusp_zero(tol=c['numeric']['tol']),
}


def select(selector):
    """Registry keys matched by a selector, in registry order.

    Accepted forms: ``*``, ``exact:*``, ``numeric:*``, ``mode:id`` and a bare
    ``id`` which matches the id in every mode.
    """
    selector = selector.strip()
    if selector == '*':
        keys = list(REGISTRY)
    elif selector.endswith(':*'):
        mode = selector[:-2]
        keys = [k for k in REGISTRY if k.startswith(mode + ':')]
    elif selector in REGISTRY:
        keys = [selector]
    else:
        keys = [k for k in REGISTRY if k.split(':', 1)[1] == selector]
    if not keys:
        raise UnknownIdentity(selector)
    return keys


def run_entry(key, config):
    start = time.time()
    logger.info('checking %s', key)
    report = REGISTRY[key](config)
    report.details.setdefault('registry_id', key)
    logger.info('%s: %s', key, report.verdict)
    timer(start, key)
    return report


def _indexed_entry(item, config):
    index, key = item
    return index, run_entry(key, config)


def run_registry(selector='*', config=None, progress=False):
    """Run every selected check and return the reports in registry order.

    Args:
        selector: see ``select``
        config: raw parameters, validated with settings.parse_config
        progress: show a progress bar
    """
    keys = select(selector)
    config = settings.parse_config(config or {})
    items = list(enumerate(keys))
    results = []
    with tqdm(total=len(items), disable=not progress, desc='identities') as pbar:
        if config['threads'] <= 1:
            for item in items:
                results.append(_indexed_entry(item, config))
                pbar.update(1)
        else:
            executor = Executor(
                executor=config['executor'], max_workers=config['threads']
            )
            for task in executor.as_completed(
                    func=_indexed_entry,
                    iterable=items,
                    fargs=(config,)
            ):
                results.append(task.result())
                pbar.update(1)
    return [report for _, report in sorted(results, key=lambda r: r[0])]


def exit_code(reports):
    return 0 if all(r.passed for r in reports) else 1
