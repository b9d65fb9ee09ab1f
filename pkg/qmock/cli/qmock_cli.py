import sys
import json
import logging
import argparse
from fractions import Fraction

from qmock.log import set_log_level, setup_logfile
from qmock.completion import nonholomorphic
from qmock.completion.evaluate import eta_numeric, theta_numeric
from qmock.completion.vartheta import vartheta_numeric
from qmock.errors import QMockConfigError, UnknownIdentity, RadiusTooSmall, \
    InvalidCharacteristic, EvaluationFailure
from qmock.etatheta import theta_series, eta_series
from qmock.genfun import GenFunId, series_of
from qmock.helpers.utils import parse_tau
from qmock.indefinite import H_series, MAIN_FORM, MAIN_CHARACTERISTIC
from qmock.settings import SCALE, GENFUN_IDS, RESCALED_IDS, EVAL_OBJECTS, \
    OUTPUT_FORMATS, LOG_LEVELS, EXECUTOR_TYPES
from qmock.verify.registry import run_registry, exit_code
from qmock.verify.report import reports_to_frame, write_reports
from qmock.verify.sturm import SturmData

logger = logging.getLogger(__name__)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def expansion(genfun, terms, k=None, m=1, var=None):
    """Exact series for the expand command, horizon given in output powers of q."""
    rescaled = genfun in RESCALED_IDS
    var = var or ('rescaled' if rescaled else 'original')
    if var == 'rescaled' and not rescaled:
        raise QMockConfigError('%s has no rescaled form' % genfun)
    T = terms * SCALE
    if rescaled and var == 'original':
        # q -> q^2 doubles every exponent
        T = -(-T // 2)
    if genfun == 'H':
        series = H_series(T)
    elif genfun == 'theta':
        series = theta_series(T)
    elif genfun == 'eta':
        series = eta_series(m, T)
    else:
        try:
            series = series_of(GenFunId(genfun, k), T)
        except ValueError as e:
            raise QMockConfigError(str(e))
    if rescaled and var == 'original':
        series = series.substitute_power(2)
    return series


def expansion_records(series):
    for e, c in series.items():
        x, c = Fraction(e, SCALE), Fraction(c)
        yield {
            'exp_num': x.numerator,
            'exp_den': x.denominator,
            'coeff_num': str(c.numerator),
            'coeff_den': str(c.denominator),
        }


def evaluate_object(name, tau, radius=None, tol=None, terms=None):
    """CompletionValue of one named object at tau."""
    if name == 'vartheta':
        return vartheta_numeric(MAIN_FORM, MAIN_CHARACTERISTIC, tau, R=radius, tol=tol)
    if name == 'eta':
        return eta_numeric(tau)
    if name == 'Theta':
        return theta_numeric(tau)
    if name == 'Hhat':
        return nonholomorphic.H_hat(tau, terms, radius)
    if name == 'Ahat':
        return nonholomorphic.A_hat(tau, terms, radius)
    if name.startswith('Fhat'):
        return nonholomorphic.F_hat(int(name[-1]), tau, terms, radius)
    if name == 'Hminus':
        return nonholomorphic.H_minus(tau, radius)
    if name == 'Aminus':
        return nonholomorphic.A_minus(tau, radius)
    raise QMockConfigError('unknown object %s' % name)


def _config_from_args(args):
    exact = {'terms': getattr(args, 'terms', None)}
    numeric = {
        'tol': getattr(args, 'tol', None),
        'tau_seed': getattr(args, 'tau_seed', None),
        'samples': getattr(args, 'samples', None),
    }
    config = {
        'threads': getattr(args, 'threads', None),
        'executor': getattr(args, 'executor', None),
        'exact': {k: v for k, v in exact.items() if v is not None},
        'numeric': {k: v for k, v in numeric.items() if v is not None},
    }
    return {k: v for k, v in config.items() if v is not None}


def _emit_reports(reports, fmt, report_file=None):
    if fmt == 'json':
        for r in reports:
            print(r.to_json())
    else:
        print(reports_to_frame(reports).to_string(index=False))
    if report_file:
        write_reports(reports, report_file)
    return exit_code(reports)


def cmd_expand(args):
    series = expansion(args.genfun_id, args.terms, k=args.k, m=args.m, var=args.var)
    for record in expansion_records(series):
        if args.format == 'json':
            print(json.dumps(record))
        else:
            x = Fraction(record['exp_num'], record['exp_den'])
            c = Fraction(int(record['coeff_num']), int(record['coeff_den']))
            print('%s\t%s' % (x, c))
    return EXIT_PASS


def cmd_check(args):
    reports = run_registry(args.identity_id, _config_from_args(args))
    return _emit_reports(reports, args.format, args.report)


def cmd_check_all(args):
    selector = '*'
    if args.exact_only:
        selector = 'exact:*'
    elif args.numeric_only:
        selector = 'numeric:*'
    progress = logging.getLogger('qmock').getEffectiveLevel() <= logging.INFO
    reports = run_registry(selector, _config_from_args(args), progress=progress)
    return _emit_reports(reports, args.format, args.report)


def cmd_sturm(args):
    try:
        data = SturmData(args.weight, args.level)
    except ValueError as e:
        raise QMockConfigError(str(e))
    if args.format == 'json':
        print(json.dumps(data.to_dict()))
    else:
        print('index %s\ncoefficients %s' % (data.index, data.coeff_count))
    return EXIT_PASS


def cmd_eval(args):
    point = parse_tau(args.tau)
    value = evaluate_object(
        args.object_id, point, radius=args.radius, tol=args.tol, terms=args.terms
    )
    if args.format == 'json':
        print(json.dumps({
            'object': args.object_id,
            'tau': [point.u, point.v],
            'value': [value.value.real, value.value.imag],
            'est_tail': value.est_tail,
        }))
    else:
        print('%s(%s) = %r  (tail %.3g)' % (
            args.object_id, point, value.value, value.est_tail))
    return EXIT_PASS


def _add_run_options(parser):
    parser.add_argument("--terms", type=int, default=None,
                        help="exact horizon in powers of q (default 500)")
    parser.add_argument("--tol", type=float, default=None,
                        help="residual tolerance of numeric checks (default 1e-8)")
    parser.add_argument("--tau-seed", dest="tau_seed", type=int, default=None,
                        help="seed of the sampled points tau")
    parser.add_argument("--samples", type=int, default=None,
                        help="number of sampled points tau")
    parser.add_argument("--threads", type=int, default=None,
                        help="parallel workers, QMOCK_THREADS takes precedence")
    parser.add_argument("--executor", choices=EXECUTOR_TYPES, default=None)
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="text")
    parser.add_argument("--report", default=None,
                        help="write reports to a .csv or .json file")


def build_parser():
    # write a description
    descript = """
               Exact q-series and numeric modular completions for the
               two-color partition identity H(q) = A(q).

               Exact checks compare coefficients to a horizon, numeric checks
               evaluate transformation laws at seeded points tau.
               """

    epilog = """
             Examples:
             qmock expand A --terms 20
             qmock check conj1.1 --terms 500
             qmock check-all --numeric-only --tol 1e-8
             qmock sturm --weight 12 --level 2
             qmock eval Hhat --tau 0.1,1.0
             """
    parser = argparse.ArgumentParser(
        prog="qmock", description=descript, epilog=epilog,
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument("--loglevel", choices=LOG_LEVELS, default=None)
    parser.add_argument("--logfile", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", help="print the coefficients of a series")
    expand.add_argument("genfun_id", choices=GENFUN_IDS)
    expand.add_argument("--terms", type=int, required=True,
                        help="horizon in powers of q")
    expand.add_argument("--var", choices=["original", "rescaled"], default=None)
    expand.add_argument("--k", type=int, default=None, help="k for Ck")
    expand.add_argument("--m", type=int, default=1, help="m for eta(m tau)")
    expand.add_argument("--format", choices=OUTPUT_FORMATS, default="text")
    expand.set_defaults(func=cmd_expand)

    check = sub.add_parser("check", help="run one identity")
    check.add_argument("identity_id")
    _add_run_options(check)
    check.set_defaults(func=cmd_check)

    check_all = sub.add_parser("check-all", help="run the identity registry")
    only = check_all.add_mutually_exclusive_group()
    only.add_argument("--exact-only", action="store_true")
    only.add_argument("--numeric-only", action="store_true")
    _add_run_options(check_all)
    check_all.set_defaults(func=cmd_check_all)

    sturm = sub.add_parser("sturm", help="Sturm bound data of Gamma_0(N)")
    sturm.add_argument("--weight", type=int, required=True)
    sturm.add_argument("--level", type=int, required=True)
    sturm.add_argument("--format", choices=OUTPUT_FORMATS, default="text")
    sturm.set_defaults(func=cmd_sturm)

    evaluate = sub.add_parser("eval", help="evaluate a completed function at tau")
    evaluate.add_argument("object_id", choices=EVAL_OBJECTS)
    evaluate.add_argument("--tau", required=True, help="<re>,<im>")
    evaluate.add_argument("--radius", type=int, default=None,
                          help="lattice radius or summation bound")
    evaluate.add_argument("--tol", type=float, default=None)
    evaluate.add_argument("--terms", type=int, default=None,
                          help="holomorphic horizon in powers of q")
    evaluate.add_argument("--format", choices=OUTPUT_FORMATS, default="text")
    evaluate.set_defaults(func=cmd_eval)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASS if e.code == 0 else EXIT_USAGE
    if args.loglevel:
        set_log_level(args.loglevel)
    if args.logfile:
        setup_logfile(args.logfile)
    try:
        return args.func(args)
    except (QMockConfigError, UnknownIdentity, RadiusTooSmall,
            InvalidCharacteristic) as e:
        logger.error(e)
        print('error: %s' % e, file=sys.stderr)
        return EXIT_USAGE
    except EvaluationFailure as e:
        logger.error('evaluation failed at %s: %s', e.tau, e)
        print('error: %s' % e, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
