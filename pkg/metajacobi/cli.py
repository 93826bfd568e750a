import argparse
import logging
import sys
from typing import Optional, Sequence, TextIO, Tuple

import pandas as pd

from . import config
from .__pkginfo__ import __version__
from .errors import NumericError, ParameterError
from .poly import askey_p, askey_q, jacobi_phat, eval_poly, askey_p_by_recurrence
from .quadrature import QuadratureSpec, DEFAULT_QUADRATURE, MatrixKind
from .repmod import OverlapKind, overlap, DEFAULT_LMAX
from .repmod.overlaps import TAIL_TOLERANCE
from .scalar import Params
from .suites import Suite, Report, run_suite
from .tables import CoeffKind, coeffs_table, recurrence_table, spectrum_table, matrix_table, value_table
from .writer import WRITERS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

EVAL_KINDS = ('askey-p', 'askey-q', 'jacobi', 'recurrence', 'overlap-p', 'overlap-qlt', 'overlap-j', 'overlap-jtilde')
TABLE_KINDS = ('coeffs', 'recurrence', 'biorth-matrix', 'jacobi-matrix', 'jacobi-circle-matrix')
SPECTRUM_KINDS = ('pencil', 'm')

_OVERLAPS = {
    'overlap-p': OverlapKind.P,
    'overlap-qlt': OverlapKind.QLT,
    'overlap-j': OverlapKind.J,
    'overlap-jtilde': OverlapKind.JTILDE,
}
_MATRICES = {
    'biorth-matrix': MatrixKind.BIORTH,
    'jacobi-matrix': MatrixKind.JACOBI_INTERVAL,
    'jacobi-circle-matrix': MatrixKind.JACOBI_CIRCLE,
}


def non_negative(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return n


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--alpha', type=float, required=True)
    common.add_argument('--beta', type=float, required=True)
    common.add_argument('--format', choices=sorted(WRITERS))
    common.add_argument('--out', metavar='FILE')
    common.add_argument('--tol', type=float)
    common.add_argument('--panels', type=int, default=DEFAULT_QUADRATURE.panels)
    common.add_argument('--nodes', type=int, default=DEFAULT_QUADRATURE.nodes_per_panel)
    common.add_argument('--lmax', type=non_negative, default=DEFAULT_LMAX)
    common.add_argument('--verbose', '-v', action='store_true')
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='metajacobi',
                                     description="Askey biorthogonal polynomials and the meta-Jacobi algebra")
    parser.add_argument('--version', action='version', version=__version__)
    verbs = parser.add_subparsers(dest='verb', required=True)
    common = _common()

    evaluate = verbs.add_parser('eval', parents=[common], help="evaluate a polynomial or overlap at z")
    evaluate.add_argument('--kind', choices=EVAL_KINDS, default='askey-p')
    evaluate.add_argument('--n', type=non_negative, default=0)
    evaluate.add_argument('--z-re', type=float, default=0.0)
    evaluate.add_argument('--z-im', type=float, default=0.0)

    coeffs = verbs.add_parser('coeffs', parents=[common], help="coefficient vectors")
    coeffs.add_argument('--kind', choices=[k.value for k in CoeffKind], default=CoeffKind.ASKEY_P.value)
    coeffs.add_argument('--n', type=non_negative, default=0)

    spectrum = verbs.add_parser('spectrum', parents=[common], help="GEVP or EVP spectrum")
    spectrum.add_argument('--kind', choices=SPECTRUM_KINDS, default='pencil')
    spectrum.add_argument('--nmax', type=non_negative, default=8)

    verify = verbs.add_parser('verify', parents=[common], help="run a verification suite")
    verify.add_argument('--suite', choices=[s.value for s in Suite], default=Suite.ALL.value)

    table = verbs.add_parser('table', parents=[common], help="tabulate coefficients, recurrences or integrals")
    table.add_argument('--kind', choices=TABLE_KINDS, default='coeffs')
    table.add_argument('--n', type=non_negative, default=0)
    table.add_argument('--nmax', type=non_negative, default=8)
    return parser


def _quadrature(args) -> QuadratureSpec:
    tol = args.tol if args.tol is not None else config.default_tolerance(DEFAULT_QUADRATURE.target_tol)
    return DEFAULT_QUADRATURE.replace(panels=args.panels, nodes_per_panel=args.nodes, target_tol=tol)


def _series_tolerance(args) -> float:
    return args.tol if args.tol is not None else config.default_tolerance(TAIL_TOLERANCE)


def _evaluate(args, params: Params) -> complex:
    z = complex(args.z_re, args.z_im)
    if args.kind in _OVERLAPS:
        return overlap(_OVERLAPS[args.kind], args.n, z, params, lmax=args.lmax, tail_tol=_series_tolerance(args))
    if args.kind == 'recurrence':
        return askey_p_by_recurrence(args.n, params, z)
    build = {'askey-p': askey_p, 'askey-q': askey_q, 'jacobi': jacobi_phat}[args.kind]
    return eval_poly(build(args.n, params), z)


def emit_table(df: pd.DataFrame, fmt: str) -> str:
    return WRITERS[fmt].table(df)


def emit_report(report: Report, fmt: str) -> str:
    return WRITERS[fmt].report(report)


def _run(args) -> Tuple[str, int]:
    params = Params(args.alpha, args.beta)
    if args.verb == 'verify':
        report = run_suite(Suite(args.suite), params, _quadrature(args), config.default_parallelism())
        for check in report.failures:
            logger.warning("check %s failed: residual %s > %s %s", check.name, check.residual, check.tolerance,
                           check.error or '')
        return emit_report(report, args.format or 'json'), EXIT_OK if report.passed else EXIT_FAILED
    fmt = args.format or 'csv'
    if args.verb == 'eval':
        df = value_table(_evaluate(args, params))
    elif args.verb == 'coeffs':
        df = coeffs_table(CoeffKind(args.kind), args.n, params, args.lmax)
    elif args.verb == 'spectrum':
        df = spectrum_table(args.nmax, params, pencil=args.kind == 'pencil')
    elif args.kind == 'coeffs':
        df = coeffs_table(CoeffKind.ASKEY_P, args.n, params, args.lmax)
    elif args.kind == 'recurrence':
        df = recurrence_table(args.nmax, params)
    else:
        df = matrix_table(_MATRICES[args.kind], args.nmax, params, _quadrature(args), config.default_parallelism())
    return emit_table(df, fmt), EXIT_OK


def _write(text: str, path: Optional[str], stream: TextIO):
    if path is None:
        stream.write(text)
        return
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)


def dispatch(argv: Sequence[str], stream: Optional[TextIO] = None) -> int:
    """Exit codes: 0 success, 1 failed check, 2 usage or parameter error, 3 numeric error."""
    stream = stream or sys.stdout
    try:
        args = build_parser().parse_args(list(argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        text, code = _run(args)
    except (ParameterError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except NumericError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_NUMERIC
    _write(text, args.out, stream)
    return code


def main():
    sys.exit(dispatch(sys.argv[1:]))
