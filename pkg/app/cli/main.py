"""
Command-line interface for the bigrassmannian census

Exit codes: 0 success, 1 usage or parse error, 2 internal invariant violation.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence

from app.analytics.verification_service import VERIFY_CAP, VerificationService
from app.combinatorics.bigrassmannian import below_set, beta_report
from app.combinatorics.errors import CombinatoricsError, InvariantViolation, OrderMismatch
from app.combinatorics.oracle import IDEAL_CAP, bruhat_leq_bfs
from app.combinatorics.perm_core import Permutation, parse_permutation
from app.combinatorics.triangle import (
    JoinIrreducibleIndex,
    Ordering,
    compare,
    difference_triangle,
    join_irreducible_permutation,
    make_join_irreducible,
    sigma,
    sigma_identity,
    triangle_of_permutation,
)
from app.config import SWEEP_CONFIG

from .dot_export import export_dot
from .output import build_error, build_record, dumps

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class UsageError(Exception):
    """Bad command-line usage"""


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as exit status 1"""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _emit(args: argparse.Namespace, command: str, input_value: object,
          data: Dict[str, object], lines: List[str]) -> None:
    if args.json:
        print(dumps(build_record(command, input_value, data)))
    else:
        for line in lines:
            print(line)


def _permutation_arg(tokens: List[str]) -> Permutation:
    return parse_permutation(' '.join(tokens))


def _rows_text(rows: Sequence[Sequence[int]]) -> str:
    return ' / '.join(' '.join(str(v) for v in row) for row in rows)


def cmd_beta(args: argparse.Namespace) -> int:
    """All four beta values and whether they agree"""
    x = _permutation_arg(args.permutation)
    report = beta_report(x)
    v = report.values()
    _emit(args, 'beta', x, {'permutation': x, 'n': x.n, **report.to_dict()}, [
        f"beta = {report.beta} (positional={v['positional']} squares={v['squares']} "
        f"inversions={v['inversions']} sigma={v['sigma']})"
    ])
    if not report.agree:
        logger.error(f"beta methods disagree for {x}: {v}")
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_below(args: argparse.Namespace) -> int:
    """List B(x), one element per line with its (a, b, c) index"""
    x = _permutation_arg(args.permutation)
    result = below_set(x)
    lines = [f"{perm} {idx}" for idx, perm in result.entries]
    lines.append(f"count = {len(result)}")
    data = {
        'permutation': x,
        'count': len(result),
        'elements': [
            {'permutation': perm, 'a': idx.a, 'b': idx.b, 'c': idx.c}
            for idx, perm in result.entries
        ],
    }
    _emit(args, 'below', x, data, lines)
    return EXIT_OK


def cmd_triangle(args: argparse.Namespace) -> int:
    """Render the monotone triangle of x"""
    x = _permutation_arg(args.permutation)
    t = triangle_of_permutation(x)
    diff = difference_triangle(t)
    if x.n == 1:
        lines = ["(empty triangle of order 1)"]
    else:
        lines = [str(t)]
    if args.diff and x.n > 1:
        lines.append(f"difference = {_rows_text(diff)}")
        lines.append(f"sum = {sigma(t) - sigma_identity(x.n)}")
    data = {
        'permutation': x,
        'rows': t,
        'sigma': sigma(t),
        'sigma_identity': sigma_identity(x.n),
        'difference': [list(row) for row in diff],
    }
    _emit(args, 'triangle', x, data, lines)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    """Compare two permutations in Bruhat order via their triangles"""
    left = parse_permutation(args.left)
    right = parse_permutation(args.right)
    if left.n != right.n:
        raise OrderMismatch(f"cannot compare degree {left.n} with degree {right.n}")
    verdict = compare(triangle_of_permutation(left), triangle_of_permutation(right))
    data: Dict[str, object] = {'left': left, 'right': right, 'verdict': verdict}
    lines = [verdict.value]
    status = EXIT_OK
    if args.oracle:
        if left.n > IDEAL_CAP:
            raise UsageError(f"--oracle supports n <= {IDEAL_CAP}")
        below = bruhat_leq_bfs(left, right)
        above = bruhat_leq_bfs(right, left)
        oracle_verdict = {
            (True, True): Ordering.EQUAL,
            (True, False): Ordering.LESS,
            (False, True): Ordering.GREATER,
            (False, False): Ordering.INCOMPARABLE,
        }[(below, above)]
        data['oracle_verdict'] = oracle_verdict
        lines.append(f"oracle = {oracle_verdict.value}")
        if oracle_verdict != verdict:
            logger.error(f"triangle order and BFS disagree on ({left}, {right})")
            status = EXIT_INVARIANT
    _emit(args, 'compare', [left, right], data, lines)
    return status


def cmd_jirr(args: argparse.Namespace) -> int:
    """Permutation and triangle of J_abc"""
    idx = JoinIrreducibleIndex(args.a, args.b, args.c, args.n)
    perm = join_irreducible_permutation(idx)
    t = make_join_irreducible(idx)
    data = {'index': idx, 'permutation': perm, 'rows': t}
    _emit(args, 'jirr', idx, data, [perm.one_line(), f"triangle = {t}"])
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run the verification suites"""
    if not 1 <= args.n <= VERIFY_CAP:
        raise UsageError(f"--n must be between 1 and {VERIFY_CAP}")
    if args.jobs is not None and args.jobs < 1:
        raise UsageError("--jobs must be positive")
    config = dict(SWEEP_CONFIG)
    if args.samples is not None:
        config['lattice_samples'] = args.samples
    service = VerificationService(config)
    degrees = list(range(1, args.n + 1)) if args.upto else [args.n]
    logger.info(f"Starting verification for degrees {degrees}")
    summary = service.run_all(degrees, jobs=args.jobs)
    passed = service.all_passed(summary)
    if args.json:
        print(dumps(build_record('verify', {'n': args.n, 'upto': args.upto},
                                 {'passed': passed, 'summary': summary})))
    else:
        print(service.generate_verification_report(summary), end='')
    return EXIT_OK if passed else EXIT_INVARIANT


def cmd_export_dot(args: argparse.Namespace) -> int:
    """DOT digraph of B(x) and x with covering edges"""
    x = _permutation_arg(args.permutation)
    text = export_dot(x)
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as handle:
            handle.write(text)
        logger.info(f"Wrote Hasse diagram of B({x}) to {args.output}")
    else:
        print(text, end='')
    return EXIT_OK


def build_parser() -> CliArgumentParser:
    common = CliArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="machine-readable output")
    common.add_argument('--log-level', default=None, help="DEBUG, INFO, WARNING or ERROR")

    parser = CliArgumentParser(
        prog='bigrass',
        description="count and list bigrassmannian permutations below a permutation",
    )
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    def add(name: str, handler: Callable[[argparse.Namespace], int],
            help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text, parents=[common])
        cmd.set_defaults(handler=handler)
        return cmd

    perm_help = "permutation in one-line notation: 42513, '4 2 5 1 3' or 4,2,5,1,3"

    add('beta', cmd_beta, "beta(x) by every method").add_argument(
        'permutation', nargs='+', help=perm_help)
    add('below', cmd_below, "list B(x)").add_argument(
        'permutation', nargs='+', help=perm_help)

    tri = add('triangle', cmd_triangle, "monotone triangle of x")
    tri.add_argument('permutation', nargs='+', help=perm_help)
    tri.add_argument('--diff', action='store_true', help="also print x_ab - b and its sum")

    cmp_ = add('compare', cmd_compare, "Bruhat comparison of two permutations")
    cmp_.add_argument('left', help=perm_help)
    cmp_.add_argument('right', help=perm_help)
    cmp_.add_argument('--oracle', action='store_true',
                      help=f"cross-check with reduction-chain search (n <= {IDEAL_CAP})")

    jirr = add('jirr', cmd_jirr, "the join-irreducible J_abc")
    for name in ('n', 'a', 'b', 'c'):
        jirr.add_argument(name, type=int)

    verify = add('verify', cmd_verify, "run the verification suites")
    verify.add_argument('--n', type=int, required=True, help=f"degree, at most {VERIFY_CAP}")
    verify.add_argument('--jobs', type=int, default=None, help="worker processes")
    verify.add_argument('--upto', action='store_true', help="run every degree 1..n")
    verify.add_argument('--samples', type=int, default=None,
                        help="random triples for the sampled lattice suite")

    dot = add('export-dot', cmd_export_dot, "Hasse diagram of B(x) in DOT format")
    dot.add_argument('permutation', nargs='+', help=perm_help)
    dot.add_argument('--output', default=None, help="write to this file instead of stdout")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    json_requested = '--json' in (sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        if json_requested:
            print(dumps(build_error(None, None, str(e))))
        else:
            print(f"bigrass: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    level = (args.log_level or SWEEP_CONFIG['log_level']).upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format=LOG_FORMAT)

    try:
        return args.handler(args)
    except InvariantViolation as e:
        message, status = f"internal invariant violated: {e}", EXIT_INVARIANT
    except (CombinatoricsError, UsageError) as e:
        message, status = f"{type(e).__name__}: {e}", EXIT_USAGE
    logger.debug(f"Command {args.command} failed with exit status {status}")
    if args.json:
        print(dumps(build_error(args.command, getattr(args, 'permutation', None), message)))
    else:
        print(f"bigrass: error: {message}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
