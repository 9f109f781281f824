"""
Command-line interface.

    python -m src.cli gen --kind jm --order 30 --seed 7 -o sq.txt
    python -m src.cli certify sq.txt --method exact --threshold 3/720
    python -m src.cli latinon-density --latinon doubling --all 2 2

Exit codes: 0 success or pass, 1 failed check, 2 input error,
3 generation failure, 4 enumeration bound exceeded.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Dict, List, Optional

from src.analysis.certification import certify, classify_56
from src.analysis.eliminability import is_eliminable, verify_elimination_order
from src.analysis.suite import SUITE_TARGET, suite_72_report
from src.analysis.sweep import sweep, write_sweep_csv
from src.core.config import get_settings
from src.core.errors import (
    EnumerationBoundExceeded,
    GenerationError,
    LatinQError,
    TooLarge,
)
from src.core.fileio import format_square, read_pattern, read_square, write_square
from src.core.patterns import (
    AnyPattern,
    Pattern,
    check_enumerable,
    iter_patterns,
    pattern_from_id,
    pattern_id,
)
from src.core.rational import format_rational, parse_rational, rational_record
from src.density.exact import exact_density, exact_profile, generalized_exact_density
from src.density.montecarlo import mc_density, mc_profile
from src.generators import KINDS, generate
from src.latinon import exact as latinon_exact
from src.latinon.io import load_latinon
from src.latinon.model import check_axioms
from src.latinon.sampling import rb_mc_density

logger = logging.getLogger("src.cli")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_GENERATION = 3
EXIT_BOUNDS = 4

SCHEMA = 1


def _rows(pattern: AnyPattern) -> List[list]:
    return [["*" if v is None else v for v in row] for row in pattern.entries]


def _emit(payload: Dict[str, object], path: Optional[str]) -> None:
    text = json.dumps({"schema": SCHEMA, **payload}, indent=2)
    if path:
        Path(path).write_text(text + "\n")
    else:
        print(text)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    inner = read_square(args.inner) if args.inner else None
    square = generate(args.kind, args.order, args.seed, args.steps, inner, args.progress)
    comments = [f"kind={args.kind} order={args.order} seed={args.seed}"]
    if args.output:
        write_square(square, args.output, comments)
        print(f"order {square.order} kind {args.kind} -> {args.output}")
    else:
        sys.stdout.write(format_square(square, comments))
    return EXIT_OK


def cmd_density(args: argparse.Namespace) -> int:
    square = read_square(args.square)
    pattern = read_pattern(args.pattern)
    payload: Dict[str, object] = {
        "command": "density",
        "n": square.order,
        "pattern": _rows(pattern),
        "method": args.method,
    }
    if args.method == "exact":
        if isinstance(pattern, Pattern):
            value = exact_density(square, pattern, args.threads)
        else:
            value = generalized_exact_density(square, pattern, args.threads)
        payload["density"] = rational_record(value)
    else:
        est = mc_density(square, pattern, args.samples, args.seed, args.threads, args.progress)
        payload["density"] = est.to_dict()
    _emit(payload, args.json)
    return EXIT_OK


def cmd_profile(args: argparse.Namespace) -> int:
    square = read_square(args.square)
    k, l = args.shape
    if args.method == "exact":
        profile = exact_profile(square, k, l, args.threads, args.progress)
        payload = {
            "command": "profile",
            "method": "exact",
            "n": square.order,
            "k": k,
            "l": l,
            "total": profile.total,
            "ties": profile.ties,
            "tie_fraction": rational_record(profile.tie_fraction),
            "densities": {
                str(pid): {"count": c, **rational_record(profile.density(pid))}
                for pid, c in sorted(profile.counts.items())
            },
        }
    else:
        mc = mc_profile(square, k, l, args.samples, args.seed, args.threads, args.progress)
        payload = {
            "command": "profile",
            "method": "mc",
            "n": square.order,
            "k": k,
            "l": l,
            "samples": mc.samples,
            "seed": mc.seed,
            "ties": mc.ties.to_dict(),
            "densities": {str(pid): e.to_dict() for pid, e in sorted(mc.estimates.items())},
        }
    _emit(payload, args.json)
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    square = read_square(args.square)
    if args.method == "exact":
        profile = exact_profile(square, 2, 3, args.threads, args.progress)
    else:
        profile = mc_profile(square, 2, 3, args.samples, args.seed, args.threads, args.progress)
    report = certify(profile, args.threshold)
    _emit({"command": "certify", **report.to_dict()}, args.json)
    print(
        f"{report.verdict}: max_dev={_format_value(report.max_dev)} "
        f"threshold={format_rational(report.threshold)}",
        file=sys.stderr,
    )
    return EXIT_OK if report.passed else EXIT_FAIL


def _format_value(value) -> str:
    return format_rational(value) if isinstance(value, (Fraction, int)) else f"{value:.6g}"


def cmd_latinon_density(args: argparse.Namespace) -> int:
    latinon = load_latinon(args.latinon)
    if args.all:
        k, l = args.all
        check_enumerable(k, l)
        patterns: List[AnyPattern] = list(iter_patterns(k, l))
    else:
        patterns = [read_pattern(args.pattern)]
    results = []
    if args.method == "exact":
        if args.all:
            profile = latinon_exact.exact_profile(latinon, *args.all)
            values = [profile[pid] for pid in range(len(patterns))]
        else:
            values = [latinon_exact.exact_density(latinon, patterns[0])]
        for p, v in zip(patterns, values):
            results.append({"pattern": _rows(p), **rational_record(v)})
    else:
        for p in patterns:
            est = rb_mc_density(latinon, p, args.samples, args.seed, args.threads)
            results.append({"pattern": _rows(p), **est.to_dict()})
    _emit(
        {
            "command": "latinon-density",
            "latinon": latinon.name,
            "method": args.method,
            "densities": results,
        },
        args.json,
    )
    return EXIT_OK


def cmd_latinon_check(args: argparse.Namespace) -> int:
    latinon = load_latinon(args.latinon)
    report = check_axioms(latinon)
    payload: Dict[str, object] = {
        "command": "latinon-check",
        "latinon": latinon.name,
        "verdict": "pass" if report.passed else "fail",
        "checked": report.checked,
    }
    if report.violation is not None:
        payload["violation"] = str(report.violation)
    _emit(payload, args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_patterns(args: argparse.Namespace) -> int:
    k, l = args.shape
    if args.id is not None:
        pattern = pattern_from_id(k, l, args.id)
        print(f"{args.id}: {_rows(pattern)}")
        return EXIT_OK
    check_enumerable(k, l)
    if args.classify_56:
        same, rest = classify_56(iter_patterns(k, l))
        print(f"5 and 6 in the same column: {len(same)}")
        print(f"otherwise: {len(rest)}")
        return EXIT_OK
    if args.list:
        for p in iter_patterns(k, l):
            print(f"{pattern_id(p)}: {_rows(p)}")
    print(f"{factorial(k * l)} patterns of shape {k}x{l}")
    return EXIT_OK


def cmd_eliminable(args: argparse.Namespace) -> int:
    pattern = read_pattern(args.pattern)
    result = is_eliminable(pattern)
    payload: Dict[str, object] = {
        "command": "eliminable",
        "pattern": _rows(pattern),
        "eliminable": result.eliminable,
    }
    if result.eliminable:
        payload["witness"] = list(result.witness)
        payload["labels"] = {str(v): lab for v, lab in result.labels.items()}
        payload["verified"] = verify_elimination_order(pattern, result.witness)
    _emit(payload, args.json)
    return EXIT_OK


def cmd_suite72(args: argparse.Namespace) -> int:
    latinon = load_latinon(args.latinon)
    report = suite_72_report(latinon)
    _emit(
        {
            "command": "suite72",
            "latinon": latinon.name,
            "target": format_rational(SUITE_TARGET),
            "verdict": "pass" if report.passed else "fail",
            "densities": [
                {"pattern": _rows(g), **rational_record(d)} for g, d in report.densities
            ],
            "deviating": [_rows(g) for g, _ in report.deviating],
        },
        args.json,
    )
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_sweep(args: argparse.Namespace) -> int:
    targets = [pattern_from_id(2, 3, pid) for pid in args.targets]
    frame = sweep(
        args.kinds, args.orders, args.seeds, targets,
        method=args.method, samples=args.samples,
        threads=args.threads, progress=args.progress,
    )
    if args.output:
        write_sweep_csv(frame, args.output)
        print(f"{len(frame)} rows -> {args.output}")
    else:
        sys.stdout.write(frame.to_csv(index=False))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_mc_flags(parser: argparse.ArgumentParser, samples: int = 10 ** 6) -> None:
    parser.add_argument("--samples", type=_positive_int, default=samples, help=f"Monte Carlo samples (default: {samples})")
    parser.add_argument("--seed", type=int, default=0, help="64-bit seed (default: 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latinq",
        description="Pattern densities, quasirandomness and Latinons for Latin squares",
    )
    parser.add_argument("--threads", type=_positive_int, default=None, help="worker cap (default: LATINQ_THREADS or 1)")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info and progress bars, -vv debug")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a Latin square")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=_positive_int, default=None, help="Jacobson-Matthews moves (default: 5*n^3)")
    p.add_argument("--inner", default=None, help="inner square file for blow-ups")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("density", help="density of one pattern in a square")
    p.add_argument("square")
    p.add_argument("--pattern", required=True)
    p.add_argument("--method", choices=("exact", "mc"), default="exact")
    _add_mc_flags(p)
    p.add_argument("--json", default=None, help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("profile", help="densities of all k x l patterns in a square")
    p.add_argument("square")
    p.add_argument("--shape", type=int, nargs=2, metavar=("K", "L"), default=(2, 3))
    p.add_argument("--method", choices=("exact", "mc"), default="exact")
    _add_mc_flags(p)
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("certify", help="2x3 quasirandomness certificate")
    p.add_argument("square")
    p.add_argument("--method", choices=("exact", "mc"), default="exact")
    _add_mc_flags(p)
    p.add_argument("--threshold", type=_rational_arg, required=True, help="pass bar for max_dev, e.g. 3/720")
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("latinon-density", help="pattern densities in a step Latinon")
    p.add_argument("--latinon", required=True, help="uniform, doubling, quadrant or a JSON file")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--pattern")
    which.add_argument("--all", type=int, nargs=2, metavar=("K", "L"))
    p.add_argument("--method", choices=("exact", "rbmc"), default="exact")
    _add_mc_flags(p, samples=10 ** 5)
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_latinon_density)

    p = sub.add_parser("latinon-check", help="verify the uniform-marginal identities")
    p.add_argument("--latinon", required=True)
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_latinon_check)

    p = sub.add_parser("patterns", help="enumerate or look up patterns")
    p.add_argument("shape", type=int, nargs=2, metavar=("K", "L"))
    p.add_argument("--id", type=int, default=None)
    p.add_argument("--list", action="store_true")
    p.add_argument("--classify-56", action="store_true", help="split 2x3 patterns by the column of 5 and 6")
    p.set_defaults(func=cmd_patterns)

    p = sub.add_parser("eliminable", help="decide eliminability of a generalized pattern")
    p.add_argument("pattern")
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_eliminable)

    p = sub.add_parser("suite72", help="exact densities of the 72 generalized patterns")
    p.add_argument("--latinon", default="uniform")
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_suite72)

    p = sub.add_parser("sweep", help="certify generated squares over kinds, orders and seeds")
    p.add_argument("--kinds", nargs="+", choices=KINDS, default=["jm"])
    p.add_argument("--orders", nargs="*", type=int, default=[])
    p.add_argument("--seeds", nargs="+", type=int, default=[0])
    p.add_argument("--targets", nargs="*", type=int, default=[0], help="2x3 pattern ids to tabulate")
    p.add_argument("--method", choices=("exact", "mc"), default="exact")
    p.add_argument("--samples", type=_positive_int, default=10 ** 6)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_sweep)
    return parser


def _configure_logging(verbose: int) -> None:
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, get_settings().log_level, logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _configure_logging(args.verbose)
        args.progress = args.verbose > 0
        logger.info("running %s", args.command)
        return args.func(args)
    except (TooLarge, EnumerationBoundExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BOUNDS
    except GenerationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GENERATION
    except (LatinQError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
