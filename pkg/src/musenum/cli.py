"""Command-line front end: enumerate MUSes of DIMACS instances, emit metrics CSV.

Exit codes: 0 clean finish or budget stop, 2 unreadable/ill-formed input or
bad flags, 3 satisfiable instance.
"""

from __future__ import annotations

import argparse
import csv
import sys

from .core import (
    CheckStats,
    DimacsParseError,
    Instance,
    InstanceSatisfiableError,
    PreconditionError,
)
from .marco import enumerate_marco
from .oracles import parse_dimacs
from .reference import random_cnf, to_dimacs
from .remus import enumerate_remus
from .session import RemusConfig
from .shrink import ShrinkConfig


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("value must be at least 1")
    return value


def _nonnegative_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if value < 0:
        raise argparse.ArgumentTypeError("value must be non-negative")
    return value


def _reduction_factor(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError("reduction factor must lie strictly between 0 and 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="musenum",
        description="Online enumeration of minimal unsatisfiable subsets of CNF formulas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="enumerate the MUSes of a DIMACS CNF file")
    solve.add_argument("input", help="path to a DIMACS CNF file")
    solve.add_argument(
        "--algorithm", choices=("remus", "marco"), default="remus",
        help="enumeration algorithm (default: remus)",
    )
    solve.add_argument(
        "--time-limit", type=_nonnegative_float, default=None, metavar="SECONDS",
        help="stop cleanly after this wall-clock budget",
    )
    solve.add_argument(
        "--mus-limit", type=_positive_int, default=None, metavar="N",
        help="stop cleanly after emitting N MUSes",
    )
    solve.add_argument(
        "--reduction-factor", type=_reduction_factor, default=0.9, metavar="F",
        help="search-space reduction factor for remus (default: 0.9)",
    )
    solve.add_argument(
        "--no-shrink-feed", action="store_true",
        help="do not feed satisfiable sets found mid-shrink back into the map",
    )
    solve.add_argument(
        "--stats", metavar="PATH", default=None,
        help="write per-MUS cumulative statistics as CSV",
    )
    solve.add_argument(
        "--quiet", action="store_true", help="suppress per-MUS output lines"
    )

    gen = sub.add_parser("gen", help="write a seeded random CNF instance")
    gen.add_argument("--vars", type=_positive_int, required=True, help="variable count")
    gen.add_argument("--clauses", type=_positive_int, required=True, help="clause count")
    gen.add_argument("--width", type=_positive_int, default=3, help="literals per clause (default: 3)")
    gen.add_argument("--seed", type=int, default=0, help="generator seed (default: 0)")
    gen.add_argument("-o", "--output", default=None, help="output path (default: stdout)")
    return parser


def write_stats_csv(stats: CheckStats, path: str) -> None:
    """One CSV row per emitted MUS, cumulative counters at emission time."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["mus_index", "elapsed_s", "oracle_checks", "map_solver_calls", "depth"])
        for snap in stats.per_mus:
            writer.writerow(
                [snap.ordinal, f"{snap.elapsed_s:.6f}", snap.oracle_checks,
                 snap.map_solver_calls, snap.depth]
            )


def _cmd_solve(args) -> int:
    try:
        with open(args.input, "rb") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 2
    try:
        oracle = parse_dimacs(text)
        instance = Instance(oracle)
    except (DimacsParseError, PreconditionError) as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return 2
    config = RemusConfig(
        reduction_factor=args.reduction_factor,
        mus_limit=args.mus_limit,
        time_limit=args.time_limit,
        shrink_cfg=ShrinkConfig(feed_map=not args.no_shrink_feed),
    )
    out = sys.stdout

    def sink(record):
        if args.quiet:
            return
        indices = " ".join(str(i) for i in record.mus.indices_1based())
        out.write(f"MUS {record.ordinal}: {indices}\n")
        out.flush()  # the line must be out before the next oracle check starts

    runner = enumerate_remus if args.algorithm == "remus" else enumerate_marco
    try:
        result = runner(instance, config, sink)
    except InstanceSatisfiableError:
        print("instance is satisfiable", file=sys.stderr)
        return 3
    stats = result.stats
    out.write(
        f"found={stats.muses_emitted} oracle_checks={stats.oracle_checks} "
        f"map_calls={stats.map_solver_calls} elapsed={stats.elapsed():.3f}s "
        f"complete={'yes' if result.complete else 'no'}\n"
    )
    out.flush()
    if args.stats:
        try:
            write_stats_csv(stats, args.stats)
        except OSError as exc:
            print(f"error: cannot write {args.stats}: {exc}", file=sys.stderr)
            return 1
    return 0


def _cmd_gen(args) -> int:
    clauses = random_cnf(args.vars, args.clauses, args.width, args.seed)
    text = to_dimacs(args.vars, clauses)
    if args.output is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.output, "w") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return 1
    return 0


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "solve":
        return _cmd_solve(args)
    return _cmd_gen(args)


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
