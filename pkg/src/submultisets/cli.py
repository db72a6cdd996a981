"""Command-line front end.

    submultisets count     -m 5,9,14 -n 12 [--method incexc|dp|brute]
    submultisets table     -m 5,9,14
    submultisets enumerate -m 2,3,3 -n 5 [--limit K] [--start-rank R]
    submultisets check     -m 5,9,14 -n 12 [--budget B]
    submultisets bench     -m 5,9,14 -n 12 [--budget B]

Results go to stdout, diagnostics to stderr. Exit codes: 0 success, 2
malformed input, 3 capacity or budget refusal, 4 cross-check disagreement.
Counts in JSON output are decimal strings, since they routinely exceed the
integer range of downstream consumers.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import islice
from typing import Sequence

from .core import CapacityError, CountMethod, MultisetSpec
from .enumeration import iterate, unrank
from .oracles import Budget, BudgetExceededError, count, cross_check, full_table

_METHOD_ORDER = (
    CountMethod.INCLUSION_EXCLUSION,
    CountMethod.DYNAMIC_PROGRAMMING,
    CountMethod.BRUTE_FORCE,
)


def multiplicity_list(text: str) -> MultisetSpec:
    """argparse type: comma-separated non-negative decimal integers."""
    if text == "":
        return MultisetSpec(())
    parts = text.split(",")
    for part in parts:
        if not (part.isascii() and part.isdigit()):
            raise ValueError(f"bad multiplicity {part!r}")
    return MultisetSpec(tuple(int(part) for part in parts))


def nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError("must be non-negative")
    return value


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="submultisets",
        description="Count and enumerate the sub-multisets of a given cardinality "
        "of a multiset given by its element multiplicities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(p: argparse.ArgumentParser, with_n: bool = True) -> None:
        p.add_argument(
            "-m", "--multiplicities", type=multiplicity_list, required=True,
            help="comma-separated non-negative multiplicities, e.g. 5,9,14",
        )
        if with_n:
            p.add_argument(
                "-n", "--n", dest="n", type=nonnegative_int, required=True,
                help="cardinality of the sub-multisets",
            )
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text",
            help="output format (default text)",
        )

    p_count = sub.add_parser("count", help="print the exact count for one cardinality")
    instance_args(p_count)
    p_count.add_argument(
        "--method", choices=[m.value for m in CountMethod], default=CountMethod.DYNAMIC_PROGRAMMING.value,
        help="counting algorithm (default dp)",
    )
    p_count.add_argument("--budget", type=positive_int, default=None,
                         help="max compositions the brute method may visit")

    p_table = sub.add_parser("table", help="print counts for every cardinality 0..N")
    instance_args(p_table, with_n=False)

    p_enum = sub.add_parser("enumerate", help="list the compositions in lexicographic order")
    instance_args(p_enum)
    p_enum.add_argument("--limit", type=nonnegative_int, default=None,
                        help="print at most this many compositions")
    p_enum.add_argument("--start-rank", type=nonnegative_int, default=0,
                        help="skip to this 0-based rank before printing")

    p_check = sub.add_parser("check", help="run all applicable methods and compare")
    instance_args(p_check)
    p_check.add_argument("--budget", type=positive_int, default=None,
                         help="max compositions the brute method may visit")

    p_bench = sub.add_parser("bench", help="time each applicable method on one instance")
    instance_args(p_bench)
    p_bench.add_argument("--budget", type=positive_int, default=None,
                         help="max compositions the brute method may visit")

    return parser


def _budget_of(args: argparse.Namespace) -> Budget | None:
    return Budget(args.budget) if args.budget is not None else None


def _run_count(args: argparse.Namespace) -> int:
    value = count(args.multiplicities, args.n,
                  method=CountMethod(args.method), budget=_budget_of(args))
    if args.format == "json":
        print(json.dumps({"count": str(value)}))
    else:
        print(value)
    return 0


def _run_table(args: argparse.Namespace) -> int:
    table = full_table(args.multiplicities)
    if args.format == "json":
        print(json.dumps([str(c) for c in table.counts]))
    else:
        for n, c in enumerate(table.counts):
            print(f"{n},{c}")
    return 0


def _run_enumerate(args: argparse.Namespace) -> int:
    spec, n = args.multiplicities, args.n
    if args.start_rank > 0:
        try:
            first = unrank(spec, n, args.start_rank)
        except IndexError:
            first = None  # past the end of the stream: nothing to print
        stream = iter(()) if first is None else iterate(spec, n, start=first)
    else:
        stream = iterate(spec, n)
    if args.limit is not None:
        stream = islice(stream, args.limit)
    if args.format == "json":
        print(json.dumps([list(x) for x in stream]))
    else:
        for x in stream:
            print(",".join(map(str, x)))
    return 0


def _run_check(args: argparse.Namespace) -> int:
    report = cross_check(args.multiplicities, args.n, _budget_of(args))
    if args.format == "json":
        payload: dict[str, object] = {
            m.value: (str(report.values[m]) if m in report.values else None)
            for m in _METHOD_ORDER
        }
        payload["agree"] = report.agree
        print(json.dumps(payload))
    else:
        sep = "," if args.format == "csv" else " "
        for m in _METHOD_ORDER:
            if m in report.values:
                print(f"{m.value}{sep}{report.values[m]}")
            else:
                print(f"{m.value}{sep}skipped")
        print("AGREE" if report.agree else "DISAGREE")
    return 0 if report.agree else 4


def _run_bench(args: argparse.Namespace) -> int:
    timings: dict[str, float | None] = {}
    for m in _METHOD_ORDER:
        started = time.perf_counter()
        try:
            count(args.multiplicities, args.n, method=m, budget=_budget_of(args))
        except (CapacityError, BudgetExceededError):
            timings[m.value] = None
        else:
            timings[m.value] = time.perf_counter() - started
    if args.format == "json":
        print(json.dumps(timings))
    else:
        sep = "," if args.format == "csv" else " "
        for name, elapsed in timings.items():
            if elapsed is None:
                print(f"{name}{sep}skipped")
            else:
                print(f"{name}{sep}{elapsed:.6f}s")
    return 0


_DISPATCH = {
    "count": _run_count,
    "table": _run_table,
    "enumerate": _run_enumerate,
    "check": _run_check,
    "bench": _run_bench,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad input, 0 on --help
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _DISPATCH[args.command](args)
    except (CapacityError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
