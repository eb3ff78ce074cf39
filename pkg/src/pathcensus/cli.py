"""Command-line front end.

Subcommands: eval, census, scan, conjecture, verify, bench.  Primary results
go to stdout (text, json, or csv); timings and cache statistics go to stderr
so stdout stays pipe-safe.  Exit codes: 0 clean, 1 mathematical finding
(oracle discrepancy or observation violation), 2 usage error.
"""

import argparse
import json
import os
import sys
import time

from .analysis import (
    DEFAULT_SCAN_LIMIT,
    check_conjecture,
    report_to_json,
    scan,
    tt_count,
    verify_against_oracle,
    verify_tournament_invariants,
)
from .engine import MemoTable, f_value, memo_load, memo_save
from .errors import InvalidOrder, PathCensusError, ScanTooLarge
from .oracle import CENSUS_LIMIT
from .types import format_entries, is_symmetric, parse_composition, parse_signed_type

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format for the primary stream (default: text)",
    )
    parser.add_argument(
        "--cache-file",
        default=os.environ.get("PATHCENSUS_CACHE"),
        help="path-function memo persisted across runs "
        "(default: $PATHCENSUS_CACHE if set)",
    )
    parser.add_argument(
        "--jobs", type=int, default=1, help="worker processes (default: 1)"
    )
    parser.add_argument(
        "--force",
        action="store_true",
        help="lift the built-in p/n safety limits",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathcensus",
        description="Exact per-type counts of oriented Hamiltonian paths "
        "in transitive tournaments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the path-function on a composition")
    p.add_argument("tuple", help="composition, e.g. 1,2,1,1")
    _add_common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser(
        "census",
        help="count paths of one type in the transitive tournament",
        epilog="A type starting with a negative entry needs a '--' separator: "
        "census -n 3 -- -1,1",
    )
    p.add_argument("-n", type=int, required=True, help="tournament order")
    p.add_argument("tuple", help="signed type, e.g. 1,-2,1")
    _add_common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("scan", help="evaluate all compositions of a total")
    p.add_argument("-p", type=int, required=True, help="composition total")
    p.add_argument(
        "--sort",
        choices=("value", "composition"),
        default="value",
        help="row order in text/csv output (default: value, ascending)",
    )
    _add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser(
        "conjecture", help="check the all-ones maximality observations"
    )
    p.add_argument("--max-p", type=int, default=DEFAULT_SCAN_LIMIT)
    _add_common(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("verify", help="cross-check counts against brute force")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument(
        "--kind",
        choices=("transitive", "nearly", "random"),
        default="transitive",
    )
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time a scan and report cache statistics")
    p.add_argument("-p", type=int, default=14)
    _add_common(p)
    p.set_defaults(func=cmd_bench)

    return parser


def _load_memo(args) -> MemoTable:
    if args.cache_file and os.path.exists(args.cache_file):
        return memo_load(args.cache_file)
    return MemoTable()


def _finish_memo(args, memo: MemoTable) -> None:
    if args.cache_file:
        memo_save(memo, args.cache_file)


def _diag(memo: MemoTable, elapsed: float) -> None:
    probes = memo.hits + memo.misses
    rate = 100.0 * memo.hits / probes if probes else 0.0
    print(
        f"took {elapsed:.3f}s; cache hits={memo.hits} misses={memo.misses} "
        f"rate={rate:.1f}%",
        file=sys.stderr,
    )


def cmd_eval(args) -> int:
    comp = parse_composition(args.tuple)
    memo = _load_memo(args)
    start = time.perf_counter()
    value = f_value(comp, memo)
    elapsed = time.perf_counter() - start
    if args.format == "json":
        print(
            json.dumps(
                {
                    "report": "eval",
                    "composition": format_entries(comp),
                    "value": str(value),
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        print(f"{format_entries(comp)};{value}")
    else:
        print(value)
    _diag(memo, elapsed)
    _finish_memo(args, memo)
    return EXIT_OK


def cmd_census(args) -> int:
    if args.n < 3:
        raise InvalidOrder(f"census needs n >= 3, got {args.n}")
    a = parse_signed_type(args.tuple)
    memo = _load_memo(args)
    start = time.perf_counter()
    value = tt_count(args.n, a, memo)
    elapsed = time.perf_counter() - start
    sym = "symmetric" if is_symmetric(a) else "non-symmetric"
    if args.format == "json":
        print(
            json.dumps(
                {
                    "report": "census",
                    "n": args.n,
                    "type": format_entries(a),
                    "symmetric": is_symmetric(a),
                    "value": str(value),
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        print(f"{format_entries(a)};{sym};{value}")
    else:
        print(f"{value} {sym}")
    _diag(memo, elapsed)
    _finish_memo(args, memo)
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.p < 2:
        raise ScanTooLarge(f"scan needs p >= 2, got {args.p}")
    memo = _load_memo(args)
    limit = None if args.force else DEFAULT_SCAN_LIMIT
    start = time.perf_counter()
    report = scan(args.p, memo, limit=limit, jobs=args.jobs)
    elapsed = time.perf_counter() - start
    rows = report.rows
    if args.sort == "composition":
        rows = sorted(rows, key=lambda r: r[0])
    if args.format == "json":
        print(report_to_json(report))
    elif args.format == "csv":
        for c, v in rows:
            print(f"{format_entries(c)};{v}")
    else:
        for c, v in rows:
            print(f"{format_entries(c)} => {v}")
    _diag(memo, elapsed)
    _finish_memo(args, memo)
    return EXIT_OK


def _yn(flag: bool) -> str:
    return "yes" if flag else "NO"


def cmd_conjecture(args) -> int:
    if args.max_p < 3:
        raise ScanTooLarge(f"conjecture check needs max-p >= 3, got {args.max_p}")
    if args.max_p > DEFAULT_SCAN_LIMIT and not args.force:
        raise ScanTooLarge(
            f"max-p {args.max_p} exceeds the limit {DEFAULT_SCAN_LIMIT} "
            "(pass --force to go further)"
        )
    memo = _load_memo(args)
    start = time.perf_counter()
    verdicts = [
        check_conjecture(p, memo, limit=None, jobs=args.jobs)
        for p in range(3, args.max_p + 1)
    ]
    elapsed = time.perf_counter() - start
    if args.format == "json":
        print(
            json.dumps(
                {
                    "report": "conjecture-run",
                    "max_p": args.max_p,
                    "verdicts": [v.to_json_dict() for v in verdicts],
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        for v in verdicts:
            print(
                f"{v.p};{str(v.all_ones_is_max).lower()};"
                f"{str(v.runner_up_is_1_2_ones).lower()};"
                f"{str(v.runner_up_exceeds_half_max).lower()}"
            )
    else:
        for v in verdicts:
            line = (
                f"p={v.p} all_ones_max={_yn(v.all_ones_is_max)} "
                f"runner_up_pattern={_yn(v.runner_up_is_1_2_ones)} "
                f"runner_up_gt_half={_yn(v.runner_up_exceeds_half_max)}"
            )
            if v.witnesses:
                line += " witnesses=" + "|".join(
                    format_entries(c) for c in v.witnesses
                )
            print(line)
    _diag(memo, elapsed)
    _finish_memo(args, memo)
    return EXIT_OK if all(v.ok for v in verdicts) else EXIT_FINDING


def cmd_verify(args) -> int:
    if args.max_n < 3:
        raise InvalidOrder(f"verify needs max-n >= 3, got {args.max_n}")
    census_limit = None if args.force else CENSUS_LIMIT
    if args.max_n > CENSUS_LIMIT and not args.force:
        raise InvalidOrder(
            f"max-n {args.max_n} exceeds the census limit {CENSUS_LIMIT} "
            "(pass --force to go further)"
        )
    memo = _load_memo(args)
    start = time.perf_counter()
    if args.kind == "transitive":
        report = verify_against_oracle(
            args.max_n, memo, jobs=args.jobs, census_limit=census_limit
        )
    else:
        report = verify_tournament_invariants(
            args.kind,
            args.max_n,
            args.seed,
            jobs=args.jobs,
            census_limit=census_limit,
        )
    elapsed = time.perf_counter() - start
    if args.format == "json":
        print(report_to_json(report))
    elif args.format == "csv":
        for d in report.discrepancies:
            print(f"{d.n};{d.type_key};{d.oracle};{d.expected};{d.note}")
    else:
        print(
            f"kind={report.kind} n=3..{report.max_n} checks={report.checks} "
            f"discrepancies={len(report.discrepancies)}"
        )
        for d in report.discrepancies:
            print(
                f"n={d.n} type={d.type_key} oracle={d.oracle} "
                f"expected={d.expected} ({d.note})"
            )
    _diag(memo, elapsed)
    _finish_memo(args, memo)
    return EXIT_OK if report.ok else EXIT_FINDING


def cmd_bench(args) -> int:
    if args.p < 2:
        raise ScanTooLarge(f"bench needs p >= 2, got {args.p}")
    memo = _load_memo(args)
    limit = None if args.force else DEFAULT_SCAN_LIMIT
    start = time.perf_counter()
    report = scan(args.p, memo, limit=limit, jobs=args.jobs)
    elapsed = time.perf_counter() - start
    comp, value = report.max_row
    print(
        f"p={report.p} compositions={len(report.rows)} "
        f"max={format_entries(comp)}:{value}"
    )
    print(f"scan took {elapsed:.3f}s with {args.jobs} job(s)", file=sys.stderr)
    _diag(memo, elapsed)
    _finish_memo(args, memo)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PathCensusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
