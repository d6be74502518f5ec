"""Command line: ``chiral-atlas classify`` and ``chiral-atlas bench``.

Exit codes: 0 success, 2 parse/input error, 3 capacity error, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import DEFAULT_CAP
from .atlas import bench_json, bench_table, run_bench, run_classify
from .blt import SearchConfig
from .errors import CapacityError, InputError, InvariantError

EXIT_OK, EXIT_PARSE, EXIT_CAPACITY, EXIT_INVARIANT = 0, 2, 3, 4


def _add_search_flags(p: argparse.ArgumentParser):
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--include-regular", action="store_true",
                   help="also report directly regular polytopes")
    p.add_argument("--merge-enantiomorphs", action="store_true",
                   help="list each chiral pair once")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="element enumeration cap (default %(default)s)")
    p.add_argument("--threads", type=int, default=1,
                   help="worker processes for independent seeds")
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chiral-atlas",
                                     description="Classify chiral polytopes of a permutation group.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify one group")
    c.add_argument("--group", required=True,
                   help="builtin (sym:n, alt:n, cyc:n, dih:n, psl2:p, psl3:p) or generator file")
    c.add_argument("--algorithm", choices=("blt", "hhl"), default="blt")
    _add_search_flags(c)

    b = sub.add_parser("bench", help="time BLT against HHL")
    b.add_argument("--group", action="append", required=True, dest="groups")
    _add_search_flags(b)
    return parser


def _config(args) -> SearchConfig:
    return SearchConfig(max_rank=args.max_rank, include_regular=args.include_regular,
                        merge_enantiomorphs=args.merge_enantiomorphs,
                        enumeration_cap=args.cap, threads=args.threads)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "classify":
            report = run_classify(args.group, cfg, args.algorithm)
            print(report.to_json() if args.format == "json" else report.to_text())
        else:
            rows = run_bench(args.groups, cfg)
            print(bench_json(rows) if args.format == "json" else bench_table(rows))
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"capacity exceeded ({exc.cap}): {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
