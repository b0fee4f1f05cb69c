#!/usr/bin/env python3
"""Rebuild the close-call reference table along all three analytic paths.

Prints one row per length with the score-one heady count and the
win-count gap, recomputed independently by the closed forms, the
length-stepping DP and the incremental term-vector sweep; the row only
prints when all three agree.  Ends with the length-100 headline: the
exact gap and its share of all 2**100 sequences.
"""

import argparse
import sys

from streakcount.counting import decimal_ratio, heady_count, win_gap
from streakcount.recurrence import dp_sweep, table_sweep


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=25, help="last table row (default 25)")
    parser.add_argument("--headline-n", type=int, default=100,
                        help="length for the closing share line (default 100)")
    parser.add_argument("--digits", type=int, default=4,
                        help="digits in the share rendering (default 4)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_n < 2:
        print("error: --max-n must be at least 2", file=sys.stderr)
        return 1

    dp = {d.n: d for d in dp_sweep(args.max_n)}
    inc = {d.n: d for d in table_sweep(args.max_n)}
    print("n close_calls gap")
    for n in range(2, args.max_n + 1):
        rows = {
            "closed": (heady_count(1, n), win_gap(n)),
            "dp": (dp[n].heady.get(1, 0), dp[n].win_gap()),
            "incremental": (inc[n].heady.get(1, 0), inc[n].win_gap()),
        }
        if len(set(rows.values())) != 1:
            print(f"error: paths disagree at n={n}: {rows}", file=sys.stderr)
            return 1
        close_calls, gap = rows["closed"]
        print(f"{n} {close_calls} {gap}")

    n = args.headline_n
    gap = win_gap(n)
    share = decimal_ratio(gap, 1 << n, args.digits)
    print(f"# gap at n={n}: {gap}")
    print(f"# share of all 2**{n} sequences: {share}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
