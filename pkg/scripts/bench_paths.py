#!/usr/bin/env python3
"""Time the three computation paths against each other at growing lengths.

For each checkpoint length this times a full distribution sweep by the
closed forms, the DP and the incremental term vectors, checks that the
three results match cell for cell, and prints one timing row.  The DP
and incremental paths amortize across the sweep; the closed forms pay
per cell, which is the trade the timings are meant to show.
"""

import argparse
from time import perf_counter

from streakcount.counting import closed_distribution
from streakcount.recurrence import dp_sweep, table_sweep


def sweep_closed(n_max: int):
    return [closed_distribution(n) for n in range(1, n_max + 1)]


def sweep_dp(n_max: int):
    return list(dp_sweep(n_max))


def sweep_incremental(n_max: int):
    return list(table_sweep(n_max))


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--checkpoints", type=int, nargs="+",
                        default=[25, 50, 100, 200],
                        help="sweep lengths to time (default: 25 50 100 200)")
    args = parser.parse_args(argv)

    print(f"{'n':>5}  {'closed':>9}  {'dp':>9}  {'incremental':>11}")
    for n_max in args.checkpoints:
        results = {}
        timings = {}
        for name, sweep in (
            ("closed", sweep_closed),
            ("dp", sweep_dp),
            ("incremental", sweep_incremental),
        ):
            t0 = perf_counter()
            results[name] = sweep(n_max)
            timings[name] = perf_counter() - t0
        if not results["closed"] == results["dp"] == results["incremental"]:
            print(f"error: paths disagree somewhere in n = 1..{n_max}")
            return 1
        print(
            f"{n_max:>5}  {timings['closed']:>8.3f}s  {timings['dp']:>8.3f}s"
            f"  {timings['incremental']:>10.3f}s"
        )
    print("# all checkpoints agree cell for cell")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
