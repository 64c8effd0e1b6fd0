#!/usr/bin/env python3
"""Benchmark the compiled scan kernel against the pure-Python backend.

Runs the same perfect-element searches through both backends over a grid of
rings and norm bounds, asserts that the two produce identical hit lists and
scan counts, and prints a timing table with the speedup of the compiled path.

Usage:
    python3 benchmarks/bench_backends.py
    python3 benchmarks/bench_backends.py --rings -1 -2 -7 --bounds 10000 100000
    python3 benchmarks/bench_backends.py --repeat 5 --t 3
"""

from __future__ import annotations

import argparse
import sys
import time

from quadperfect import Ring, search_perfect
from quadperfect.search import HAVE_KERNEL

DEFAULT_RINGS = (-1, -2, -3, -7, -11)
DEFAULT_BOUNDS = (10**3, 10**4, 10**5)


def best_of(repeat: int, fn):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return result, best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--rings", type=int, nargs="+", default=list(DEFAULT_RINGS),
        metavar="D", help="ring discriminant parameters (default: %(default)s)",
    )
    parser.add_argument(
        "--bounds", type=int, nargs="+", default=list(DEFAULT_BOUNDS),
        metavar="B", help="norm bounds to scan to (default: %(default)s)",
    )
    parser.add_argument(
        "--t", type=int, default=2, help="target index value (default: %(default)s)"
    )
    parser.add_argument(
        "--repeat", type=int, default=3,
        help="runs per cell; best time is reported (default: %(default)s)",
    )
    args = parser.parse_args(argv)

    if not HAVE_KERNEL:
        print("compiled kernel unavailable; nothing to compare", file=sys.stderr)
        return 1

    header = (
        f"{'ring':>6} {'bound':>9} {'scanned':>9} {'hits':>5} "
        f"{'python':>10} {'compiled':>10} {'speedup':>8}"
    )
    print(header)
    print("-" * len(header))

    total_py = total_c = 0.0
    for d in args.rings:
        rg = Ring(d)
        for bound in args.bounds:
            rep_py, t_py = best_of(
                args.repeat,
                lambda: search_perfect(rg, 2, args.t, bound, backend="python"),
            )
            rep_c, t_c = best_of(
                args.repeat,
                lambda: search_perfect(rg, 2, args.t, bound, backend="compiled"),
            )
            if rep_py.hits != rep_c.hits:
                print(f"BACKEND MISMATCH: hits differ for d={d} bound={bound}",
                      file=sys.stderr)
                return 1
            if rep_py.elements_scanned != rep_c.elements_scanned:
                print(f"BACKEND MISMATCH: scan counts differ for d={d} "
                      f"bound={bound}", file=sys.stderr)
                return 1
            total_py += t_py
            total_c += t_c
            print(
                f"{d:>6} {bound:>9} {rep_c.elements_scanned:>9} "
                f"{len(rep_c.hits):>5} {t_py * 1000:>8.1f}ms {t_c * 1000:>8.1f}ms "
                f"{t_py / t_c:>7.1f}x"
            )

    print("-" * len(header))
    print(
        f"{'total':>6} {'':>9} {'':>9} {'':>5} {total_py * 1000:>8.1f}ms "
        f"{total_c * 1000:>8.1f}ms {total_py / total_c:>7.1f}x"
    )
    print("\nbackends agree on every cell")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
