"""Pure-Python scan backend.

Walks every sector-canonical element with norm up to the bound in raster
order and tests the perfection equation delta(n, z) = t * N(z)^(n/2) through
the exact factorization machinery.  Arbitrary precision, any positive even n;
the compiled kernel mirrors this loop for n = 2 with machine integers.
"""

from __future__ import annotations

import math
from typing import Iterator

from .divisor_functions import delta
from .rings import QuadInt, Ring


def iter_sector_coords(rg: Ring, bound: int) -> Iterator[tuple[int, int]]:
    """All (a, b) in the fundamental sector with 1 <= N <= bound, raster
    order (not norm order)."""
    d = rg.d
    if d == -1:
        for a in range(1, math.isqrt(bound) + 1):
            for b in range(0, math.isqrt(bound - a * a) + 1):
                yield a, b
    elif d == -2:
        for a in range(1, math.isqrt(bound) + 1):
            yield a, 0
        for b in range(1, math.isqrt(bound // 2) + 1):
            amax = math.isqrt(bound - 2 * b * b)
            for a in range(-amax, amax + 1):
                yield a, b
    elif d == -3:
        for a in range(1, math.isqrt(bound) + 1):
            b = 0
            while a * a + a * b + b * b <= bound:
                yield a, b
                b += 1
    else:
        # Half-integer basis, sector [0, pi): 4N = (2a+b)^2 + |d| b^2.
        for a in range(1, math.isqrt(bound) + 1):
            yield a, 0
        for b in range(1, math.isqrt(4 * bound // -d) + 1):
            rem = 4 * bound + d * b * b
            if rem < 0:
                break
            s = math.isqrt(rem)
            lo = -((s + b) // 2)
            hi = (s - b) // 2
            for a in range(lo, hi + 1):
                yield a, b


def scan(
    rg: Ring, n: int, t: int, bound: int, odd_only: bool
) -> tuple[list[QuadInt], int]:
    """Hits (unsorted) and the count of elements examined."""
    h = n // 2
    hits = []
    scanned = 0
    for a, b in iter_sector_coords(rg, bound):
        z = QuadInt(rg, a, b)
        nz = z.norm()
        if odd_only and nz % 2 == 0:
            continue
        scanned += 1
        if nz == 1:
            continue
        if delta(n, z) == t * nz**h:
            hits.append(z)
    return hits, scanned
