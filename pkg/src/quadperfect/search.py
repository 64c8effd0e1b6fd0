"""Norm-bounded exhaustive search for n-powerfully t-perfect elements.

Two interchangeable backends walk the same sector lattice: a Cython kernel
(built as quadperfect._scan, int64 arithmetic with a smallest-prime-factor
sieve) and the pure-Python loop in _scan_py.  The kernel handles the n = 2
case up to bound 10^7; everything else, and installs without the extension,
run the pure path.  Both return identical hits; every hit is re-validated
through the naive divisor sum before it is reported.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import _scan_py
from .divisor_functions import NAIVE_NORM_CAP, delta, delta_naive
from .errors import TooLarge
from .rings import QuadInt, Ring

try:
    from . import _scan

    HAVE_KERNEL = True
except ImportError:
    _scan = None
    HAVE_KERNEL = False

# int64 headroom and sieve memory both cap the kernel.
KERNEL_MAX_BOUND = 10**7
KERNEL_MAX_T = 10**6

DEFAULT_BACKEND = "compiled" if HAVE_KERNEL else "python"


@dataclass
class SearchReport:
    ring: Ring
    n: int
    t: int
    norm_bound: int
    hits: list[QuadInt]
    elements_scanned: int
    wall_time_ms: int
    odd_norm: bool = False
    hit_checks: list = field(default_factory=list)
    backend: str = "python"

    def to_json(self) -> dict:
        return {
            "ring": {"d": self.ring.d},
            "n": self.n,
            "t": self.t,
            "norm_bound": self.norm_bound,
            "hits": [z.to_json() for z in self.hits],
            "elements_scanned": self.elements_scanned,
            "wall_time_ms": self.wall_time_ms,
            "odd_norm": self.odd_norm,
            "hit_checks": [
                [rep.to_json() for rep in reps] for reps in self.hit_checks
            ],
        }


def enumerate_canonical(rg: Ring, bound: int):
    """All sector-canonical elements with norm <= bound, in (norm, a, b)
    order.  Materializes the list; meant for desk-scale bounds."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    elems = [QuadInt(rg, a, b) for a, b in _scan_py.iter_sector_coords(rg, bound)]
    elems.sort(key=QuadInt.sort_key)
    yield from elems


def _validate(n: int, t: int, bound: int) -> None:
    if n <= 0 or n % 2:
        raise ValueError(f"n must be a positive even integer, got {n}")
    if not isinstance(t, int) or t < 2:
        raise ValueError(f"t must be an integer >= 2, got {t!r}")
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")


def _pick_backend(backend: str, n: int, t: int, bound: int) -> str:
    if backend == "auto":
        if HAVE_KERNEL and n == 2 and bound <= KERNEL_MAX_BOUND and t <= KERNEL_MAX_T:
            return "compiled"
        return "python"
    if backend == "compiled":
        if not HAVE_KERNEL:
            raise RuntimeError("the compiled scan kernel is not installed")
        if n != 2 or bound > KERNEL_MAX_BOUND or t > KERNEL_MAX_T:
            raise TooLarge(
                f"kernel handles n=2, t<={KERNEL_MAX_T}, bound<={KERNEL_MAX_BOUND}"
            )
        return "compiled"
    if backend == "python":
        return "python"
    raise ValueError(f"unknown backend {backend!r}")


def _revalidate(z: QuadInt, n: int, t: int) -> None:
    # Hits are rare; check each against a path independent of the scan that
    # produced it.  The naive divisor sum is capped, so fall back to the
    # exact closed form above the cap.
    nz = z.norm()
    if nz <= NAIVE_NORM_CAP:
        good = delta_naive(n, z) == t * nz ** (n // 2)
    else:
        good = delta(n, z) == t * nz ** (n // 2)
    if not good:
        raise AssertionError(f"scan backend reported a false hit: {z}")


def _run_scan(
    rg: Ring, n: int, t: int, bound: int, odd_only: bool, backend: str
) -> SearchReport:
    chosen = _pick_backend(backend, n, t, bound)
    start = time.perf_counter_ns()
    if chosen == "compiled":
        raw, scanned = _scan.scan(rg.d, bound, t, odd_only)
        hits = [QuadInt(rg, a, b) for a, b in raw]
    else:
        hits, scanned = _scan_py.scan(rg, n, t, bound, odd_only)
    hits.sort(key=QuadInt.sort_key)
    for z in hits:
        _revalidate(z, n, t)
    elapsed_ms = (time.perf_counter_ns() - start) // 1_000_000
    return SearchReport(
        ring=rg,
        n=n,
        t=t,
        norm_bound=bound,
        hits=hits,
        elements_scanned=scanned,
        wall_time_ms=elapsed_ms,
        odd_norm=odd_only,
        backend=chosen,
    )


def search_perfect(
    rg: Ring, n: int, t: int, bound: int, *, backend: str = "auto"
) -> SearchReport:
    """Every canonical z with N(z) <= bound and index(n, z) = t."""
    _validate(n, t, bound)
    return _run_scan(rg, n, t, bound, False, backend)


def search_odd_norm(rg: Ring, bound: int, *, backend: str = "auto") -> SearchReport:
    """Odd-norm 2-powerfully 2-perfect search; runs the structure and
    prime-count verifiers on any hit."""
    _validate(2, 2, bound)
    report = _run_scan(rg, 2, 2, bound, True, backend)
    if report.hits:
        from .theorems import check_odd_structure, check_prime_count

        report.hit_checks = [
            [check_odd_structure(z), check_prime_count(z)] for z in report.hits
        ]
    return report
