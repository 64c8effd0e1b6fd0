"""Norm-power divisor sums, abundancy indices and the perfection predicate.

delta(n, z) sums |x|^n over one divisor x from each associate class of z;
for even n that is sum of N(x)^(n/2), an integer when n > 0 and an exact
rational when n < 0.  The abundancy index is index(n, z) = delta(n, z) /
N(z)^(n/2), and z is n-powerfully t-perfect when the index equals t.  The
closed form multiplies geometric sums over the prime factorization;
delta_naive re-sums over an explicit divisor list and exists to keep the
closed form honest.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import OddExponent, TooLarge, ZeroElement
from .primes import factor, factor_rational
from .rings import QuadInt

NAIVE_NORM_CAP = 10**6
DIVISOR_COUNT_CAP = 1 << 20


def _check_even(n: int) -> int:
    if n % 2:
        raise OddExponent(f"exponent must be even, got {n}")
    if n == 0:
        raise ValueError("exponent must be nonzero")
    return n // 2


def divisors(z: QuadInt) -> list[QuadInt]:
    """One sector-canonical divisor per associate class, sorted by
    (norm, a, b)."""
    fac = factor(z)
    count = 1
    for _, e in fac.factors:
        count *= e + 1
        if count > DIVISOR_COUNT_CAP:
            raise TooLarge(f"more than {DIVISOR_COUNT_CAP} divisor classes")
    out = []
    ranges = [range(e + 1) for _, e in fac.factors]
    for exps in itertools.product(*ranges):
        x = z.ring.one()
        for (pi, _), j in zip(fac.factors, exps):
            x = x * pi**j
        out.append(x.canonical_associate())
    out.sort(key=QuadInt.sort_key)
    return out


def delta(n: int, z: QuadInt) -> int | Fraction:
    """Sum of N(x)^(n/2) over the divisor classes x of z, closed form."""
    h = _check_even(n)
    if z.is_zero():
        raise ZeroElement("delta is undefined at zero")
    fac = factor(z)
    if h > 0:
        out = 1
        for pi, e in fac.factors:
            q = pi.norm() ** h
            out *= (q ** (e + 1) - 1) // (q - 1)
        return out
    out = Fraction(1)
    for pi, e in fac.factors:
        q = Fraction(1, pi.norm() ** -h)
        out *= sum(q**j for j in range(e + 1))
    return out


def delta_naive(n: int, z: QuadInt) -> int | Fraction:
    """Same sum over an explicit divisor list; the oracle for delta."""
    h = _check_even(n)
    if z.is_zero():
        raise ZeroElement("delta is undefined at zero")
    if z.norm() > NAIVE_NORM_CAP:
        raise TooLarge(f"naive divisor sum capped at norm {NAIVE_NORM_CAP}")
    if h > 0:
        return sum(x.norm() ** h for x in divisors(z))
    return sum(Fraction(1, x.norm() ** -h) for x in divisors(z))


def abundancy_index(n: int, z: QuadInt) -> Fraction:
    """delta(n, z) / N(z)^(n/2) for positive even n, exact."""
    h = _check_even(n)
    if h < 0:
        raise ValueError(f"index exponent must be positive, got {n}")
    if z.is_zero():
        raise ZeroElement("the index is undefined at zero")
    return Fraction(delta(n, z), z.norm() ** h)


def is_powerfully_perfect(n: int, t: int, z: QuadInt) -> bool:
    """True when index(n, z) == t, for integer t >= 2."""
    if not isinstance(t, int) or t < 2:
        raise ValueError(f"t must be an integer >= 2, got {t!r}")
    return abundancy_index(n, z) == t


def sigma(k: int, n: int) -> int | Fraction:
    """Classical divisor power sum over positive integers: sum of c^k over
    the positive divisors c of n."""
    if k == 0:
        raise ValueError("exponent must be nonzero")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k > 0:
        out = 1
        for p, e in factor_rational(n):
            q = p**k
            out *= (q ** (e + 1) - 1) // (q - 1)
        return out
    out = Fraction(1)
    for p, e in factor_rational(n):
        q = Fraction(1, p**-k)
        out *= sum(q**j for j in range(e + 1))
    return out
