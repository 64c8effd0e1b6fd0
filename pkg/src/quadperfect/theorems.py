"""Structural checks on 2-powerfully perfect elements.

An even-norm 2-powerfully 2-perfect z in d = -1, -2, -7 decomposes as
xi^gamma * x with xi the (or, for d=-7, exactly one of the two) norm-2
prime(s) and N(x) odd; writing q = 2^(gamma+1) - 1 forces delta_2(x) =
2^(gamma+1) * m and N(x) = q * m, and the verifiers below check everything
the decomposition is known to satisfy: q a Mersenne prime, inert in the
ring; m = q^k * v with k odd, v >= q + 2 and the lower bounds on m; for
odd norms, exactly one prime with odd exponent, that exponent and the
prime's norm both 1 mod 4, and at least 5 (d = -1, -2) or 11 (d = -7)
pairwise non-associated prime divisors.  Verifiers never assume any of
this: both sides of every claim are recomputed and failures are reported,
not raised.  Check ids ("2.1" .. "2.5", "count", "lift") are the CLI's
vocabulary for picking a verifier.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisor_functions import abundancy_index, delta, is_powerfully_perfect
from .errors import (
    NotPrime,
    PreconditionFailed,
    SplitDichotomyViolation,
    ZeroElement,
)
from .primes import (
    PrimeClass,
    classify_rational_prime,
    factor,
    is_prime,
    prime_above,
    valuation,
)
from .rings import QuadInt, Ring

# Rings with an element of norm 2, the only place the even-norm machinery
# applies.
NORM2_RINGS = (-1, -2, -7)

# Minimum count of pairwise non-associated prime divisors for an odd-norm
# 2-powerfully 2-perfect element.
PRIME_COUNT_FLOOR = {-1: 5, -2: 5, -7: 11}


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    actual: str
    passed: bool

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass
class VerifierReport:
    theorem: str
    subject: QuadInt | None
    checks: list[Check]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "subject": None if self.subject is None else self.subject.to_json(),
            "checks": [c.to_json() for c in self.checks],
            "overall": self.overall,
        }


@dataclass(frozen=True)
class EvenNormDecomposition:
    """z = xi^gamma * x with N(x) odd, q = 2^(gamma+1) - 1, delta_2(x) =
    2^(gamma+1) * m, m = q^k * v with q not dividing v."""

    ring: Ring
    xi: QuadInt
    gamma: int
    x: QuadInt
    q: int
    m: int
    k: int
    v: int

    def to_json(self) -> dict:
        return {
            "xi": self.xi.to_json(),
            "gamma": self.gamma,
            "x": self.x.to_json(),
            "q": self.q,
            "m": self.m,
            "k": self.k,
            "v": self.v,
        }


def norm2_prime(rg: Ring) -> QuadInt:
    """The canonical norm-2 prime of d = -1, -2 or -7."""
    if rg.d not in NORM2_RINGS:
        raise PreconditionFailed(f"no element of norm 2 exists for d={rg.d}")
    return prime_above(2, rg)


def decompose_even(z: QuadInt) -> EvenNormDecomposition:
    """Split an even-norm 2-powerfully 2-perfect z off its norm-2 prime
    power and derive (q, m, k, v)."""
    rg = z.ring
    if rg.d not in NORM2_RINGS:
        raise PreconditionFailed(f"no element of norm 2 exists for d={rg.d}")
    if z.is_zero():
        raise ZeroElement("cannot decompose the zero element")
    if z.norm() % 2:
        raise PreconditionFailed(f"N({z}) = {z.norm()} is odd")
    if not is_powerfully_perfect(2, 2, z):
        raise PreconditionFailed(
            f"index(2, {z}) = {abundancy_index(2, z)} != 2"
        )
    xi = prime_above(2, rg)
    if rg.d == -7:
        other = xi.conjugate().canonical_associate()
        g1 = valuation(xi, z)
        g2 = valuation(other, z)
        if g1 and g2:
            raise SplitDichotomyViolation(
                f"both norm-2 primes divide {z}: exponents {g1} and {g2}"
            )
        if g2:
            xi, gamma = other, g2
        else:
            gamma = g1
    else:
        gamma = valuation(xi, z)
    x = z.exact_divide(xi**gamma)
    assert x is not None and x.norm() % 2 == 1
    d2x = delta(2, x)
    q = (1 << (gamma + 1)) - 1
    m, rem = divmod(d2x, 1 << (gamma + 1))
    assert rem == 0, (z, d2x, gamma)
    assert x.norm() == q * m, (z, q, m)
    k, v = 0, m
    while v % q == 0:
        v //= q
        k += 1
    return EvenNormDecomposition(rg, xi, gamma, x, q, m, k, v)


def _congruence_checks(gamma: int, q: int) -> list[Check]:
    return [
        Check("gamma_mod_3", "1", str(gamma % 3), gamma % 3 == 1),
        Check("q_mod_7", "3", str(q % 7), q % 7 == 3),
    ]


def check_mersenne_inert(gamma: int, rg: Ring) -> VerifierReport:
    """q = 2^(gamma+1) - 1 must be a Mersenne prime, inert in the ring;
    check ids 2.1 (d = -1, -2) and 2.3 (d = -7)."""
    if rg.d not in NORM2_RINGS:
        raise PreconditionFailed(f"no element of norm 2 exists for d={rg.d}")
    if gamma < 1:
        raise PreconditionFailed(f"gamma must be >= 1, got {gamma}")
    q = (1 << (gamma + 1)) - 1
    checks = [
        Check("q_value", f"2^{gamma + 1}-1", str(q), True),
        Check("q_prime", "prime", "prime" if is_prime(q) else "composite", is_prime(q)),
    ]
    if is_prime(q):
        cls = classify_rational_prime(q, rg)
        checks.append(Check("q_inert", "inert", cls.value, cls is PrimeClass.INERT))
    else:
        checks.append(Check("q_inert", "inert", "q not prime", False))
    if rg.d == -7:
        checks.extend(_congruence_checks(gamma, q))
    return VerifierReport("2.3" if rg.d == -7 else "2.1", None, checks)


def check_structure_bounds(dec: EvenNormDecomposition) -> VerifierReport:
    """Parity of k, the floors on v and m, and the inert valuation of q in
    the odd cofactor; check ids 2.2 (d = -1, -2) and 2.4 (d = -7)."""
    q, m, k, v = dec.q, dec.m, dec.k, dec.v
    checks = [
        Check("k_odd", "odd", str(k), k % 2 == 1),
        Check("v_floor", f">= {q + 2}", str(v), v >= q + 2),
    ]
    lower = q ** (k + 1) + (q + 3) * sum(q ** (2 * j) for j in range((k - 1) // 2 + 1))
    checks.append(Check("m_floor", f">= {lower}", str(m), m >= lower))
    simple = q * q + q + 3
    checks.append(Check("m_floor_simple", f">= {simple}", str(m), m >= simple))
    if k % 2 == 1:
        expect = (k + 1) // 2
        try:
            rho = valuation(dec.ring.element(q), dec.x)
            checks.append(
                Check("inert_valuation", str(expect), str(rho), rho == expect)
            )
        except NotPrime:
            checks.append(Check("inert_valuation", str(expect), "q not prime", False))
    else:
        checks.append(Check("inert_valuation", "(k+1)/2", "k not odd", False))
    if dec.ring.d == -7:
        checks.extend(_congruence_checks(dec.gamma, q))
    return VerifierReport("2.4" if dec.ring.d == -7 else "2.2", None, checks)


def odd_factorization_shape_report(
    pairs: list[tuple[int, int]], subject: QuadInt | None = None
) -> VerifierReport:
    """Shape check on (prime norm, exponent) pairs: exactly one odd
    exponent, and for it both the exponent and the prime norm are 1 mod 4."""
    odd = [(np, e) for np, e in pairs if e % 2 == 1]
    checks = [
        Check(
            "single_odd_exponent",
            "exactly one prime with odd exponent",
            f"{len(odd)} primes with odd exponent",
            len(odd) == 1,
        )
    ]
    if len(odd) == 1:
        np, e = odd[0]
        checks.append(Check("exponent_mod_4", "1", str(e % 4), e % 4 == 1))
        checks.append(Check("prime_norm_mod_4", "1", str(np % 4), np % 4 == 1))
    return VerifierReport("2.5", subject, checks)


def check_odd_structure(z: QuadInt) -> VerifierReport:
    """Factorization shape of an odd-norm 2-powerfully 2-perfect element;
    check id 2.5."""
    if z.is_zero():
        raise ZeroElement("cannot check the zero element")
    if z.norm() % 2 == 0:
        raise PreconditionFailed(f"N({z}) = {z.norm()} is even")
    if not is_powerfully_perfect(2, 2, z):
        raise PreconditionFailed(f"index(2, {z}) = {abundancy_index(2, z)} != 2")
    pairs = [(pi.norm(), e) for pi, e in factor(z).factors]
    return odd_factorization_shape_report(pairs, subject=z)


def count_nonassociated_primes(z: QuadInt) -> int:
    """Number of pairwise non-associated primes dividing z."""
    return len(factor(z).factors)


def check_prime_count(z: QuadInt) -> VerifierReport:
    """Prime-divisor count, with the ring's floor enforced when z is an
    odd-norm 2-powerfully 2-perfect element; check id count."""
    count = count_nonassociated_primes(z)
    checks = [Check("prime_divisors", "counted", str(count), True)]
    floor = PRIME_COUNT_FLOOR.get(z.ring.d)
    if floor is not None and z.norm() % 2 == 1 and is_powerfully_perfect(2, 2, z):
        checks.append(
            Check("prime_divisor_floor", f">= {floor}", str(count), count >= floor)
        )
    return VerifierReport("count", z, checks)


def smallest_odd_prime_norms(rg: Ring, count: int) -> list[int]:
    """Norms of the first `count` odd-norm canonical primes, ascending,
    with split primes contributing twice."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    limit = 64
    while True:
        norms: list[int] = []
        p = 3
        while p <= limit:
            if is_prime(p):
                cls = classify_rational_prime(p, rg)
                if cls is PrimeClass.SPLIT:
                    norms.extend((p, p))
                elif cls is PrimeClass.RAMIFIED:
                    norms.append(p)
                elif p * p <= limit:
                    norms.append(p * p)
            p += 2
        if len(norms) >= count:
            norms.sort()
            return norms[:count]
        limit *= 2


def lift_to_3perfect(z: QuadInt) -> QuadInt:
    """Multiply an odd-norm 2-powerfully 2-perfect z by the norm-2 prime;
    the result is 2-powerfully 3-perfect.  Check id lift."""
    rg = z.ring
    if rg.d not in NORM2_RINGS:
        raise PreconditionFailed(f"no element of norm 2 exists for d={rg.d}")
    if z.is_zero():
        raise ZeroElement("cannot lift the zero element")
    if z.norm() % 2 == 0:
        raise PreconditionFailed(f"N({z}) = {z.norm()} is even")
    if not is_powerfully_perfect(2, 2, z):
        raise PreconditionFailed(f"index(2, {z}) = {abundancy_index(2, z)} != 2")
    w = prime_above(2, rg) * z
    assert abundancy_index(2, w) == 3
    return w


def conjecture_scan(rg: Ring, bound: int) -> VerifierReport:
    """Exhaustively check that every even-norm 2-powerfully 2-perfect
    element with norm <= bound has k = 1; vacuous pass when none exist."""
    from .search import search_perfect

    if rg.d not in NORM2_RINGS:
        raise PreconditionFailed(f"no element of norm 2 exists for d={rg.d}")
    report = search_perfect(rg, 2, 2, bound)
    checks = []
    for z in report.hits:
        if z.norm() % 2 == 0:
            dec = decompose_even(z)
            checks.append(Check(f"k[{z}]", "1", str(dec.k), dec.k == 1))
    if not checks:
        checks.append(
            Check(
                "vacuous",
                f"no even-norm hits with norm <= {bound}",
                f"{len(report.hits)} hits, none even-norm",
                True,
            )
        )
    return VerifierReport("conjecture", None, checks)
