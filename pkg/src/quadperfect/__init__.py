"""Exact arithmetic, divisor sums and perfect-element searches over the
nine imaginary quadratic rings with unique factorization."""

__version__ = "0.1.0"

from .divisor_functions import (
    abundancy_index,
    delta,
    delta_naive,
    divisors,
    is_powerfully_perfect,
    sigma,
)
from .errors import (
    MixedRings,
    NotPrime,
    OddExponent,
    PreconditionFailed,
    SplitDichotomyViolation,
    TooLarge,
    ZeroElement,
)
from .primes import (
    IntFactorization,
    PrimeClass,
    QuadFactorization,
    classify_rational_prime,
    factor,
    factor_rational,
    int_valuation,
    is_prime,
    is_quadratic_prime,
    prime_above,
    split_prime_pair,
    valuation,
)
from .rings import (
    ADMISSIBLE_D,
    BasisKind,
    QuadInt,
    Ring,
    element_from_json,
    parse_element,
    ring,
)
from .search import (
    HAVE_KERNEL,
    SearchReport,
    enumerate_canonical,
    search_odd_norm,
    search_perfect,
)
from .theorems import (
    Check,
    EvenNormDecomposition,
    VerifierReport,
    check_mersenne_inert,
    check_odd_structure,
    check_prime_count,
    check_structure_bounds,
    conjecture_scan,
    count_nonassociated_primes,
    decompose_even,
    lift_to_3perfect,
    norm2_prime,
    odd_factorization_shape_report,
    smallest_odd_prime_norms,
)

__all__ = [
    "ADMISSIBLE_D",
    "BasisKind",
    "Check",
    "EvenNormDecomposition",
    "HAVE_KERNEL",
    "IntFactorization",
    "MixedRings",
    "NotPrime",
    "OddExponent",
    "PreconditionFailed",
    "PrimeClass",
    "QuadFactorization",
    "QuadInt",
    "Ring",
    "SearchReport",
    "SplitDichotomyViolation",
    "TooLarge",
    "VerifierReport",
    "ZeroElement",
    "abundancy_index",
    "check_mersenne_inert",
    "check_odd_structure",
    "check_prime_count",
    "check_structure_bounds",
    "classify_rational_prime",
    "conjecture_scan",
    "count_nonassociated_primes",
    "decompose_even",
    "delta",
    "delta_naive",
    "divisors",
    "element_from_json",
    "enumerate_canonical",
    "factor",
    "factor_rational",
    "int_valuation",
    "is_powerfully_perfect",
    "is_prime",
    "is_quadratic_prime",
    "lift_to_3perfect",
    "norm2_prime",
    "odd_factorization_shape_report",
    "parse_element",
    "prime_above",
    "ring",
    "search_odd_norm",
    "search_perfect",
    "sigma",
    "smallest_odd_prime_norms",
    "split_prime_pair",
    "valuation",
]
