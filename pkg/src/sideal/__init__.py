"""Exact S-ideal arithmetic: saturations, classification, decompositions.

The catalog covers the integers, Z/n, GF(p)[x], and finite products of
Z/n_i.  Every predicate returns re-verifiable witness certificates, and the
oracle module provides definition-literal brute forcing on finite rings for
validation.
"""

from .classify import (
    ClassificationReport,
    classify,
    is_irreducible,
    is_s_finite,
    is_s_irreducible,
    is_s_prime,
    is_s_primary,
)
from .decompose import (
    Decomposition,
    DecompositionComponent,
    FirstUniquenessReport,
    TheoremMinReport,
    assemble_decomposition,
    associated_s_primes,
    covers_some_component,
    cross_with_meeting_ideal,
    first_uniqueness_report,
    intersect_same_prime_components,
    is_minimal_decomposition,
    isolated_s_primes,
    minimal_primes_over,
    minimalize,
    primary_decomposition,
    restrict_decomposition,
    restriction_audit,
    s_primary_decomposition,
    s_prime_decomposition_of_radical,
    second_uniqueness_check,
    theorem_min_check,
    zero_divisor_condition,
)
from .errors import (
    CapacityError,
    ContractViolation,
    DisjointnessError,
    DomainError,
    ParseError,
    PreconditionError,
    RingMismatch,
    UnsupportedEnumeration,
)
from .multiplicative_sets import (
    ComplementOfPrimes,
    ExplicitFinite,
    GeneratedBy,
    MultiplicativeSet,
    UnitsOnly,
    WitnessCertificate,
    disjointness_witness,
    is_disjoint,
    restrict_to_larger,
    s_residues_mod,
    saturate,
    saturation_audit,
)
from .oracle import (
    FiniteUniverse,
    SweepReport,
    brute_is_s_irreducible,
    brute_is_s_primary,
    brute_is_s_prime,
    build_universe,
    enumerate_minimal_decompositions,
    sweep,
)
from .parsing import parse_element, parse_ideal, parse_mult_set, parse_ring
from .ring_core import (
    FiniteProduct,
    Ideal,
    Integers,
    ModularIntegers,
    PolynomialsOverPrimeField,
    RingElement,
    ideal_colon,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_primary_ideal,
    is_prime_ideal,
    radical,
)

__version__ = "0.1.0"
