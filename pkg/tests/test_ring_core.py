"""Ring catalog and ideal lattice arithmetic."""

import pytest
from hypothesis import given, strategies as st

from sideal.ring_core import (
    FiniteProduct,
    Ideal,
    Integers,
    ModularIntegers,
    PolynomialsOverPrimeField,
    enumerate_divisor_ideals,
    ideal_colon,
    ideal_colon_element,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_primary_ideal,
    is_prime_ideal,
    radical,
)
from sideal.errors import DomainError, RingMismatch, UnsupportedEnumeration
from sideal._intmath import factorize, is_prime

Z = Integers()
F5 = PolynomialsOverPrimeField(5)
F2 = PolynomialsOverPrimeField(2)
R12 = ModularIntegers(12)
P26 = FiniteProduct((2, 6))


def zi(n):
    return Ideal.principal(Z.element(n))


# --- canonical forms -------------------------------------------------------


def test_integer_generators_are_nonnegative():
    assert zi(-6) == zi(6)
    assert str(zi(-6)) == "(6)"
    assert zi(0).is_zero() and zi(1).is_unit()


def test_polynomial_generators_are_monic():
    # 2x + 2 and x + 1 generate the same ideal of GF(5)[x]
    a = Ideal.principal(F5.element((2, 2)))
    b = Ideal.principal(F5.element((1, 1)))
    assert a == b
    assert str(a) == "(x+1)"


def test_structural_equality_matches_membership():
    a = ideal_intersection(zi(4), zi(6))
    assert a == zi(12)
    for x in range(-30, 30):
        assert a.contains(Z.element(x)) == (x % 12 == 0)


def test_mixed_ring_operations_are_rejected():
    with pytest.raises(RingMismatch):
        ideal_sum(zi(4), Ideal.principal(R12.element(4)))


# --- lattice laws ----------------------------------------------------------

small_ints = st.integers(min_value=0, max_value=10**6)


@given(small_ints, small_ints)
def test_absorption_laws(a, b):
    ia, ib = zi(a), zi(b)
    assert ideal_sum(ia, ideal_intersection(ia, ib)) == ia
    assert ideal_intersection(ia, ideal_sum(ia, ib)) == ia


@given(small_ints, small_ints)
def test_colon_product_contained(a, b):
    ia, ib = zi(a), zi(b)
    assert ia.contains_ideal(ideal_product(ideal_colon(ia, ib), ib))


@given(small_ints)
def test_radical_laws(a):
    ia = zi(a)
    r = radical(ia)
    assert r.contains_ideal(ia)
    assert radical(r) == r


def test_radical_values():
    assert radical(zi(12)) == zi(6)
    assert radical(zi(0)) == zi(0)
    assert radical(Ideal.principal(R12.element(0))) == Ideal.principal(R12.element(6))
    # x^2+1 = (x+2)(x+3) over GF(5), squarefree already
    f = Ideal.principal(F5.element((1, 0, 1)))
    assert radical(f) == f
    g = Ideal.principal(F5.element((1, 2, 1)))  # (x+1)^2
    assert radical(g) == Ideal.principal(F5.element((1, 1)))


# --- colon membership ------------------------------------------------------


def test_colon_membership_law_exhaustive_mod_24():
    ring = ModularIntegers(24)
    ideals = [Ideal.principal(ring.element(d)) for d in (0, 2, 3, 4, 6, 8, 12, 1)]
    elements = list(ring.elements())
    for a in ideals:
        for s in elements:
            q = ideal_colon_element(a, s)
            for x in elements:
                assert q.contains(x) == a.contains(x * s)


@given(small_ints, st.integers(min_value=1, max_value=10**4), st.integers(min_value=-100, max_value=100))
def test_colon_membership_law_integers(a, s, x):
    q = ideal_colon_element(zi(a), Z.element(s))
    assert q.contains(Z.element(x)) == zi(a).contains(Z.element(x * s))


# --- prime and primary flags -----------------------------------------------


def test_prime_primary_flags():
    assert is_prime_ideal(zi(7))
    assert is_prime_ideal(zi(0))
    assert not is_prime_ideal(zi(4)) and is_primary_ideal(zi(4))
    assert not is_prime_ideal(zi(12)) and not is_primary_ideal(zi(12))
    assert not is_prime_ideal(zi(1))
    assert is_prime_ideal(Ideal.principal(F5.element((2, 1))))  # x+2
    assert not is_prime_ideal(Ideal.principal(F5.element((1, 0, 1))))  # (x+2)(x+3)


def test_divisor_enumeration():
    assert [str(d) for d in enumerate_divisor_ideals(zi(6))] == ["(1)", "(2)", "(3)", "(6)"]
    assert len(enumerate_divisor_ideals(Ideal.principal(R12.element(0)))) == 6
    with pytest.raises(UnsupportedEnumeration):
        enumerate_divisor_ideals(zi(0))


# --- product rings ---------------------------------------------------------


def test_product_operations_are_componentwise():
    a = Ideal.from_generators(P26, (P26.element((0, 2)),))
    b = Ideal.from_generators(P26, (P26.element((1, 3)),))
    s = ideal_sum(a, b)
    i = ideal_intersection(a, b)
    for left, right, combined in ((a, b, s),):
        for k, part in enumerate(combined.component_ideals()):
            assert part == ideal_sum(left.component_ideals()[k], right.component_ideals()[k])
    for k, part in enumerate(i.component_ideals()):
        assert part == ideal_intersection(a.component_ideals()[k], b.component_ideals()[k])
    assert radical(a).component_ideals() == tuple(radical(p) for p in a.component_ideals())


def test_product_membership():
    a = Ideal.principal(P26.element((1, 0)))
    assert a.contains(P26.element((1, 0)))
    assert not a.contains(P26.element((1, 1)))
    assert a.is_proper()


def test_product_factor_validation():
    with pytest.raises(DomainError):
        FiniteProduct(())
    with pytest.raises(DomainError):
        FiniteProduct((2, 1))


# --- integer primality backend ---------------------------------------------


def _sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return flags


def test_is_prime_against_independent_sieve():
    flags = _sieve(5000)
    for n in range(2, 5001):
        assert is_prime(n) == bool(flags[n]), n


def test_is_prime_37_regression():
    # 37 is the first prime past the trial-division wheel and also a
    # Miller-Rabin base; both must coexist
    assert is_prime(37)
    assert factorize(37) == ((37, 1),)


@given(st.integers(min_value=1, max_value=10**7))
def test_factorize_reassembles(n):
    prod = 1
    for p, e in factorize(n):
        assert is_prime(p)
        prod *= p**e
    assert prod == n
