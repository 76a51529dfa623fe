"""Multiplicative sets: membership, residue images, saturation, disjointness."""

import pytest
from hypothesis import given, strategies as st

from sideal.ring_core import Ideal, Integers, ModularIntegers, PolynomialsOverPrimeField
from sideal.multiplicative_sets import (
    ComplementOfPrimes,
    ExplicitFinite,
    GeneratedBy,
    UnitsOnly,
    disjointness_witness,
    is_disjoint,
    restrict_to_larger,
    s_residues_mod,
    saturate,
)
from sideal.errors import CapacityError, DomainError
from sideal.oracle import build_universe, brute_saturation

Z = Integers()
F5 = PolynomialsOverPrimeField(5)


def zi(n):
    return Ideal.principal(Z.element(n))


def comp(*ps):
    return ComplementOfPrimes(Z, tuple(Z.element(p) for p in ps))


def gen(*gs):
    return GeneratedBy(Z, tuple(Z.element(g) for g in gs))


# --- membership ------------------------------------------------------------


def test_units_membership():
    s = UnitsOnly(Z)
    assert s.contains(Z.element(1)) and s.contains(Z.element(-1))
    assert not s.contains(Z.element(2))
    assert tuple(e.value for e in s.elements_list()) == (-1, 1) or tuple(
        e.value for e in s.elements_list()
    ) == (1, -1)


def test_complement_membership():
    s = comp(2, 3)
    for x, inside in ((1, True), (5, True), (35, True), (2, False), (9, False), (12, False), (0, False)):
        assert s.contains(Z.element(x)) == inside, x


def test_generated_membership_is_exact():
    s = gen(2, 5)
    for x, inside in ((1, True), (2, True), (40, True), (250, True), (3, False), (6, False), (0, False)):
        assert s.contains(Z.element(x)) == inside, x
    # 1 is the empty product, always present
    assert gen(7).contains(Z.element(1))


def test_zero_is_rejected_everywhere():
    with pytest.raises(DomainError):
        gen(0)
    with pytest.raises(DomainError):
        ExplicitFinite(ModularIntegers(6), (ModularIntegers(6).element(0),))
    with pytest.raises(DomainError):
        comp(4)  # not prime


def test_explicit_finite_requires_closure():
    R6 = ModularIntegers(6)
    s = ExplicitFinite(R6, (R6.element(1), R6.element(5)))
    assert s.contains(R6.element(5))
    with pytest.raises(DomainError):
        ExplicitFinite(R6, (R6.element(1), R6.element(2)))  # 2*2=4 missing


# --- residue image ---------------------------------------------------------


def test_residue_image_contains_one_and_is_closed():
    for s, m in ((comp(3), 6), (gen(2), 9), (UnitsOnly(Z), 12), (gen(2, 5), 21)):
        image = s_residues_mod(s, Z.element(m))
        assert 1 % m in image
        for r, w in image.items():
            assert s.contains(w) and w.value % m == r
        residues = set(image)
        for a in residues:
            for b in residues:
                assert (a * b) % m in residues


def test_residue_image_on_finite_ring_is_the_set_itself():
    R12 = ModularIntegers(12)
    s = GeneratedBy(R12, (R12.element(2),))
    image = s_residues_mod(s, R12.element(4))
    assert set(image) == {1, 2, 4, 8}


def test_generated_residue_image_capacity_guard():
    # 3 is a primitive root of 65537, the image would hold 65536 entries of
    # unbounded bit length
    with pytest.raises(CapacityError):
        s_residues_mod(gen(3), Z.element(65537))


# --- saturation ------------------------------------------------------------


def test_saturation_of_6_away_from_3():
    sat, cert = saturate(comp(3), zi(6))
    assert str(sat) == "(3)"
    assert cert.witness.value == 2
    assert cert.kind == "saturation-stabilizer"


def test_saturation_by_powers_of_two():
    sat, cert = saturate(gen(2), zi(12))
    assert sat == zi(3)
    assert cert.witness.value == 4  # two colon passes, stabilizer 2^2


def test_saturation_of_units_is_identity():
    for n in (0, 5, 12, 36):
        sat, cert = saturate(UnitsOnly(Z), zi(n))
        assert sat == zi(n) and cert.witness.is_one()


ideal_values = st.integers(min_value=0, max_value=10**5)
set_pool = st.sampled_from(
    ["units", "comp2", "comp3", "comp23", "gen2", "gen6", "gen10"]
)


def _set_by_name(name):
    return {
        "units": UnitsOnly(Z),
        "comp2": comp(2),
        "comp3": comp(3),
        "comp23": comp(2, 3),
        "gen2": gen(2),
        "gen6": gen(6),
        "gen10": gen(10),
    }[name]


@given(ideal_values, set_pool)
def test_saturation_contract_and_idempotence(n, name):
    mult_set = _set_by_name(name)
    ideal = zi(n)
    sat, cert = saturate(mult_set, ideal)
    assert sat.contains_ideal(ideal)
    assert mult_set.contains(cert.witness)
    assert ideal.contains(cert.witness * sat.generator_element())
    again, _ = saturate(mult_set, sat)
    assert again == sat


def test_saturation_matches_brute_force_mod_24():
    ring = ModularIntegers(24)
    universe = build_universe(ring)
    for mult_set in universe.candidate_mult_sets:
        for ideal in universe.all_ideals:
            fast, _ = saturate(mult_set, ideal)
            assert fast == brute_saturation(universe, ideal, mult_set)


def test_polynomial_saturation():
    # strip the (x+1) factor, keep the x factor
    f = Ideal.principal(F5.element((0, 1, 1)))  # x(x+1)
    s = ComplementOfPrimes(F5, (F5.element((0, 1)),))  # away from (x)
    sat, cert = saturate(s, f)
    assert sat == Ideal.principal(F5.element((0, 1)))
    assert cert.witness == F5.element((1, 1))


# --- disjointness ----------------------------------------------------------


def test_disjointness_values():
    # every multiple of 6 is divisible by 3, so (6) misses Z minus 3Z
    assert is_disjoint(comp(3), zi(6)) is True
    assert disjointness_witness(comp(5), zi(12)).value == 12
    assert is_disjoint(comp(2), zi(12)) is True
    assert is_disjoint(comp(2, 3), zi(36)) is True
    assert is_disjoint(UnitsOnly(Z), zi(7)) is True
    assert disjointness_witness(UnitsOnly(Z), zi(1)).is_one()


def test_generated_disjointness_without_residue_walk():
    # every prime of the generator must divide the ideal for S to meet it
    assert disjointness_witness(gen(2), zi(8)).value == 8
    assert is_disjoint(gen(2), zi(12))
    w = disjointness_witness(gen(6), zi(12))
    assert w is not None and w.value == 36
    assert is_disjoint(gen(6), zi(30))
    # a large prime modulus stays cheap now
    assert is_disjoint(gen(2), zi(999983))


def test_disjointness_matches_brute_scan_mod_20():
    ring = ModularIntegers(20)
    universe = build_universe(ring)
    for mult_set in universe.candidate_mult_sets:
        members = [e for e in universe.all_elements if mult_set.contains(e)]
        for ideal in universe.all_ideals:
            brute = not any(ideal.contains(m) for m in members)
            assert is_disjoint(mult_set, ideal) == brute


# --- subset order ----------------------------------------------------------


def test_restrict_to_larger_table():
    assert restrict_to_larger(UnitsOnly(Z), comp(3)) is True
    assert restrict_to_larger(comp(2, 3), comp(3)) is True
    assert restrict_to_larger(comp(3), comp(2, 3)) is False
    assert restrict_to_larger(gen(2), comp(2)) is False
    assert restrict_to_larger(gen(2), comp(3)) is True
    assert restrict_to_larger(comp(3), UnitsOnly(Z)) is False
    R6 = ModularIntegers(6)
    a = ExplicitFinite(R6, (R6.element(1),))
    b = ExplicitFinite(R6, (R6.element(1), R6.element(5)))
    assert restrict_to_larger(a, b) is True
    assert restrict_to_larger(b, a) is False
