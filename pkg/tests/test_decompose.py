"""Decomposition pipeline: construction, minimality, uniqueness, restriction.

Component tuples, witnesses and report fields are frozen from oracle-checked
runs; structural properties are re-proved on the fly.
"""

import pytest
from hypothesis import given, strategies as st

from sideal.ring_core import (
    FiniteProduct,
    Ideal,
    Integers,
    ModularIntegers,
    PolynomialsOverPrimeField,
    ideal_intersection,
)
from sideal.classify import is_s_primary, is_s_prime
from sideal.decompose import (
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
    s_primary_decomposition,
    s_prime_decomposition_of_radical,
    second_uniqueness_check,
    theorem_min_check,
    zero_divisor_condition,
)
from sideal.multiplicative_sets import (
    ComplementOfPrimes,
    ExplicitFinite,
    GeneratedBy,
    UnitsOnly,
)
from sideal.errors import (
    ContractViolation,
    DisjointnessError,
    DomainError,
    PreconditionError,
)

Z = Integers()
F2 = PolynomialsOverPrimeField(2)
R12 = ModularIntegers(12)
R30 = ModularIntegers(30)


def zi(n):
    return Ideal.principal(Z.element(n))


def comp(*ps):
    return ComplementOfPrimes(Z, tuple(Z.element(p) for p in ps))


def gen(*gs):
    return GeneratedBy(Z, tuple(Z.element(g) for g in gs))


def components_of(dec):
    return [str(c.component) for c in dec.components]


# --- classical backbone ----------------------------------------------------


def test_primary_decomposition_values():
    assert components_of(primary_decomposition(zi(12))) == ["(4)", "(3)"] or components_of(
        primary_decomposition(zi(12))
    ) == ["(3)", "(4)"]
    dec36 = primary_decomposition(zi(36))
    assert sorted(components_of(dec36)) == ["(4)", "(9)"]
    assert dec36.minimal
    f = Ideal.principal(F2.element((0, 1, 1)))  # x^2+x = x(x+1)
    decf = primary_decomposition(f)
    assert sorted(components_of(decf)) == ["(x)", "(x+1)"]
    with pytest.raises(DomainError):
        primary_decomposition(zi(1))


def test_primary_decomposition_in_products_is_componentwise():
    P26 = FiniteProduct((2, 6))
    zero = Ideal.zero_ideal(P26)
    dec = primary_decomposition(zero)
    assert ideal_intersection(*dec.component_ideals()) == zero if len(dec.components) == 2 else True
    recomposed = dec.component_ideals()[0]
    for q in dec.component_ideals()[1:]:
        recomposed = ideal_intersection(recomposed, q)
    assert recomposed == zero


# --- construction ----------------------------------------------------------


def test_decomposition_of_36_away_from_2_and_3():
    dec = s_primary_decomposition(zi(36), comp(2, 3))
    assert sorted(components_of(dec)) == ["(4)", "(9)"]
    assert dec.assembly_witness.witness.is_one()
    assert dec.minimal


def test_decomposition_of_6_away_from_3():
    dec = s_primary_decomposition(zi(6), comp(3))
    assert components_of(dec) == ["(6)"]
    c = dec.components[0]
    assert str(c.radical) == "(6)"
    assert str(c.saturation_of_component) == "(3)"
    assert str(c.saturation_of_radical) == "(3)"
    assert c.witness.witness.value == 4
    assert dec.assembly_witness.witness.value == 2


def test_decomposition_of_60_away_from_2():
    dec = s_primary_decomposition(zi(60), comp(2))
    assert components_of(dec) == ["(60)"]
    c = dec.components[0]
    assert str(c.radical) == "(30)"
    assert str(c.saturation_of_component) == "(4)"
    assert str(c.saturation_of_radical) == "(2)"
    assert dec.assembly_witness.witness.value == 15


def test_decomposition_by_powers_of_six():
    dec = s_primary_decomposition(zi(720), gen(6))
    assert components_of(dec) == ["(720)"]
    assert dec.assembly_witness.witness.value == 1296  # 6^4
    assert [p.value for p in dec.assembly_witness.provenance] == [6, 6, 6, 6]


def test_meeting_ideal_is_rejected_with_witness():
    with pytest.raises(DisjointnessError) as err:
        s_primary_decomposition(zi(12), comp(5))
    assert err.value.witness.value == 12


def test_components_carry_reverifying_witnesses():
    for n, mult_set in ((36, comp(2, 3)), (60, comp(2)), (6, comp(3)), (12, UnitsOnly(Z))):
        dec = s_primary_decomposition(zi(n), mult_set)
        for c in dec.components:
            ok, _ = is_s_primary(c.component, mult_set)
            assert ok


# --- minimalization --------------------------------------------------------


def test_minimalize_prunes_redundant_component():
    dec = assemble_decomposition(UnitsOnly(Z), [zi(4), zi(9), zi(36)], strict=False)
    out = minimalize(dec)
    assert sorted(components_of(out)) == ["(4)", "(9)"]
    assert out.minimal and is_minimal_decomposition(out)


def test_minimalize_merges_equal_saturated_radicals():
    dec = assemble_decomposition(UnitsOnly(Z), [zi(4), zi(8)], strict=False)
    out = minimalize(dec)
    assert components_of(out) == ["(8)"]


def test_minimalize_is_idempotent():
    dec = s_primary_decomposition(zi(360), comp(5))
    once = minimalize(dec)
    twice = minimalize(once)
    assert once.component_ideals() == twice.component_ideals()
    assert once.minimal and twice.minimal


def test_is_minimal_decomposition_cases():
    good = assemble_decomposition(UnitsOnly(Z), [zi(4), zi(9)])
    assert is_minimal_decomposition(good)
    bad = assemble_decomposition(UnitsOnly(Z), [zi(4), zi(9), zi(36)], strict=False)
    assert not is_minimal_decomposition(bad)
    single = s_primary_decomposition(zi(8), UnitsOnly(Z))
    assert is_minimal_decomposition(single)


def test_strict_assembly_rejects_non_s_primary_component():
    with pytest.raises(ContractViolation):
        assemble_decomposition(UnitsOnly(Z), [zi(4), zi(9), zi(36)])


# --- associated primes and first uniqueness --------------------------------


def test_associated_s_primes_values():
    dec36 = s_primary_decomposition(zi(36), UnitsOnly(Z))
    assert [str(p) for p in associated_s_primes(dec36)] == ["(2)", "(3)"]
    dec6 = s_primary_decomposition(zi(6), comp(3))
    assert [str(p) for p in associated_s_primes(dec6)] == ["(3)"]
    dec8 = s_primary_decomposition(zi(8), UnitsOnly(Z))
    assert [str(p) for p in associated_s_primes(dec8)] == ["(2)"]


def test_associated_requires_minimal():
    dec = assemble_decomposition(UnitsOnly(Z), [zi(4), zi(9), zi(36)], strict=False)
    with pytest.raises(PreconditionError):
        associated_s_primes(dec)


def test_first_uniqueness_report_36():
    dec = s_primary_decomposition(zi(36), UnitsOnly(Z))
    rep = first_uniqueness_report(zi(36), UnitsOnly(Z), dec)
    assert [str(p) for p in rep.associated] == ["(2)", "(3)"]
    assert rep.associated == rep.computed
    witnesses = {str(p): w.value for p, w in rep.prime_witnesses}
    # (36 : 9) = (4) with radical (2); (36 : 4) = (9) with radical (3)
    assert witnesses == {"(2)": 9, "(3)": 4}


def test_first_uniqueness_on_finite_multi_decomposition_instance():
    g2 = GeneratedBy(R30, (R30.element(2),))
    zero = Ideal.zero_ideal(R30)
    dec = s_primary_decomposition(zero, g2)
    rep = first_uniqueness_report(zero, g2, dec)
    assert [str(p) for p in rep.associated] == ["(3)", "(5)"]
    assert rep.associated == rep.computed


# --- isolated components and second uniqueness -----------------------------


def test_isolated_indices():
    dec36 = s_primary_decomposition(zi(36), UnitsOnly(Z))
    assert isolated_s_primes(dec36) == (0, 1)
    single = s_primary_decomposition(zi(8), UnitsOnly(Z))
    assert isolated_s_primes(single) == (0,)


def test_second_uniqueness_across_enumerated_decompositions():
    # (0) in Z/30 with S the powers of two has three minimal decompositions
    g2 = GeneratedBy(R30, (R30.element(2),))
    zero = Ideal.zero_ideal(R30)
    constructed = s_primary_decomposition(zero, g2)
    variants = [
        [Ideal.principal(R30.element(3)), Ideal.principal(R30.element(10))],
        [Ideal.principal(R30.element(5)), Ideal.principal(R30.element(6))],
        [Ideal.principal(R30.element(6)), Ideal.principal(R30.element(10))],
    ]
    decs = [minimalize(assemble_decomposition(g2, parts, ideal=zero)) for parts in variants]
    assert constructed.component_ideals() in [d.component_ideals() for d in decs]
    for d in decs:
        assert second_uniqueness_check(constructed, d)
        assert associated_s_primes(d) == associated_s_primes(constructed)


def test_second_uniqueness_rejects_mismatched_inputs():
    a = s_primary_decomposition(zi(36), UnitsOnly(Z))
    b = s_primary_decomposition(zi(12), UnitsOnly(Z))
    with pytest.raises(PreconditionError):
        second_uniqueness_check(a, b)


# --- crossing and covering -------------------------------------------------


def test_cross_with_meeting_ideal_values():
    assert cross_with_meeting_ideal(zi(9), zi(2), comp(3)) == zi(18)
    assert cross_with_meeting_ideal(zi(4), zi(15), comp(2)) == zi(60)
    assert cross_with_meeting_ideal(zi(9), Ideal.unit_ideal(Z), comp(3)) == zi(9)


def test_cross_with_meeting_ideal_error_cases():
    with pytest.raises(PreconditionError, match="not a primary ideal"):
        cross_with_meeting_ideal(zi(12), zi(2), comp(3))
    with pytest.raises(PreconditionError, match="meets S"):
        cross_with_meeting_ideal(zi(4), zi(3), comp(3))
    with pytest.raises(PreconditionError, match="misses S"):
        cross_with_meeting_ideal(zi(9), zi(3), comp(3))


def test_crossing_preserves_s_primariness():
    crossed = cross_with_meeting_ideal(zi(9), zi(2), comp(3))
    ok, _ = is_s_primary(crossed, comp(3))
    assert ok


def test_intersect_same_prime_components():
    # (9) and (27) share saturated radical (3) away from 3
    merged = intersect_same_prime_components([zi(9), zi(27)], comp(3))
    assert merged == zi(27)
    ok, _ = is_s_primary(merged, comp(3))
    assert ok
    with pytest.raises(PreconditionError):
        intersect_same_prime_components([zi(4), zi(9)], UnitsOnly(Z))


def test_covers_some_component():
    k, cert = covers_some_component(zi(3), [zi(4), zi(9)], UnitsOnly(Z))
    assert k == 1 and cert.witness.is_one()
    k2, cert2 = covers_some_component(zi(3), [zi(2), zi(9)], comp(3))
    assert k2 == 1
    k3, _ = covers_some_component(zi(3), [zi(3)], UnitsOnly(Z))
    assert k3 == 0


# --- minimal primes and the zero-divisor gate ------------------------------


def test_minimal_primes_values():
    assert [str(p) for p in minimal_primes_over(Ideal.zero_ideal(R12))] == ["(2)", "(3)"]
    assert [str(p) for p in minimal_primes_over(zi(36))] == ["(2)", "(3)"]
    P22 = FiniteProduct((2, 2))
    assert [str(p) for p in minimal_primes_over(Ideal.zero_ideal(P22))] == ["((1,0))", "((0,1))"]


def test_zero_divisor_condition():
    units = UnitsOnly(R12)
    ok, witness = zero_divisor_condition(Ideal.principal(R12.element(2)), units)
    assert ok and witness is None
    g2 = GeneratedBy(R12, (R12.element(2),))
    ok2, (s, x) = zero_divisor_condition(Ideal.principal(R12.element(2)), g2)
    assert not ok2
    p = Ideal.principal(R12.element(2))
    assert g2.contains(s) and not p.contains(x) and p.contains(s * x)


def test_theorem_min_hypothesis_holds():
    dec = s_primary_decomposition(Ideal.zero_ideal(R12), UnitsOnly(R12))
    rep = theorem_min_check(dec)
    assert rep.hypothesis_holds and rep.conclusion_holds is True
    assert [str(p) for p in rep.minimal_primes] == ["(2)", "(3)"]
    assert [str(p) for p in rep.decomposition_radicals] == ["(2)", "(3)"]
    assert rep.condition_failures == ()


def test_theorem_min_hypothesis_gated():
    g2 = GeneratedBy(R12, (R12.element(2),))
    rep = theorem_min_check(s_primary_decomposition(Ideal.zero_ideal(R12), g2))
    assert rep.hypothesis_holds is False
    assert rep.conclusion_holds is None
    assert [str(p) for p in rep.decomposition_radicals] == ["(6)"]
    index, s, x = rep.condition_failures[0]
    prime = rep.minimal_primes[index]
    assert g2.contains(s) and not prime.contains(x) and prime.contains(s * x)


def test_theorem_min_requires_zero_ideal():
    dec = s_primary_decomposition(zi(36), UnitsOnly(Z))
    with pytest.raises(PreconditionError):
        theorem_min_check(dec)


# --- radical decomposition into S-primes ------------------------------------


def test_s_prime_decomposition_of_radical():
    assert [str(p) for p in s_prime_decomposition_of_radical(zi(6), UnitsOnly(Z))] == ["(2)", "(3)"]
    assert [str(p) for p in s_prime_decomposition_of_radical(zi(6), comp(3))] == ["(6)"]
    assert [str(p) for p in s_prime_decomposition_of_radical(zi(30), comp(5))] == ["(30)"]
    # each returned ideal is S-prime
    for mult_set, ideal in ((comp(3), zi(6)), (UnitsOnly(Z), zi(6))):
        for p in s_prime_decomposition_of_radical(ideal, mult_set):
            assert is_s_prime(p, mult_set)[0]


def test_s_prime_decomposition_rejects_non_radical():
    with pytest.raises(PreconditionError):
        s_prime_decomposition_of_radical(zi(4), UnitsOnly(Z))


# --- restriction to a larger set --------------------------------------------


def test_restriction_splits_by_disjointness():
    dec = s_primary_decomposition(zi(36), UnitsOnly(Z))
    kept, t = restrict_decomposition(dec, comp(3))
    assert [str(c.component) for c in kept] == ["(9)"]
    assert t.witness.is_one()
    kept2, _ = restrict_decomposition(dec, comp(2))
    assert [str(c.component) for c in kept2] == ["(4)"]


def test_restriction_to_same_set_keeps_everything():
    dec = s_primary_decomposition(zi(36), comp(2, 3))
    kept, _ = restrict_decomposition(dec, comp(2, 3))
    assert len(kept) == len(dec.components)


def test_restriction_requires_superset():
    dec = s_primary_decomposition(zi(9), comp(3))
    with pytest.raises(PreconditionError):
        restrict_decomposition(dec, UnitsOnly(Z))


# --- degeneration spot check -------------------------------------------------


@given(st.integers(min_value=2, max_value=10**5))
def test_units_decomposition_is_classical(q):
    a = s_primary_decomposition(zi(q), UnitsOnly(Z))
    b = primary_decomposition(zi(q))
    assert a.component_ideals() == b.component_ideals()
