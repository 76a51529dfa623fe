"""Brute-force reference layer: finite universes, definition-literal checks,
sweep machinery."""

import json

import numpy as np
import pytest

from sideal.ring_core import FiniteProduct, Ideal, ModularIntegers
from sideal.multiplicative_sets import ExplicitFinite, GeneratedBy, UnitsOnly, saturate
from sideal.oracle import (
    SWEEP_TAGS,
    TAG_ALIASES,
    brute_colon_by_element,
    brute_is_s_primary,
    brute_is_s_prime,
    brute_isolated_intersection,
    brute_saturation,
    build_universe,
    enumerate_minimal_decompositions,
    merge_candidate_sets,
    sweep,
)
from sideal.errors import CapacityError, PreconditionError

R12 = ModularIntegers(12)
R30 = ModularIntegers(30)
R36 = ModularIntegers(36)


def test_universe_counts_mod_36():
    u = build_universe(R36)
    assert len(u.all_elements) == 36
    # ideals of Z/36 = divisors of 36
    assert len(u.all_ideals) == 9
    assert len(u.candidate_mult_sets) == 24


def test_mul_table_matches_ring_multiplication():
    for ring in (R12, FiniteProduct((2, 6))):
        u = build_universe(ring)
        table = u.mul_table()
        for i, a in enumerate(u.all_elements):
            for j, b in enumerate(u.all_elements):
                assert u.all_elements[table[i, j]] == a * b


def test_member_vector_agrees_with_contains():
    u = build_universe(FiniteProduct((2, 6)))
    for ideal in u.all_ideals:
        mask = u.member_vector(ideal)
        for i, x in enumerate(u.all_elements):
            assert bool(mask[i]) == ideal.contains(x)


def test_brute_saturation_matches_fast_path_mod_36():
    u = build_universe(R36)
    g2 = GeneratedBy(R36, (R36.element(2),))
    expected = {2: "(1)", 6: "(3)", 12: "(3)", 18: "(9)", 0: "(9)"}
    for gen_value, sat_str in expected.items():
        ideal = Ideal.principal(R36.element(gen_value))
        brute = brute_saturation(u, ideal, g2)
        fast, _ = saturate(g2, ideal)
        assert str(brute) == sat_str
        assert brute == fast


def test_brute_colon_by_element():
    u = build_universe(R12)
    i6 = Ideal.principal(R12.element(6))
    assert brute_colon_by_element(u, i6, R12.element(2)) == Ideal.principal(R12.element(3))
    assert brute_colon_by_element(u, i6, R12.element(1)) == i6


def test_brute_classify_against_known_rows():
    u = build_universe(R36)
    g2 = GeneratedBy(R36, (R36.element(2),))
    units = UnitsOnly(R36)
    rows = {
        (str(units), 6): (False, False),
        (str(g2), 6): (True, True),
        (str(g2), 18): (False, True),
        (str(g2), 0): (False, True),
    }
    for (set_str, gen_value), (sprime, sprimary) in rows.items():
        mult_set = g2 if set_str == str(g2) else units
        q = Ideal.principal(R36.element(gen_value))
        assert brute_is_s_prime(u, q, mult_set) == sprime
        assert brute_is_s_primary(u, q, mult_set) == sprimary


def test_enumerate_minimal_decompositions_mod_30():
    u = build_universe(R30)
    g2 = GeneratedBy(R30, (R30.element(2),))
    zero = Ideal.zero_ideal(R30)
    decs = enumerate_minimal_decompositions(u, zero, g2)
    rendered = sorted(sorted(str(q) for q in parts) for parts in decs)
    assert rendered == [["(10)", "(3)"], ["(10)", "(6)"], ["(5)", "(6)"]]


def test_brute_isolated_intersection():
    u = build_universe(R30)
    g2 = GeneratedBy(R30, (R30.element(2),))
    zero = Ideal.zero_ideal(R30)
    decs = enumerate_minimal_decompositions(u, zero, g2)
    # isolated components agree across every minimal decomposition
    baseline = brute_isolated_intersection(u, decs[0], g2)
    for parts in decs[1:]:
        assert brute_isolated_intersection(u, parts, g2) == baseline


def test_sweep_counts_mod_12():
    u = build_universe(R12)
    fa = sweep(u, "fast-agreement")
    assert fa.instances == 170 and fa.counterexamples == ()
    sp = sweep(u, "sp")
    assert sp.theorem == "irreducible-implies-primary"
    assert sp.instances == 32 and sp.counterexamples == ()
    ex = sweep(u, "existence")
    assert ex.instances == 40 and ex.counterexamples == ()


def test_sweep_all_tags_run_clean_mod_30():
    # Z/30 exercises every tag non-vacuously (Z/12 has no second-uniqueness pairs)
    u = build_universe(R30)
    for tag in SWEEP_TAGS:
        report = sweep(u, tag)
        assert report.counterexamples == (), tag
        assert report.instances > 0, tag


def test_sweep_merged_policy_grows_instance_count():
    base = build_universe(R12)
    merged = merge_candidate_sets(base, build_universe(R12, mult_set_policy="all-closed-subsets"))
    assert sweep(merged, "fast-agreement").instances == 510


def test_sweep_unknown_tag():
    u = build_universe(R12)
    with pytest.raises(PreconditionError):
        sweep(u, "no-such-theorem")
    assert "sp" in TAG_ALIASES


def test_canonical_json_is_byte_stable():
    u = build_universe(R12)
    a = sweep(u, "existence").canonical_json()
    b = sweep(u, "existence").canonical_json()
    assert a == b
    payload = json.loads(a)
    assert payload["elapsed"] == 0.0
    assert payload["schema"] == 1


def test_sweep_report_round_trip():
    u = build_universe(R12)
    report = sweep(u, "minimal-primes")
    payload = json.loads(report.to_json())
    assert payload["theorem"] == "minimal-primes"
    assert payload["instances"] == report.instances
    assert payload["counterexamples"] == []


def test_build_universe_caps():
    with pytest.raises(CapacityError, match="4096"):
        build_universe(ModularIntegers(5000))
    with pytest.raises(CapacityError, match="64"):
        build_universe(ModularIntegers(100), mult_set_policy="all-closed-subsets")


def test_closed_subset_policy_on_tiny_ring():
    u = build_universe(ModularIntegers(6), mult_set_policy="all-closed-subsets")
    for s in u.candidate_mult_sets:
        assert isinstance(s, ExplicitFinite)
        values = s.elements_list()
        for a in values:
            for b in values:
                assert (a * b) in values
