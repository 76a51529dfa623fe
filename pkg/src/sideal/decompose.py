"""S-primary decompositions: construction, minimalization, uniqueness checks.

The construction follows the stabilized-saturation recipe: with s0 the
stabilizer of S(I), the identity I = (I : s0) ∩ (I + R*s0) splits I into its
saturation (decomposed classically into prime-power components, which are
automatically S-primary here) and an ideal meeting S; intersecting each
saturated component with (I + R*s0) produces S-primary components that
recompose to I exactly.  Every construction re-verifies recomposition, the
assembly identity, and the S-primariness of each component before returning.

Both uniqueness theorems, the minimal-prime containment for decompositions
of (0), the prime-avoidance covering property, and the restriction of a
decomposition to a larger multiplicative set are implemented with the same
verify-everything discipline; violations raise ContractViolation since the
underlying statements are theorems, not heuristics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import _intmath, _polymath
from .classify import is_s_prime, is_s_primary
from .errors import (
    ContractViolation,
    DisjointnessError,
    DomainError,
    PreconditionError,
)
from .multiplicative_sets import (
    MultiplicativeSet,
    UnitsOnly,
    WitnessCertificate,
    disjointness_witness,
    restrict_to_larger,
    s_residues_mod,
    saturate,
)
from .ring_core import (
    FiniteProduct,
    Ideal,
    Integers,
    ModularIntegers,
    PolynomialsOverPrimeField,
    RingElement,
    ideal_colon,
    ideal_intersection,
    ideal_sum,
    intersect_all,
    is_prime_ideal,
    product_of,
    radical,
)


@dataclass(frozen=True)
class DecompositionComponent:
    component: Ideal
    radical: Ideal
    saturation_of_component: Ideal
    saturation_of_radical: Ideal
    witness: WitnessCertificate


@dataclass(frozen=True)
class Decomposition:
    ideal: Ideal
    mult_set: MultiplicativeSet
    components: tuple[DecompositionComponent, ...]
    minimal: bool
    assembly_witness: WitnessCertificate

    def component_ideals(self) -> tuple[Ideal, ...]:
        return tuple(c.component for c in self.components)


@dataclass(frozen=True)
class FirstUniquenessReport:
    ideal: Ideal
    mult_set: MultiplicativeSet
    associated: tuple[Ideal, ...]
    computed: tuple[Ideal, ...]
    prime_witnesses: tuple[tuple[Ideal, RingElement], ...]


@dataclass(frozen=True)
class TheoremMinReport:
    ideal: Ideal
    mult_set: MultiplicativeSet
    hypothesis_holds: bool
    condition_failures: tuple[tuple[int, RingElement, RingElement], ...]
    minimal_primes: tuple[Ideal, ...]
    decomposition_radicals: tuple[Ideal, ...]
    conclusion_holds: bool | None


# ---------------------------------------------------------------------------
# construction helpers


def _make_component(q: Ideal, mult_set: MultiplicativeSet, strict: bool = True) -> DecompositionComponent:
    ok, certificate = is_s_primary(q, mult_set)
    if not ok:
        if strict:
            raise ContractViolation(f"constructed component {q} is not S-primary for {mult_set.describe()}")
        # tolerated on the way INTO minimalize; the stabilizer still certifies
        # (Q : s) = S(Q), which is all the reassembly argument uses
        _, certificate = saturate(mult_set, q)
    rad = radical(q)
    sat_q, _ = saturate(mult_set, q)
    sat_rad, _ = saturate(mult_set, rad)
    return DecompositionComponent(q, rad, sat_q, sat_rad, certificate)


def _assemble(
    ideal: Ideal,
    mult_set: MultiplicativeSet,
    component_ideals,
    assembly: WitnessCertificate,
    expect_minimal: bool,
    strict: bool = True,
) -> Decomposition:
    components = tuple(
        sorted(
            (_make_component(q, mult_set, strict) for q in component_ideals),
            key=lambda c: (c.saturation_of_radical.sort_key(), c.component.sort_key()),
        )
    )
    if not components:
        raise ContractViolation(f"empty decomposition assembled for {ideal}")
    recomposed = intersect_all([c.component for c in components], ideal.ring)
    if recomposed != ideal:
        raise ContractViolation(f"recomposition failed: intersection {recomposed} differs from {ideal}")
    s = assembly.witness
    left = ideal_colon(ideal, Ideal.principal(s))
    right = ideal_sum(ideal, Ideal.principal(s))
    if ideal_intersection(left, right) != ideal:
        raise ContractViolation(f"assembly identity (I:s) ∩ (I+Rs) = I failed for s = {s}")
    dec = Decomposition(ideal, mult_set, components, minimal=False, assembly_witness=assembly)
    if expect_minimal:
        if not is_minimal_decomposition(dec):
            raise ContractViolation(f"construction produced a non-minimal decomposition of {ideal}")
        dec = replace(dec, minimal=True)
    return dec


def _classical_primary_components(ideal: Ideal) -> list[Ideal]:
    """Prime-power ideals intersecting to the given proper ideal."""
    ring = ideal.ring
    if isinstance(ring, Integers):
        if ideal.data == 0:
            return [ideal]
        return [Ideal(ring, p**e) for p, e in _intmath.factorize(ideal.data)]
    if isinstance(ring, ModularIntegers):
        return [Ideal(ring, p**e) for p, e in _intmath.factorize(ideal.data)]
    if isinstance(ring, PolynomialsOverPrimeField):
        if ideal.data == _polymath.ZERO:
            return [ideal]
        p = ring.characteristic
        return [Ideal(ring, _polymath.pow_poly(f, e, p)) for f, e in _polymath.factorize(ideal.data, p)]
    out = []
    for i, (d, n) in enumerate(zip(ideal.data, ring.moduli)):
        for p, e in _intmath.factorize(d):
            payload = [1] * len(ring.moduli)
            payload[i] = p**e
            out.append(Ideal(ring, tuple(payload)))
    return out


def primary_decomposition(ideal: Ideal) -> Decomposition:
    """Classical minimal primary decomposition, expressed with S = units."""
    if ideal.is_unit():
        raise PreconditionError("the unit ideal has no primary decomposition")
    ring = ideal.ring
    mult_set = UnitsOnly(ring)
    assembly = WitnessCertificate(ring.one(), "decomposition-witness", (ring.one(),))
    return _assemble(ideal, mult_set, _classical_primary_components(ideal), assembly, expect_minimal=True)


def _group_and_prune(mult_set: MultiplicativeSet, primary_ideals) -> list[Ideal]:
    """Group same-saturated-radical components, intersect groups, then drop
    every group whose saturation contains the intersection of the others.

    Among simultaneously redundant groups the canonically largest one goes
    first; rescanning after each removal keeps the output unique.
    """
    groups: dict = {}
    for q in primary_ideals:
        sat_rad, _ = saturate(mult_set, radical(q))
        key = sat_rad.sort_key()
        groups[key] = ideal_intersection(groups[key], q) if key in groups else q
    entries = []
    for q in groups.values():
        sat_q, _ = saturate(mult_set, q)
        entries.append((q, sat_q))
    while True:
        redundant = []
        for i, (_, sat_q) in enumerate(entries):
            rest = [s for j, (_, s) in enumerate(entries) if j != i]
            inter = intersect_all(rest, sat_q.ring)
            if sat_q.contains_ideal(inter):
                redundant.append(i)
        if not redundant:
            break
        drop = max(redundant, key=lambda i: entries[i][1].sort_key())
        del entries[drop]
    return [q for q, _ in entries]


def s_primary_decomposition(ideal: Ideal, mult_set: MultiplicativeSet) -> Decomposition:
    """Write I as a finite intersection of S-primary ideals.

    Requires I proper and I ∩ S = ∅ (the witness travels in the error when
    the ideal meets S).  The result is minimal and carries the stabilizer s
    with I = (I : s) ∩ (I + Rs) as its assembly witness.
    """
    if ideal.ring != mult_set.ring:
        raise PreconditionError("ideal and multiplicative set live in different rings")
    if ideal.is_unit():
        raise PreconditionError("the unit ideal has no S-primary decomposition")
    meets = disjointness_witness(mult_set, ideal)
    if meets is not None:
        raise DisjointnessError(f"ideal meets S (witness {meets})", witness=meets)

    saturated, stabilizer_cert = saturate(mult_set, ideal)
    if ideal_colon(ideal, Ideal.principal(stabilizer_cert.witness)) != saturated:
        raise ContractViolation("stabilizer does not produce the saturation as a single colon")

    pruned = _group_and_prune(mult_set, _classical_primary_components(saturated))

    assembly_ideal = ideal_sum(ideal, Ideal.principal(stabilizer_cert.witness))
    if assembly_ideal.is_unit():
        final = pruned
    else:
        final = [ideal_intersection(q, assembly_ideal) for q in pruned]

    assembly = WitnessCertificate(
        stabilizer_cert.witness, "decomposition-witness", stabilizer_cert.provenance
    )
    return _assemble(ideal, mult_set, final, assembly, expect_minimal=True)


def assemble_decomposition(
    mult_set: MultiplicativeSet, component_ideals, ideal: Ideal | None = None, strict: bool = True
) -> Decomposition:
    """Package explicit ideals as a Decomposition of their intersection (or
    of the given ideal, which must equal it).  The assembly element is the
    product of per-component saturation stabilizers, and the minimal flag
    reflects an actual check rather than an assumption.

    With strict=False a component may fail to be S-primary; it then carries
    its saturation stabilizer as witness.  That is enough for minimalize,
    which only needs the components to recompose.
    """
    parts = list(component_ideals)
    if not parts:
        raise PreconditionError("need at least one component")
    ring = parts[0].ring
    computed = intersect_all(parts, ring)
    if ideal is None:
        ideal = computed
    elif ideal != computed:
        raise PreconditionError(f"components intersect to {computed}, not {ideal}")
    stabilizers = []
    provenance: list[RingElement] = []
    for q in parts:
        _, cert = saturate(mult_set, q)
        stabilizers.append(cert.witness)
        provenance.extend(cert.provenance)
    assembly = WitnessCertificate(product_of(stabilizers), "decomposition-witness", tuple(provenance))
    dec = _assemble(ideal, mult_set, parts, assembly, expect_minimal=False, strict=strict)
    if is_minimal_decomposition(dec):
        dec = replace(dec, minimal=True)
    return dec


# ---------------------------------------------------------------------------
# minimality


def is_minimal_decomposition(dec: Decomposition) -> bool:
    """Distinct saturated radicals, and no component's saturation contains
    the intersection of the other components' saturations."""
    saturations = []
    sat_radicals = []
    for c in dec.components:
        sat_q, _ = saturate(dec.mult_set, c.component)
        sat_p, _ = saturate(dec.mult_set, radical(c.component))
        saturations.append(sat_q)
        sat_radicals.append(sat_p)
    if len({s.sort_key() for s in sat_radicals}) != len(sat_radicals):
        return False
    for i, sat_q in enumerate(saturations):
        rest = [s for j, s in enumerate(saturations) if j != i]
        if sat_q.contains_ideal(intersect_all(rest, sat_q.ring)):
            return False
    return True


def minimalize(dec: Decomposition) -> Decomposition:
    """Reduce a decomposition to a minimal one (idempotent: minimal input is
    returned as-is, flag set).

    The assembly element is the product of per-component saturation
    stabilizers t_i, so (I : s) = ⋂ (Q_i : s) = ⋂ S(Q_i) = S(I) holds and the
    reassembly I = (I : s) ∩ (I + Rs) goes through even when some input
    component fails to be S-primary on its own.
    """
    if is_minimal_decomposition(dec):
        return dec if dec.minimal else replace(dec, minimal=True)

    stabilizers = []
    provenance: list[RingElement] = []
    for c in dec.components:
        _, cert = saturate(dec.mult_set, c.component)
        stabilizers.append(cert.witness)
        provenance.extend(cert.provenance)
    s = product_of(stabilizers)

    pruned = _group_and_prune(dec.mult_set, [c.component for c in dec.components])
    assembly_ideal = ideal_sum(dec.ideal, Ideal.principal(s))
    if assembly_ideal.is_unit():
        final = pruned
    else:
        final = [ideal_intersection(q, assembly_ideal) for q in pruned]

    assembly = WitnessCertificate(s, "decomposition-witness", tuple(provenance))
    return _assemble(dec.ideal, dec.mult_set, final, assembly, expect_minimal=True)


def associated_s_primes(dec: Decomposition) -> tuple[Ideal, ...]:
    """The saturated radicals S(P_i), canonically ordered; needs dec minimal."""
    if not dec.minimal:
        raise PreconditionError("associated S-primes require a minimal decomposition")
    return tuple(sorted((c.saturation_of_radical for c in dec.components), key=Ideal.sort_key))


# ---------------------------------------------------------------------------
# first uniqueness


def _uniqueness_test_set(ideal: Ideal, mult_set: MultiplicativeSet) -> list[RingElement]:
    """Finite x-set whose colon radicals realize every associated S-prime.

    Every saturation generator divides the generator of I, so divisors of
    gen(I) already reach each S(P_i); multiplying by the residue image of S
    only widens the sweep.  Finite rings simply take everything.
    """
    ring = ideal.ring
    if ring.is_finite():
        return list(ring.elements())
    if ideal.is_zero():
        raise DomainError("no finite uniqueness test set for the zero ideal of an infinite ring")
    image = s_residues_mod(mult_set, ideal.generator_element())
    residues = [ring.element(r) for r in image]
    if isinstance(ring, Integers):
        divisors = [ring.element(d) for d in _intmath.divisors(ideal.data)]
    else:
        divisors = [ring.element(f) for f in _polymath.monic_divisors(ideal.data, ring.characteristic)]
    seen = {}
    for d in divisors:
        for r in residues:
            x = d * r
            seen.setdefault(x.sort_key(), x)
    return [seen[k] for k in sorted(seen)]


def first_uniqueness_report(
    ideal: Ideal, mult_set: MultiplicativeSet, dec: Decomposition
) -> FirstUniquenessReport:
    """The prime values among S(rad(I : x)) are exactly the associated
    S-primes of any minimal decomposition; raises if the sets differ."""
    if dec.ideal != ideal or dec.mult_set != mult_set:
        raise PreconditionError("decomposition does not belong to the given ideal and multiplicative set")
    if not dec.minimal:
        raise PreconditionError("first uniqueness requires a minimal decomposition")
    computed: dict = {}
    for x in _uniqueness_test_set(ideal, mult_set):
        quotient = ideal_colon(ideal, Ideal.principal(x))
        value, _ = saturate(mult_set, radical(quotient))
        if value.is_unit() or not is_prime_ideal(value):
            continue
        computed.setdefault(value.sort_key(), (value, x))
    associated = associated_s_primes(dec)
    computed_primes = tuple(computed[k][0] for k in sorted(computed))
    if {p.sort_key() for p in associated} != set(computed):
        raise ContractViolation(
            f"first uniqueness violated for {ideal}: associated {associated} vs colon-derived {computed_primes}"
        )
    witnesses = tuple((computed[k][0], computed[k][1]) for k in sorted(computed))
    return FirstUniquenessReport(ideal, mult_set, associated, computed_primes, witnesses)


# ---------------------------------------------------------------------------
# isolated components / second uniqueness


def isolated_s_primes(dec: Decomposition) -> tuple[int, ...]:
    """0-based indices i with sP_j ⊈ P_i for all s ∈ S, j ≠ i.

    For principal P_j the condition sP_j ⊆ P_i for some s collapses to
    gen(P_j) ∈ S(P_i).
    """
    if not dec.minimal:
        raise PreconditionError("isolated S-primes require a minimal decomposition")
    out = []
    for i, c in enumerate(dec.components):
        absorbed = any(
            c.saturation_of_radical.contains(other.radical.generator_element())
            for j, other in enumerate(dec.components)
            if j != i
        )
        if not absorbed:
            out.append(i)
    return tuple(out)


def second_uniqueness_check(dec_a: Decomposition, dec_b: Decomposition) -> bool:
    """Intersections of isolated components agree across the two minimal
    decompositions of the same (I, S)."""
    if dec_a.ideal != dec_b.ideal or dec_a.mult_set != dec_b.mult_set:
        raise PreconditionError("decompositions of different ideals or multiplicative sets")
    ring = dec_a.ideal.ring
    inter_a = intersect_all([dec_a.components[i].component for i in isolated_s_primes(dec_a)], ring)
    inter_b = intersect_all([dec_b.components[i].component for i in isolated_s_primes(dec_b)], ring)
    return inter_a == inter_b


# ---------------------------------------------------------------------------
# crossing with an ideal that meets S


def cross_with_meeting_ideal(q: Ideal, j: Ideal, mult_set: MultiplicativeSet) -> Ideal:
    """Q primary and disjoint from S, J meets S: then Q ∩ J is S-primary with
    radical rad(Q) ∩ rad(J)."""
    from .ring_core import is_primary_ideal

    if not is_primary_ideal(q):
        raise PreconditionError(f"{q} is not a primary ideal")
    meets = disjointness_witness(mult_set, q)
    if meets is not None:
        raise PreconditionError(f"Q meets S (witness {meets})")
    if disjointness_witness(mult_set, j) is None:
        raise PreconditionError("J misses S entirely")
    crossed = ideal_intersection(q, j)
    ok, _ = is_s_primary(crossed, mult_set)
    if not ok:
        raise ContractViolation(f"{crossed} failed to be S-primary")
    if radical(crossed) != ideal_intersection(radical(q), radical(j)):
        raise ContractViolation("radical of the crossing is not the intersection of radicals")
    return crossed


def covers_some_component(
    prime: Ideal, parts, mult_set: MultiplicativeSet
) -> tuple[int, WitnessCertificate]:
    """P an S-prime containing ⋂ Q_k: find k and s ∈ S with s·Q_k ⊆ P.

    Returns the 0-based index; existence is a theorem, so exhausting the
    parts without a hit raises."""
    parts = list(parts)
    ok, _ = is_s_prime(prime, mult_set)
    if not ok:
        raise PreconditionError(f"{prime} is not S-prime for {mult_set.describe()}")
    if not prime.contains_ideal(intersect_all(parts, prime.ring)):
        raise PreconditionError("P does not contain the intersection of the parts")
    sat, cert = saturate(mult_set, prime)
    for k, part in enumerate(parts):
        if sat.contains(part.generator_element()):
            witness = WitnessCertificate(cert.witness, "decomposition-witness", cert.provenance)
            if not prime.contains(witness.witness * part.generator_element()):
                raise ContractViolation("covering witness failed its own containment")
            return k, witness
    raise ContractViolation(f"no part is covered into {prime}, contradicting prime avoidance")


# ---------------------------------------------------------------------------
# minimal primes and the zero-ideal theorem


def minimal_primes_over(ideal: Ideal) -> tuple[Ideal, ...]:
    """Minimal elements among the prime ideals containing the ideal."""
    ring = ideal.ring
    if isinstance(ring, Integers):
        if ideal.data == 0:
            return (Ideal(ring, 0),)
        return tuple(Ideal(ring, p) for p, _ in _intmath.factorize(ideal.data))
    if isinstance(ring, ModularIntegers):
        return tuple(Ideal(ring, p) for p, _ in _intmath.factorize(ideal.data))
    if isinstance(ring, PolynomialsOverPrimeField):
        if ideal.data == _polymath.ZERO:
            return (Ideal(ring, _polymath.ZERO),)
        return tuple(
            Ideal(ring, f) for f, _ in _polymath.factorize(ideal.data, ring.characteristic)
        )
    out = []
    for i, d in enumerate(ideal.data):
        for p, _ in _intmath.factorize(d):
            payload = [1] * len(ring.moduli)
            payload[i] = p
            out.append(Ideal(ring, tuple(payload)))
    return tuple(sorted(out, key=Ideal.sort_key))


def zero_divisor_condition(
    prime: Ideal, mult_set: MultiplicativeSet
) -> tuple[bool, tuple[RingElement, RingElement] | None]:
    """Does the image of S in R/P avoid all zero divisors?

    Exact for the whole catalog: R/P is Z, Z/d, GF(p)[x]/(g) or a product of
    Z/d_i, where being a zero divisor means sharing a factor with the
    defining modulus.  On failure returns (s, x) with x ∉ P but s·x ∈ P.
    """
    ring = prime.ring
    if prime.is_unit():
        raise PreconditionError("the condition is about proper ideals")
    if ring.is_finite():
        members = mult_set.elements_list()
        if isinstance(ring, ModularIntegers):
            d = prime.data
            for s in members:
                g = math.gcd(s.value, d)
                if g != 1:
                    return False, (s, ring.element(d // g))
            return True, None
        for s in members:
            for i, (si, d) in enumerate(zip(s.value, prime.data)):
                if d == 1:
                    continue
                g = math.gcd(si, d)
                if g != 1:
                    payload = [0] * len(ring.moduli)
                    payload[i] = d // g
                    return False, (s, ring.element(tuple(payload)))
        return True, None
    if prime.is_zero():
        # the quotient is the ring itself, a domain
        return True, None
    generator = prime.generator_element()
    image = s_residues_mod(mult_set, generator)
    if isinstance(ring, Integers):
        d = prime.data
        for r, witness in image.items():
            g = math.gcd(r, d)
            if g != 1:
                return False, (witness, ring.element(d // g))
        return True, None
    p = ring.characteristic
    for r, witness in image.items():
        g = _polymath.gcd(r, prime.data, p)
        if _polymath.degree(g) >= 1:
            return False, (witness, ring.element(_polymath.divmod_poly(prime.data, g, p)[0]))
    return True, None


def theorem_min_check(dec: Decomposition) -> TheoremMinReport:
    """For a minimal decomposition of (0): when every component satisfies
    the zero-divisor condition, each minimal prime of R is one of the
    decomposition radicals.  Hypothesis failures are reported, not asserted.
    """
    if not dec.ideal.is_zero():
        raise PreconditionError("the minimal-prime theorem is about decompositions of the zero ideal")
    if not dec.minimal:
        raise PreconditionError("the minimal-prime theorem needs a minimal decomposition")
    failures = []
    for i, c in enumerate(dec.components):
        ok, pair = zero_divisor_condition(c.radical, dec.mult_set)
        if not ok:
            failures.append((i, pair[0], pair[1]))
    radicals = tuple(c.radical for c in dec.components)
    minimal_primes = minimal_primes_over(dec.ideal)
    if failures:
        return TheoremMinReport(
            dec.ideal, dec.mult_set, False, tuple(failures), minimal_primes, radicals, None
        )
    for c in dec.components:
        if not is_prime_ideal(c.radical):
            raise ContractViolation(
                f"{c.radical} should be prime once the zero-divisor condition holds"
            )
    radical_keys = {r.sort_key() for r in radicals}
    holds = all(p.sort_key() in radical_keys for p in minimal_primes)
    if not holds:
        raise ContractViolation(
            f"minimal prime missing from decomposition radicals: {minimal_primes} vs {radicals}"
        )
    return TheoremMinReport(
        dec.ideal, dec.mult_set, True, (), minimal_primes, radicals, True
    )


# ---------------------------------------------------------------------------
# radical ideals / restriction to a larger multiplicative set


def s_prime_decomposition_of_radical(ideal: Ideal, mult_set: MultiplicativeSet) -> tuple[Ideal, ...]:
    """A radical ideal disjoint from S is an intersection of S-prime ideals:
    the radicals of its S-primary components."""
    if radical(ideal) != ideal:
        raise PreconditionError(f"{ideal} is not a radical ideal")
    dec = s_primary_decomposition(ideal, mult_set)
    primes = tuple(c.radical for c in dec.components)
    for p in primes:
        ok, _ = is_s_prime(p, mult_set)
        if not ok:
            raise ContractViolation(f"component radical {p} is not S-prime")
    if intersect_all(primes, ideal.ring) != ideal:
        raise ContractViolation("component radicals do not intersect back to the radical ideal")
    return primes


_restriction_audit = {"calls": 0, "verified": 0}


def restriction_audit() -> dict:
    return dict(_restriction_audit)


def reset_restriction_audit() -> None:
    _restriction_audit["calls"] = 0
    _restriction_audit["verified"] = 0


def restrict_decomposition(
    dec: Decomposition, larger: MultiplicativeSet
) -> tuple[tuple[DecompositionComponent, ...], WitnessCertificate]:
    """Keep the components disjoint from the larger set S' ⊇ S; the product t
    of their S-primary witnesses satisfies t·S'(I) ⊆ ⋂ kept ⊆ S'(I).

    Both inclusions are verified on every call (see restriction_audit).
    """
    if restrict_to_larger(dec.mult_set, larger) is not True:
        raise PreconditionError("the given multiplicative set does not contain the decomposition's own")
    if not dec.minimal:
        raise PreconditionError("restriction requires a minimal decomposition")
    _restriction_audit["calls"] += 1
    ring = dec.ideal.ring
    kept = tuple(
        c for c in dec.components if disjointness_witness(larger, c.component) is None
    )
    witnesses = [c.witness.witness for c in kept]
    provenance = tuple(f for c in kept for f in c.witness.provenance)
    t = product_of(witnesses) if witnesses else ring.one()
    certificate = WitnessCertificate(t, "decomposition-witness", provenance or (ring.one(),))

    primed_saturation, _ = saturate(larger, dec.ideal)
    kept_intersection = intersect_all([c.component for c in kept], ring)
    if not kept_intersection.contains(t * primed_saturation.generator_element()):
        raise ContractViolation("t·S'(I) escapes the kept intersection")
    if not primed_saturation.contains_ideal(kept_intersection):
        raise ContractViolation("kept intersection is not inside S'(I)")
    _restriction_audit["verified"] += 1
    return kept, certificate


# ---------------------------------------------------------------------------
# small named pieces of the theory


def intersect_same_prime_components(parts, mult_set: MultiplicativeSet) -> Ideal:
    """Intersection of S-primary ideals sharing one saturated radical is
    S-primary with that radical."""
    parts = list(parts)
    if not parts:
        raise PreconditionError("need at least one component")
    keys = set()
    for q in parts:
        ok, _ = is_s_primary(q, mult_set)
        if not ok:
            raise PreconditionError(f"{q} is not S-primary")
        sat_rad, _ = saturate(mult_set, radical(q))
        keys.add(sat_rad.sort_key())
    if len(keys) != 1:
        raise PreconditionError("components have different saturated radicals")
    crossed = intersect_all(parts, parts[0].ring)
    ok, _ = is_s_primary(crossed, mult_set)
    if not ok:
        raise ContractViolation(f"intersection {crossed} lost S-primariness")
    return crossed


def stabilized_saturation_witness(ideal: Ideal, mult_set: MultiplicativeSet) -> tuple[Ideal, WitnessCertificate]:
    """Saturation plus certificate, with the idempotence S(S(I)) = S(I)
    checked explicitly."""
    sat, cert = saturate(mult_set, ideal)
    again, _ = saturate(mult_set, sat)
    if again != sat:
        raise ContractViolation(f"saturation is not idempotent on {ideal}")
    return sat, cert
