"""Multiplicative sets: membership, residue images, disjointness, saturation.

Four decidable representations are supported, all immutable:

- UnitsOnly: the unit group of the ring.
- ComplementOfPrimes(p1..pk): everything outside the union of the prime
  ideals (p1), ..., (pk).
- GeneratedBy(g1..gm): all finite products of the generators, including the
  empty product 1.
- ExplicitFinite(members): a finite set given outright; finite rings only.

Every set contains 1 and excludes 0; both facts are enforced at construction.

The saturation S(I) = {a : s*a in I for some s in S} is returned together
with a stabilizer certificate: a concrete s0 in S with S(I) = (I : s0).  The
containments I <= S(I) and s0*S(I) <= I are re-verified on every call and a
module-level audit counter records that no call ever skipped the check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import count

from . import _intmath, _polymath
from .errors import CapacityError, ContractViolation, DomainError, PreconditionError, RingMismatch
from .ring_core import (
    FiniteProduct,
    Ideal,
    Integers,
    ModularIntegers,
    PolynomialsOverPrimeField,
    RingDescriptor,
    RingElement,
    ideal_colon,
    product_of,
)

WITNESS_KINDS = (
    "saturation-stabilizer",
    "s-primary-witness",
    "s-prime-witness",
    "decomposition-witness",
)


@dataclass(frozen=True)
class WitnessCertificate:
    """A concrete element of S certifying a predicate, with its factorization.

    provenance lists elements of S whose product is the witness, so the
    certificate can be re-verified without trusting the producing code path.
    """

    witness: RingElement
    kind: str
    provenance: tuple[RingElement, ...]

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise DomainError(f"unknown witness kind {self.kind!r}")

    def product_checks(self) -> bool:
        return product_of(self.provenance) == self.witness if self.provenance else self.witness.is_one()

    def membership_checks(self, mult_set: MultiplicativeSet) -> bool:
        if not mult_set.contains(self.witness):
            return False
        return all(mult_set.contains(f) for f in self.provenance)


# ---------------------------------------------------------------------------
# representations


@dataclass(frozen=True)
class MultiplicativeSet:
    ring: RingDescriptor

    def contains(self, x: RingElement) -> bool:
        raise NotImplementedError

    def is_finite(self) -> bool:
        raise NotImplementedError

    def elements_list(self) -> tuple[RingElement, ...]:
        """All members in canonical order; only when is_finite()."""
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class UnitsOnly(MultiplicativeSet):
    def contains(self, x: RingElement) -> bool:
        if x.ring != self.ring:
            raise RingMismatch("element from a different ring")
        return x.is_unit()

    def is_finite(self) -> bool:
        # every catalog ring has a finite unit group
        return True

    def elements_list(self) -> tuple[RingElement, ...]:
        return _units_of(self.ring)

    def describe(self) -> str:
        return "units"


@dataclass(frozen=True)
class ComplementOfPrimes(MultiplicativeSet):
    primes: tuple[RingElement, ...]

    def __post_init__(self):
        if not self.primes:
            raise DomainError("need at least one excluded prime, else 0 would belong to the set")
        canonical = []
        for p in self.primes:
            if p.ring != self.ring:
                raise RingMismatch("excluded prime from a different ring")
            ideal = Ideal.principal(p)
            if ideal.is_zero() or ideal.is_unit() or not ideal.is_prime():
                raise DomainError(f"{p} is not a prime element of {self.ring}")
            canonical.append(ideal.generator_element())
        canonical = sorted(set(canonical), key=lambda e: e.sort_key())
        object.__setattr__(self, "primes", tuple(canonical))

    def prime_ideals(self) -> tuple[Ideal, ...]:
        return tuple(Ideal.principal(p) for p in self.primes)

    def contains(self, x: RingElement) -> bool:
        if x.ring != self.ring:
            raise RingMismatch("element from a different ring")
        return not any(ideal.contains(x) for ideal in self.prime_ideals())

    def is_finite(self) -> bool:
        return self.ring.is_finite()

    def elements_list(self) -> tuple[RingElement, ...]:
        return _complement_elements(self)

    def describe(self) -> str:
        return "complement(" + ",".join(str(p) for p in self.primes) + ")"


@dataclass(frozen=True)
class GeneratedBy(MultiplicativeSet):
    generators: tuple[RingElement, ...]

    def __post_init__(self):
        canonical = []
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatch("generator from a different ring")
            if g.is_zero():
                raise DomainError("0 cannot generate a multiplicative set")
            canonical.append(g)
        canonical = sorted(set(canonical), key=lambda e: e.sort_key())
        object.__setattr__(self, "generators", tuple(canonical))
        if self.ring.is_finite() and any(x.is_zero() for x in _generated_closure(self)):
            raise DomainError("generators multiply to 0, so the set would contain 0")

    def contains(self, x: RingElement) -> bool:
        if x.ring != self.ring:
            raise RingMismatch("element from a different ring")
        if self.is_finite():
            return x in _generated_closure(self)
        return _reaches_one_by_division(self.ring, self.generators, x)

    def is_finite(self) -> bool:
        return self.ring.is_finite() or all(g.is_unit() for g in self.generators)

    def elements_list(self) -> tuple[RingElement, ...]:
        return _generated_closure(self)

    def describe(self) -> str:
        return "gen(" + ",".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class ExplicitFinite(MultiplicativeSet):
    members: tuple[RingElement, ...]

    def __post_init__(self):
        if not self.ring.is_finite():
            raise DomainError("explicit finite sets are supported on finite rings only")
        elems = []
        for x in self.members:
            if x.ring != self.ring:
                raise RingMismatch("member from a different ring")
            elems.append(x)
        elems = sorted(set(elems), key=lambda e: e.sort_key())
        object.__setattr__(self, "members", tuple(elems))
        one = self.ring.one()
        if one not in self.members:
            raise DomainError("a multiplicative set must contain 1")
        if self.ring.zero() in self.members:
            raise DomainError("a multiplicative set must not contain 0")
        member_set = set(self.members)
        for a in self.members:
            for b in self.members:
                if a * b not in member_set:
                    raise DomainError(f"not multiplicatively closed: {a}*{b} = {a * b} is missing")

    def contains(self, x: RingElement) -> bool:
        if x.ring != self.ring:
            raise RingMismatch("element from a different ring")
        return x in set(self.members)

    def is_finite(self) -> bool:
        return True

    def elements_list(self) -> tuple[RingElement, ...]:
        return self.members

    def describe(self) -> str:
        return "set{" + ",".join(str(x) for x in self.members) + "}"


# ---------------------------------------------------------------------------
# enumeration helpers


@lru_cache(maxsize=None)
def _units_of(ring: RingDescriptor) -> tuple[RingElement, ...]:
    if isinstance(ring, Integers):
        return (ring.element(1), ring.element(-1))
    if isinstance(ring, PolynomialsOverPrimeField):
        return tuple(ring.element((c,)) for c in range(1, ring.characteristic))
    return tuple(x for x in ring.elements() if x.is_unit())


@lru_cache(maxsize=None)
def _complement_elements(s: ComplementOfPrimes) -> tuple[RingElement, ...]:
    if not s.ring.is_finite():
        raise DomainError(f"cannot enumerate {s.describe()} over {s.ring}")
    ideals = s.prime_ideals()
    return tuple(x for x in s.ring.elements() if not any(i.contains(x) for i in ideals))


@lru_cache(maxsize=None)
def _generated_closure(s: GeneratedBy) -> tuple[RingElement, ...]:
    """Closure of {1} under multiplication by the generators.

    Finite by construction when called: either the ring is finite or every
    generator is a unit of a catalog ring (finite unit group).
    """
    seen = {s.ring.one()}
    frontier = [s.ring.one()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in s.generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen, key=lambda e: e.sort_key()))


def _exact_quotient(x: RingElement, g: RingElement) -> RingElement | None:
    """x / g when g divides x exactly in Z or GF(p)[x], else None."""
    ring = x.ring
    if isinstance(ring, Integers):
        if x.value % g.value == 0:
            return RingElement(ring, x.value // g.value)
        return None
    p = ring.characteristic
    q, r = _polymath.divmod_poly(x.value, g.value, p)
    return RingElement(ring, q) if r == _polymath.ZERO else None


def _reaches_one_by_division(ring, generators, x: RingElement) -> bool:
    """Decide whether x is a finite product of the generators.

    Depth-first search dividing out one generator at a time.  Division by a
    non-unit strictly shrinks the value, and the visited set bounds the
    unit-divisor churn, so the search terminates; no enumeration bound is
    involved and the answer is exact.
    """
    one = ring.one()
    seen = {x}
    stack = [x]
    while stack:
        v = stack.pop()
        if v == one:
            return True
        if v.is_zero():
            continue
        for g in generators:
            q = _exact_quotient(v, g)
            if q is not None and q not in seen:
                seen.add(q)
                stack.append(q)
    return False


# ---------------------------------------------------------------------------
# residue image

# generated-set witnesses are generator powers whose bit length grows with the
# image, so the image walk refuses to leave desk scale
_RESIDUE_IMAGE_CAP = 50_000


def s_residues_mod(mult_set: MultiplicativeSet, m: RingElement) -> dict:
    """Exact image of S in R/(m), as {residue payload: witness element of S}.

    On finite rings the modulus is ignored and the members themselves are
    returned.  On Z and GF(p)[x] the image is computed in closed form per
    representation; every residue carries an explicit witness s in S that
    maps onto it.
    """
    ring = mult_set.ring
    if m.ring != ring:
        raise RingMismatch("modulus from a different ring")
    if ring.is_finite():
        return {s.value: s for s in mult_set.elements_list()}

    modulus_ideal = Ideal.principal(m)
    if modulus_ideal.is_zero():
        raise DomainError("zero modulus in an infinite ring has no finite residue image")
    if modulus_ideal.is_unit():
        raise PreconditionError("modulus must generate a proper ideal")

    if isinstance(ring, Integers):
        return _integer_residues(mult_set, modulus_ideal.data)
    return _polynomial_residues(mult_set, modulus_ideal.data)


def _integer_residues(mult_set, mm: int) -> dict:
    ring = mult_set.ring
    if isinstance(mult_set, UnitsOnly):
        out = {}
        for v in (1, -1):
            out.setdefault(v % mm, ring.element(v))
        return out
    if isinstance(mult_set, GeneratedBy):
        gens = [(g.value % mm, g.value) for g in mult_set.generators]
        image = {1 % mm: 1}
        frontier = [(1 % mm, 1)]
        while frontier:
            if len(image) > _RESIDUE_IMAGE_CAP:
                # witnesses are generator powers; past desk scale their bit
                # length makes the image unstorable, so fail loudly instead
                raise CapacityError(
                    f"residue image of {mult_set.describe()} mod {mm} exceeds {_RESIDUE_IMAGE_CAP} entries"
                )
            nxt = []
            for r, w in frontier:
                for gr, gv in gens:
                    nr = r * gr % mm
                    if nr not in image:
                        image[nr] = w * gv
                        nxt.append((nr, image[nr]))
            frontier = nxt
        return {r: ring.element(w) for r, w in sorted(image.items())}
    if isinstance(mult_set, ComplementOfPrimes):
        excluded = [p.value for p in mult_set.primes]
        dividing = [p for p in excluded if mm % p == 0]
        out = {}
        for r in range(mm):
            if any(r % p == 0 for p in dividing):
                continue
            for t in count():
                cand = r + t * mm
                if cand != 0 and all(cand % p != 0 for p in excluded):
                    out[r] = ring.element(cand)
                    break
        return out
    raise DomainError(f"no residue image for {mult_set.describe()} over {ring}")


def _all_polys_ascending(p: int, max_degree: int):
    yield _polymath.ZERO
    for d in range(max_degree + 1):
        for lead in range(1, p):
            for f in _polymath.monic_polys_of_degree(d, p):
                yield _polymath.scale(f, lead, p)


def _polynomial_residues(mult_set, mm) -> dict:
    ring = mult_set.ring
    p = ring.characteristic
    if isinstance(mult_set, UnitsOnly):
        return {(c,): ring.element((c,)) for c in range(1, p)}
    if isinstance(mult_set, GeneratedBy):
        gens = [(_polymath.divmod_poly(g.value, mm, p)[1], g.value) for g in mult_set.generators]
        start = _polymath.divmod_poly(_polymath.ONE, mm, p)[1]
        image = {start: _polymath.ONE}
        frontier = [(start, _polymath.ONE)]
        while frontier:
            if len(image) > _RESIDUE_IMAGE_CAP:
                raise CapacityError(
                    f"residue image of {mult_set.describe()} mod {_polymath.to_string(mm)} exceeds {_RESIDUE_IMAGE_CAP} entries"
                )
            nxt = []
            for r, w in frontier:
                for gr, gv in gens:
                    nr = _polymath.divmod_poly(_polymath.mul(r, gr, p), mm, p)[1]
                    if nr not in image:
                        image[nr] = _polymath.mul(w, gv, p)
                        nxt.append((nr, image[nr]))
            frontier = nxt
        return {r: ring.element(w) for r, w in sorted(image.items(), key=lambda kv: (len(kv[0]), kv[0]))}
    if isinstance(mult_set, ComplementOfPrimes):
        excluded = [q.value for q in mult_set.primes]
        dividing = [q for q in excluded if _polymath.divides(q, mm, p)]
        degree_cap = _polymath.degree(mm) + sum(_polymath.degree(q) for q in excluded) + 2
        out = {}
        for r in _polymath.residues_mod(mm, p):
            if any(_polymath.divides(q, r, p) for q in dividing):
                continue
            for t in _all_polys_ascending(p, degree_cap):
                cand = _polymath.add(r, _polymath.mul(t, mm, p), p)
                if cand != _polymath.ZERO and not any(_polymath.divides(q, cand, p) for q in excluded):
                    out[r] = ring.element(cand)
                    break
            else:
                raise ContractViolation(f"no witness found for achievable residue {r}")
        return out
    raise DomainError(f"no residue image for {mult_set.describe()} over {ring}")


# ---------------------------------------------------------------------------
# disjointness


def disjointness_witness(mult_set: MultiplicativeSet, ideal: Ideal) -> RingElement | None:
    """An element of S ∩ I, or None when the two are disjoint."""
    ring = ideal.ring
    if mult_set.ring != ring:
        raise RingMismatch("ideal from a different ring")
    if ideal.is_unit():
        return ring.one()
    if isinstance(mult_set, UnitsOnly):
        # a proper ideal holding a unit would be the whole ring
        return None
    if mult_set.is_finite():
        for s in mult_set.elements_list():
            if ideal.contains(s):
                return s
        return None
    if isinstance(mult_set, ComplementOfPrimes):
        if ideal.is_zero():
            return None
        g = ideal.generator_element()
        if any(pi.contains(g) for pi in mult_set.prime_ideals()):
            # every multiple of g stays inside that prime ideal
            return None
        return g
    # GeneratedBy over Z or GF(p)[x]: S meets (m) exactly when the saturation
    # (m : G^∞) climbs to the unit ideal, and the stabilizer G^k is then a
    # member of S inside the ideal.  Never walk the residue image here: for
    # gen(2) mod a large prime it has ~m/2 entries with power-of-two witnesses
    # of unbounded bit length.
    if ideal.is_zero():
        return None
    sat, certificate = saturate(mult_set, ideal)
    return certificate.witness if sat.is_unit() else None


def is_disjoint(mult_set: MultiplicativeSet, ideal: Ideal) -> bool:
    """Decide S ∩ I = ∅."""
    return disjointness_witness(mult_set, ideal) is None


# ---------------------------------------------------------------------------
# saturation

_saturation_audit = {"calls": 0, "verified": 0}


def saturation_audit() -> dict:
    """Counters proving the saturation contract was checked on every call."""
    return dict(_saturation_audit)


def reset_saturation_audit() -> None:
    _saturation_audit["calls"] = 0
    _saturation_audit["verified"] = 0


def saturate(mult_set: MultiplicativeSet, ideal: Ideal) -> tuple[Ideal, WitnessCertificate]:
    """S(I) = {a : ∃s∈S, sa ∈ I} with a stabilizer s0 such that S(I) = (I : s0).

    Closed form for ComplementOfPrimes over principal generators (strip the
    prime-power factors whose primes stay outside S), iterated colon
    stabilization for GeneratedBy, and a total-product stabilizer for finite
    sets.  The contract I ⊆ S(I) and s0·S(I) ⊆ I is re-verified before
    returning; a violation raises instead of returning a wrong certificate.
    """
    ring = ideal.ring
    if mult_set.ring != ring:
        raise RingMismatch("ideal from a different ring")
    _saturation_audit["calls"] += 1

    if isinstance(mult_set, UnitsOnly):
        sat, witness, provenance = ideal, ring.one(), (ring.one(),)
    elif isinstance(mult_set, ComplementOfPrimes) and not isinstance(ring, FiniteProduct):
        sat, witness, provenance = _saturate_complement(mult_set, ideal)
    elif isinstance(mult_set, GeneratedBy):
        sat, witness, provenance = _saturate_generated(mult_set, ideal)
    else:
        # any finite representation: the product of all members stabilizes
        members = mult_set.elements_list()
        witness = product_of(members)
        sat = ideal_colon(ideal, Ideal.principal(witness))
        provenance = members

    certificate = WitnessCertificate(witness, "saturation-stabilizer", provenance)
    _check_saturation_contract(mult_set, ideal, sat, certificate)
    _saturation_audit["verified"] += 1
    return sat, certificate


def _check_saturation_contract(mult_set, ideal, sat, certificate):
    if not sat.contains_ideal(ideal):
        raise ContractViolation(f"saturation lost containment: {ideal} not inside {sat}")
    if not mult_set.contains(certificate.witness):
        raise ContractViolation(f"stabilizer {certificate.witness} is not in {mult_set.describe()}")
    pushed = certificate.witness * sat.generator_element()
    if not ideal.contains(pushed):
        raise ContractViolation(f"stabilizer fails: {certificate.witness}*{sat} is not inside {ideal}")
    if not certificate.product_checks():
        raise ContractViolation("witness provenance does not multiply to the witness")


def _saturate_complement(mult_set: ComplementOfPrimes, ideal: Ideal):
    """Strip from the generator every prime-power factor whose prime is in S."""
    ring = ideal.ring
    if ideal.is_zero() and not isinstance(ring, ModularIntegers):
        return ideal, ring.one(), (ring.one(),)

    if isinstance(ring, PolynomialsOverPrimeField):
        p = ring.characteristic
        excluded = {q.value for q in mult_set.primes}
        kept = _polymath.ONE
        stripped: list[RingElement] = []
        for factor, mult in _polymath.factorize(ideal.data, p):
            if factor in excluded:
                kept = _polymath.mul(kept, _polymath.pow_poly(factor, mult, p), p)
            else:
                stripped.extend([ring.element(factor)] * mult)
        witness = product_of(stripped) if stripped else ring.one()
        return Ideal(ring, kept), witness, tuple(stripped) or (ring.one(),)

    # Z and Z/n share the integer divisor arithmetic
    g = ideal.data
    excluded = [q.value for q in mult_set.primes]
    kept = _intmath.prime_part(g, excluded)
    leftover = g // kept
    stripped = [ring.element(q) for q, e in _intmath.factorize(leftover) for _ in range(e)]
    witness = product_of(stripped) if stripped else ring.one()
    if isinstance(ring, ModularIntegers):
        sat = Ideal(ring, kept)
    else:
        sat = Ideal(ring, kept)
    return sat, witness, tuple(stripped) or (ring.one(),)


def _saturate_generated(mult_set: GeneratedBy, ideal: Ideal):
    """Iterate J -> (J : g1*...*gm) to a fixed point; the step count k gives
    the stabilizer (g1*...*gm)^k."""
    ring = ideal.ring
    if not mult_set.generators:
        return ideal, ring.one(), (ring.one(),)
    big = product_of(mult_set.generators)
    big_ideal = Ideal.principal(big)
    current = ideal
    steps = 0
    while True:
        following = ideal_colon(current, big_ideal)
        if following == current:
            break
        current = following
        steps += 1
    if steps == 0:
        return current, ring.one(), (ring.one(),)
    witness = big ** steps
    provenance = tuple(g for _ in range(steps) for g in mult_set.generators)
    return current, witness, provenance


# ---------------------------------------------------------------------------
# subset comparison


def restrict_to_larger(small: MultiplicativeSet, large: MultiplicativeSet) -> bool | None:
    """Decide small ⊆ large.

    Three-valued by signature (None = not decidable), but every comparison
    between catalog representations resolves to True or False.
    """
    if small.ring != large.ring:
        raise RingMismatch("multiplicative sets over different rings")
    if small == large:
        return True
    if isinstance(small, GeneratedBy):
        # closure under multiplication makes generator membership sufficient
        return all(large.contains(g) for g in small.generators)
    if isinstance(small, (UnitsOnly, ExplicitFinite)) or small.is_finite():
        return all(large.contains(x) for x in small.elements_list())
    # small is ComplementOfPrimes over Z or GF(p)[x]
    if isinstance(large, ComplementOfPrimes):
        # fewer exclusions give the larger set
        return set(large.primes) <= set(small.primes)
    # small holds infinitely many pairwise non-associate primes; the unit
    # group is finite and a generated closure only ever divides powers of
    # finitely many primes, so neither can cover it
    return False
