"""Brute-force ground truth on finite rings.

Every predicate here is evaluated straight off its definition by enumerating
elements, pairs, ideals, or whole decompositions, with no reliance on the
saturation-based criteria in classify/decompose.  The only liberties taken
are mechanical: multiplication tables and membership vectors are precomputed
as numpy arrays, and witness candidates producing identical constraint rows
are deduplicated by raw bytes before the quantifier scan.  Agreement between
these routines and the fast procedures is what the test suite leans on.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import _intmath
from .decompose import (
    covers_some_component,
    is_minimal_decomposition,
    minimalize,
    s_primary_decomposition,
    theorem_min_check,
)
from .errors import CapacityError, ContractViolation, PreconditionError
from .multiplicative_sets import ExplicitFinite, MultiplicativeSet
from .ring_core import (
    FiniteProduct,
    Ideal,
    ModularIntegers,
    RingDescriptor,
    RingElement,
    ideal_intersection,
    intersect_all,
    is_prime_ideal,
    is_primary_ideal,
    radical,
)

ORACLE_CAP = 4096
CLOSED_SUBSET_CAP = 64


@dataclass
class FiniteUniverse:
    ring: RingDescriptor
    all_elements: list
    all_ideals: list
    candidate_mult_sets: list
    _index: dict = field(default_factory=dict, repr=False)
    _mul: np.ndarray | None = field(default=None, repr=False)
    _members: dict = field(default_factory=dict, repr=False)
    _set_indices: dict = field(default_factory=dict, repr=False)
    _mask_to_ideal: dict = field(default_factory=dict, repr=False)

    def element_index(self, x: RingElement) -> int:
        if not self._index:
            self._index.update((e.sort_key(), i) for i, e in enumerate(self.all_elements))
        return self._index[x.sort_key()]

    def mul_table(self) -> np.ndarray:
        if self._mul is None:
            n = len(self.all_elements)
            r = self.ring
            if isinstance(r, ModularIntegers):
                idx = np.arange(n, dtype=np.int64)
                table = (idx[:, None] * idx[None, :]) % r.modulus
            else:
                coords = self._coordinate_arrays()
                table = np.zeros((n, n), dtype=np.int64)
                for c, modulus in zip(coords, r.moduli):
                    table = table * modulus + (c[:, None] * c[None, :]) % modulus
            self._mul = table.astype(np.int32)
        return self._mul

    def _coordinate_arrays(self) -> list[np.ndarray]:
        # canonical enumeration order is mixed-radix with the last modulus fastest
        n = len(self.all_elements)
        idx = np.arange(n, dtype=np.int64)
        coords = []
        for modulus in reversed(self.ring.moduli):
            coords.append(idx % modulus)
            idx //= modulus
        return list(reversed(coords))

    def member_vector(self, ideal: Ideal) -> np.ndarray:
        key = ideal.data
        if key not in self._members:
            r = self.ring
            if isinstance(r, ModularIntegers):
                idx = np.arange(len(self.all_elements), dtype=np.int64)
                mask = idx % ideal.data == 0
            else:
                mask = np.ones(len(self.all_elements), dtype=bool)
                for c, d in zip(self._coordinate_arrays(), ideal.data):
                    mask &= c % d == 0
            self._members[key] = mask
        return self._members[key]

    def mult_set_key(self, mult_set: MultiplicativeSet):
        return tuple(x.sort_key() for x in mult_set.elements_list())

    def mult_set_indices(self, mult_set: MultiplicativeSet) -> np.ndarray:
        key = self.mult_set_key(mult_set)
        if key not in self._set_indices:
            self._set_indices[key] = np.array(
                [self.element_index(x) for x in mult_set.elements_list()], dtype=np.int64
            )
        return self._set_indices[key]

    def ideal_from_mask(self, mask: np.ndarray) -> Ideal:
        if not self._mask_to_ideal:
            for ideal in self.all_ideals:
                self._mask_to_ideal[self.member_vector(ideal).tobytes()] = ideal
        try:
            return self._mask_to_ideal[mask.tobytes()]
        except KeyError:
            raise ContractViolation("element mask is not an ideal of the universe") from None


def _multiplicative_closure(seed: list[RingElement]) -> list[RingElement] | None:
    """Closure under products; None as soon as 0 appears."""
    members = {x.sort_key(): x for x in seed}
    frontier = list(members.values())
    while frontier:
        fresh = []
        current = list(members.values())
        for a in frontier:
            for b in current:
                c = a * b
                if c.is_zero():
                    return None
                k = c.sort_key()
                if k not in members:
                    members[k] = c
                    fresh.append(c)
        frontier = fresh
    return sorted(members.values(), key=lambda e: e.sort_key())


def _one_generated_sets(ring: RingDescriptor, elements) -> list[ExplicitFinite]:
    one = ring.one()
    seen = {}
    for x in elements:
        if x.is_zero():
            continue
        closure = _multiplicative_closure([one, x])
        if closure is None:
            continue
        key = tuple(e.sort_key() for e in closure)
        if key not in seen:
            seen[key] = ExplicitFinite(ring, tuple(closure))
    return [seen[k] for k in sorted(seen, key=lambda t: (len(t), t))]


def _all_closed_subsets(ring: RingDescriptor, elements) -> list[ExplicitFinite]:
    one = ring.one()
    root = _multiplicative_closure([one])
    found = {tuple(e.sort_key() for e in root): root}
    queue = [root]
    while queue:
        base = queue.pop()
        base_keys = {e.sort_key() for e in base}
        for x in elements:
            if x.is_zero() or x.sort_key() in base_keys:
                continue
            extended = _multiplicative_closure(base + [x])
            if extended is None:
                continue
            key = tuple(e.sort_key() for e in extended)
            if key not in found:
                found[key] = extended
                queue.append(extended)
    return [
        ExplicitFinite(ring, tuple(found[k]))
        for k in sorted(found, key=lambda t: (len(t), t))
    ]


def build_universe(ring: RingDescriptor, mult_set_policy: str = "generated-by-one-element") -> FiniteUniverse:
    """Fully enumerate a finite ring: elements, ideals, and candidate
    multiplicative sets per policy."""
    if not isinstance(ring, (ModularIntegers, FiniteProduct)):
        raise PreconditionError("universes are built over Z/n or finite products only")
    n = ring.size()
    if n > ORACLE_CAP:
        raise CapacityError(f"ring with {n} elements exceeds the {ORACLE_CAP} cap")
    elements = list(ring.elements())
    if isinstance(ring, ModularIntegers):
        ideals = [Ideal(ring, d) for d in _intmath.divisors(ring.modulus)]
    else:
        ideals = [
            Ideal(ring, tup)
            for tup in itertools.product(*(_intmath.divisors(m) for m in ring.moduli))
        ]
    ideals.sort(key=Ideal.sort_key)
    if mult_set_policy == "generated-by-one-element":
        sets = _one_generated_sets(ring, elements)
    elif mult_set_policy == "unit-group":
        units = tuple(x for x in elements if x.is_unit())
        sets = [ExplicitFinite(ring, units)]
    elif mult_set_policy == "all-closed-subsets":
        if n > CLOSED_SUBSET_CAP:
            raise CapacityError(
                f"closed-subset enumeration is capped at {CLOSED_SUBSET_CAP} elements, got {n}"
            )
        sets = _all_closed_subsets(ring, elements)
    else:
        raise PreconditionError(f"unknown multiplicative set policy {mult_set_policy!r}")
    return FiniteUniverse(ring, elements, ideals, sets)


def merge_candidate_sets(universe: FiniteUniverse, extra: FiniteUniverse) -> FiniteUniverse:
    """Union the candidate multiplicative sets of two universes over one ring."""
    if universe.ring != extra.ring:
        raise PreconditionError("universes over different rings")
    seen = {universe.mult_set_key(s): s for s in universe.candidate_mult_sets}
    for s in extra.candidate_mult_sets:
        seen.setdefault(universe.mult_set_key(s), s)
    merged = [seen[k] for k in sorted(seen, key=lambda t: (len(t), t))]
    return FiniteUniverse(universe.ring, universe.all_elements, universe.all_ideals, merged)


# ---------------------------------------------------------------------------
# definition-literal predicates


def _brute_pair_condition(
    universe: FiniteUniverse, q: Ideal, mult_set: MultiplicativeSet, to_radical: bool
) -> bool:
    in_q = universe.member_vector(q)
    members = universe.mult_set_indices(mult_set)
    if in_q[members].any():
        return False
    mul = universe.mul_table()
    premise = in_q[mul]
    target = universe.member_vector(radical(q)) if to_radical else in_q
    seen = set()
    for s in members:
        row_a = in_q[mul[s]]
        row_b = target[mul[s]]
        key = (row_a.tobytes(), row_b.tobytes())
        if key in seen:
            continue
        seen.add(key)
        if not (premise & ~row_a[:, None] & ~row_b[None, :]).any():
            return True
    return False


def brute_is_s_prime(universe: FiniteUniverse, q: Ideal, mult_set: MultiplicativeSet) -> bool:
    """∃s ∈ S: ∀(a,b): ab ∈ Q ⇒ sa ∈ Q ∨ sb ∈ Q, plus Q ∩ S = ∅, by full scan."""
    return _brute_pair_condition(universe, q, mult_set, to_radical=False)


def brute_is_s_primary(universe: FiniteUniverse, q: Ideal, mult_set: MultiplicativeSet) -> bool:
    """∃s ∈ S: ∀(a,b): ab ∈ Q ⇒ sa ∈ Q ∨ sb ∈ rad(Q), plus Q ∩ S = ∅."""
    return _brute_pair_condition(universe, q, mult_set, to_radical=True)


def brute_is_s_irreducible(universe: FiniteUniverse, q: Ideal, mult_set: MultiplicativeSet) -> bool:
    """Literal scan of all ideal pairs: whenever s(I∩J) ⊆ Q ⊆ I∩J for some
    s ∈ S, some s' must push ss'I or ss'J into Q.  No disjointness clause."""
    in_q = universe.member_vector(q)
    mul = universe.mul_table()
    members = universe.mult_set_indices(mult_set)
    covers: dict = {}

    def cover_of(x: Ideal) -> np.ndarray:
        if x.data not in covers:
            idxs = np.flatnonzero(universe.member_vector(x))
            covers[x.data] = in_q[mul[:, idxs]].all(axis=1)
        return covers[x.data]

    ideals = universe.all_ideals
    for i, left in enumerate(ideals):
        for right in ideals[i:]:
            meet = ideal_intersection(left, right)
            if not meet.contains_ideal(q):
                continue
            meet_idx = np.flatnonzero(universe.member_vector(meet))
            both = cover_of(left) | cover_of(right)
            for s in members:
                if not in_q[mul[s, meet_idx]].all():
                    continue
                if not both[mul[s, members]].any():
                    return False
    return True


def brute_saturation(universe: FiniteUniverse, ideal: Ideal, mult_set: MultiplicativeSet) -> Ideal:
    """{a : sa ∈ I for some s ∈ S} read off the multiplication table."""
    in_i = universe.member_vector(ideal)
    mul = universe.mul_table()
    members = universe.mult_set_indices(mult_set)
    mask = in_i[mul[members, :]].any(axis=0)
    return universe.ideal_from_mask(mask)


def brute_colon_by_element(universe: FiniteUniverse, ideal: Ideal, x: RingElement) -> Ideal:
    in_i = universe.member_vector(ideal)
    mul = universe.mul_table()
    mask = in_i[mul[:, universe.element_index(x)]]
    return universe.ideal_from_mask(mask)


def _is_disjoint(universe: FiniteUniverse, ideal: Ideal, mult_set: MultiplicativeSet) -> bool:
    return not universe.member_vector(ideal)[universe.mult_set_indices(mult_set)].any()


# ---------------------------------------------------------------------------
# decomposition enumeration


def enumerate_minimal_decompositions(
    universe: FiniteUniverse, ideal: Ideal, mult_set: MultiplicativeSet
) -> list[tuple[Ideal, ...]]:
    """Every minimal S-primary decomposition of the ideal, by exhausting
    subsets of the brute-certified S-primary overideals with at most one
    component per saturated-radical class."""
    ring = universe.ring
    pool = [
        q
        for q in universe.all_ideals
        if q.is_proper() and q.contains_ideal(ideal) and brute_is_s_primary(universe, q, mult_set)
    ]
    classes: dict = {}
    for q in pool:
        key = brute_saturation(universe, radical(q), mult_set).sort_key()
        classes.setdefault(key, []).append(q)
    sat_cache = {q.data: brute_saturation(universe, q, mult_set) for q in pool}
    out = []
    choices = [[None] + members for _, members in sorted(classes.items())]
    for pick in itertools.product(*choices):
        chosen = [q for q in pick if q is not None]
        if not chosen:
            continue
        if intersect_all(chosen, ring) != ideal:
            continue
        sats = [sat_cache[q.data] for q in chosen]
        redundant = False
        for i, sat in enumerate(sats):
            rest = [s for j, s in enumerate(sats) if j != i]
            if sat.contains_ideal(intersect_all(rest, ring)):
                redundant = True
                break
        if redundant:
            continue
        out.append(tuple(sorted(chosen, key=Ideal.sort_key)))
    out.sort(key=lambda dec: tuple(q.sort_key() for q in dec))
    return out


def brute_isolated_intersection(
    universe: FiniteUniverse, components: tuple[Ideal, ...], mult_set: MultiplicativeSet
) -> Ideal:
    """Intersection of the isolated components: P_i isolated when no sP_j
    lands inside P_i for j ≠ i, checked elementwise."""
    mul = universe.mul_table()
    members = universe.mult_set_indices(mult_set)
    radicals = [radical(q) for q in components]
    masks = [universe.member_vector(p) for p in radicals]
    idxs = [np.flatnonzero(m) for m in masks]
    isolated = []
    for i, q in enumerate(components):
        absorbed = False
        for j in range(len(components)):
            if j == i:
                continue
            for s in members:
                if masks[i][mul[s, idxs[j]]].all():
                    absorbed = True
                    break
            if absorbed:
                break
        if not absorbed:
            isolated.append(q)
    return intersect_all(isolated, universe.ring)


# ---------------------------------------------------------------------------
# theorem sweeps


SWEEP_TAGS = (
    "fast-agreement",
    "irreducible-implies-primary",
    "existence",
    "first-uniqueness",
    "second-uniqueness",
    "minimal-primes",
    "same-radical-intersection",
    "meeting-ideal-crossing",
    "prime-covers-component",
)

TAG_ALIASES = {"sp": "irreducible-implies-primary"}


@dataclass(frozen=True)
class SweepReport:
    universe: str
    theorem: str
    instances: int
    counterexamples: tuple
    elapsed: float
    seed: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": 1,
                "universe": self.universe,
                "theorem": self.theorem,
                "instances": self.instances,
                "counterexamples": list(self.counterexamples),
                "elapsed": self.elapsed,
                "seed": self.seed,
            }
        )

    def canonical_json(self) -> str:
        """Byte-stable form: elapsed is wall-clock noise, so it is zeroed."""
        stripped = SweepReport(self.universe, self.theorem, self.instances,
                               self.counterexamples, 0.0, self.seed)
        return stripped.to_json()


def _note(q: Ideal, mult_set: MultiplicativeSet, detail: str) -> str:
    return f"ideal {q}, S = {mult_set.describe()}: {detail}"


def _sweep_fast_agreement(universe, record):
    from .classify import is_s_irreducible, is_s_prime, is_s_primary

    for mult_set in universe.candidate_mult_sets:
        for q in universe.all_ideals:
            checks = [
                ("s-prime", brute_is_s_prime(universe, q, mult_set), is_s_prime(q, mult_set)[0]),
                ("s-primary", brute_is_s_primary(universe, q, mult_set), is_s_primary(q, mult_set)[0]),
            ]
            if q.is_proper():
                checks.append(
                    (
                        "s-irreducible",
                        brute_is_s_irreducible(universe, q, mult_set),
                        is_s_irreducible(q, mult_set)[0],
                    )
                )
            for label, brute, fast in checks:
                record(
                    brute == fast,
                    lambda: _note(q, mult_set, f"{label}: brute says {brute}, fast says {fast}"),
                )


def _sweep_irreducible_implies_primary(universe, record):
    for mult_set in universe.candidate_mult_sets:
        for q in universe.all_ideals:
            if not q.is_proper():
                continue
            if not _is_disjoint(universe, q, mult_set):
                continue
            if not brute_is_s_irreducible(universe, q, mult_set):
                continue
            record(
                brute_is_s_primary(universe, q, mult_set),
                lambda: _note(q, mult_set, "S-irreducible but not S-primary"),
            )


def _sweep_existence(universe, record):
    for mult_set in universe.candidate_mult_sets:
        for ideal in universe.all_ideals:
            if not ideal.is_proper() or not _is_disjoint(universe, ideal, mult_set):
                continue
            try:
                dec = s_primary_decomposition(ideal, mult_set)
                again = minimalize(dec)
                ok = (
                    all(brute_is_s_primary(universe, c.component, mult_set) for c in dec.components)
                    and intersect_all(dec.component_ideals(), universe.ring) == ideal
                    and is_minimal_decomposition(again)
                    and again.component_ideals() == dec.component_ideals()
                )
                record(ok, lambda: _note(ideal, mult_set, "existence pipeline mismatch"))
            except Exception as exc:  # noqa: BLE001 - a sweep reports, it does not crash
                message = f"{type(exc).__name__}: {exc}"
                record(False, lambda: _note(ideal, mult_set, message))


def _sweep_first_uniqueness(universe, record):
    for mult_set in universe.candidate_mult_sets:
        for ideal in universe.all_ideals:
            if not ideal.is_proper() or not _is_disjoint(universe, ideal, mult_set):
                continue
            decs = enumerate_minimal_decompositions(universe, ideal, mult_set)
            if not decs:
                record(False, lambda: _note(ideal, mult_set, "no minimal decomposition found"))
                continue
            assoc_sets = [
                frozenset(
                    brute_saturation(universe, radical(q), mult_set).sort_key() for q in dec
                )
                for dec in decs
            ]
            colon_primes = set()
            for x in universe.all_elements:
                value = brute_saturation(
                    universe, radical(brute_colon_by_element(universe, ideal, x)), mult_set
                )
                if value.is_proper() and is_prime_ideal(value):
                    colon_primes.add(value.sort_key())
            ok = all(s == assoc_sets[0] for s in assoc_sets) and assoc_sets[0] == colon_primes
            record(ok, lambda: _note(ideal, mult_set, "associated S-prime sets disagree"))


def _sweep_second_uniqueness(universe, record):
    for mult_set in universe.candidate_mult_sets:
        for ideal in universe.all_ideals:
            if not ideal.is_proper() or not _is_disjoint(universe, ideal, mult_set):
                continue
            decs = enumerate_minimal_decompositions(universe, ideal, mult_set)
            if len(decs) < 2:
                continue
            values = {
                brute_isolated_intersection(universe, dec, mult_set).sort_key() for dec in decs
            }
            record(
                len(values) == 1,
                lambda: _note(ideal, mult_set, "isolated intersections differ across decompositions"),
            )


def _sweep_minimal_primes(universe, record):
    zero = Ideal.zero_ideal(universe.ring)
    for mult_set in universe.candidate_mult_sets:
        try:
            report = theorem_min_check(s_primary_decomposition(zero, mult_set))
            record(
                report.conclusion_holds in (True, None),
                lambda: _note(zero, mult_set, "minimal prime escaped the decomposition radicals"),
            )
        except Exception as exc:  # noqa: BLE001
            message = f"{type(exc).__name__}: {exc}"
            record(False, lambda: _note(zero, mult_set, message))


def _sweep_same_radical_intersection(universe, record):
    for mult_set in universe.candidate_mult_sets:
        pool = [
            q
            for q in universe.all_ideals
            if q.is_proper() and brute_is_s_primary(universe, q, mult_set)
        ]
        classes: dict = {}
        for q in pool:
            key = brute_saturation(universe, radical(q), mult_set).sort_key()
            classes.setdefault(key, []).append(q)
        for _, members in sorted(classes.items()):
            for a, b in itertools.combinations(members, 2):
                crossed = ideal_intersection(a, b)
                record(
                    brute_is_s_primary(universe, crossed, mult_set),
                    lambda: _note(crossed, mult_set, f"{a} ∩ {b} lost S-primariness"),
                )


def _sweep_meeting_ideal_crossing(universe, record):
    for mult_set in universe.candidate_mult_sets:
        for q in universe.all_ideals:
            if not q.is_proper() or not is_primary_ideal(q):
                continue
            if not _is_disjoint(universe, q, mult_set):
                continue
            for j in universe.all_ideals:
                if _is_disjoint(universe, j, mult_set):
                    continue
                crossed = ideal_intersection(q, j)
                ok = brute_is_s_primary(universe, crossed, mult_set) and radical(
                    crossed
                ) == ideal_intersection(radical(q), radical(j))
                record(ok, lambda: _note(crossed, mult_set, f"crossing {q} with {j} failed"))


def _sweep_prime_covers_component(universe, record):
    mul = universe.mul_table()
    for mult_set in universe.candidate_mult_sets:
        for ideal in universe.all_ideals:
            if not ideal.is_proper() or not _is_disjoint(universe, ideal, mult_set):
                continue
            parts = s_primary_decomposition(ideal, mult_set).component_ideals()
            for p in universe.all_ideals:
                if not p.contains_ideal(ideal):
                    continue
                if not brute_is_s_prime(universe, p, mult_set):
                    continue
                try:
                    k, certificate = covers_some_component(p, parts, mult_set)
                    in_p = universe.member_vector(p)
                    s_idx = universe.element_index(certificate.witness)
                    part_idx = np.flatnonzero(universe.member_vector(parts[k]))
                    record(
                        bool(in_p[mul[s_idx, part_idx]].all()),
                        lambda: _note(p, mult_set, f"witness fails to push component {k} inside"),
                    )
                except Exception as exc:  # noqa: BLE001
                    message = f"{type(exc).__name__}: {exc}"
                    record(False, lambda: _note(p, mult_set, message))


_SWEEPERS = {
    "fast-agreement": _sweep_fast_agreement,
    "irreducible-implies-primary": _sweep_irreducible_implies_primary,
    "existence": _sweep_existence,
    "first-uniqueness": _sweep_first_uniqueness,
    "second-uniqueness": _sweep_second_uniqueness,
    "minimal-primes": _sweep_minimal_primes,
    "same-radical-intersection": _sweep_same_radical_intersection,
    "meeting-ideal-crossing": _sweep_meeting_ideal_crossing,
    "prime-covers-component": _sweep_prime_covers_component,
}


def sweep(universe: FiniteUniverse, theorem: str, seed: int = 0) -> SweepReport:
    """Evaluate one theorem over every (ideal, multiplicative set) pair of
    the universe; the enumeration order is canonical, so identical inputs
    give identical reports."""
    tag = TAG_ALIASES.get(theorem, theorem)
    if tag not in _SWEEPERS:
        raise PreconditionError(f"unknown theorem tag {theorem!r}; expected one of {SWEEP_TAGS}")
    start = time.perf_counter()
    instances = 0
    counterexamples: list[str] = []

    def record(ok: bool, describe):
        nonlocal instances
        instances += 1
        if not ok:
            counterexamples.append(describe())

    _SWEEPERS[tag](universe, record)
    elapsed = time.perf_counter() - start
    return SweepReport(str(universe.ring), tag, instances, tuple(counterexamples), elapsed, seed)
