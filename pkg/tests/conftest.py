"""Shared fixtures: universe banks and the end-of-run contract audit.

The full bank (Z/n for n up to 200 plus every product ring of size up to 64)
is expensive, so it is built once per session and only when a test asks for
it.  The small bank is the handful of rings where multiple minimal
decompositions actually occur; uniqueness tests live there.
"""

import time

import pytest
from hypothesis import settings

from sideal.ring_core import FiniteProduct, ModularIntegers
from sideal.oracle import build_universe, merge_candidate_sets

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

CLOSED_SUBSET_LIMIT = 16


def product_moduli(cap):
    """Nondecreasing factor tuples with at least two factors and product <= cap.

    Reordered factors give isomorphic rings, so only the sorted tuple ships.
    """
    out = []

    def rec(prefix, start, prod):
        for f in range(start, cap + 1):
            p = prod * f
            if p > cap:
                break
            if prefix:
                out.append(tuple(prefix + [f]))
            rec(prefix + [f], f, p)

    rec([], 2, 1)
    return [t for t in out if len(t) >= 2]


def build_with_policy(ring):
    u = build_universe(ring)
    if ring.size() <= CLOSED_SUBSET_LIMIT:
        u = merge_candidate_sets(u, build_universe(ring, mult_set_policy="all-closed-subsets"))
    return u


@pytest.fixture(scope="session")
def full_bank():
    """All acceptance universes plus the wall-clock seconds spent building them."""
    start = time.perf_counter()
    rings = [ModularIntegers(n) for n in range(2, 201)]
    rings += [FiniteProduct(t) for t in product_moduli(64)]
    universes = [build_with_policy(r) for r in rings]
    return universes, time.perf_counter() - start


SMALL_BANK_RINGS = (
    ModularIntegers(12),
    ModularIntegers(30),
    ModularIntegers(36),
    FiniteProduct((2, 2)),
    FiniteProduct((2, 6)),
    FiniteProduct((2, 2, 2)),
    FiniteProduct((4, 2, 2)),
    FiniteProduct((8, 2)),
    FiniteProduct((2, 2, 3)),
)


@pytest.fixture(scope="session")
def small_bank():
    return [build_with_policy(r) for r in SMALL_BANK_RINGS]


def pytest_sessionfinish(session, exitstatus):
    # every saturate and restrict call must have re-verified its contract
    from sideal.multiplicative_sets import saturation_audit
    from sideal.decompose import restriction_audit

    sat = saturation_audit()
    res = restriction_audit()
    if sat["calls"] != sat["verified"] or res["calls"] != res["verified"]:
        print(f"\ncontract audit failed: saturation {sat}, restriction {res}")
        session.exitstatus = 3
