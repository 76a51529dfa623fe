"""Named worked examples, replayable from the CLI and the test suite.

Each fixture states its expected facts as plain strings and booleans, runs
the real pipeline, and reports expected vs computed.  The Boolean fixtures
additionally cross-check the fast classification against the brute-force
oracle on the fully enumerated ring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import classify
from .multiplicative_sets import ComplementOfPrimes, ExplicitFinite, UnitsOnly, saturate
from .oracle import build_universe, brute_is_s_primary
from .ring_core import FiniteProduct, Ideal, Integers


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    expected: dict
    computed: dict


def _fixture_6z() -> tuple[dict, dict]:
    ring = Integers()
    ideal = Ideal.principal(ring.element(6))
    outside_3 = ComplementOfPrimes(ring, (ring.element(3),))
    report = classify(ideal, outside_3)
    sat, cert = saturate(outside_3, ideal)
    units_view = classify(ideal, UnitsOnly(ring))
    cx = units_view.s_irreducible_counterexample
    expected = {
        "s_irreducible": True,
        "irreducible": False,
        "saturation": "(3)",
        "stabilizer": "2",
        "units_counterexample": ["(2)", "(3)", "1"],
    }
    computed = {
        "s_irreducible": report.flags["s_irreducible"],
        "irreducible": report.flags["irreducible"],
        "saturation": str(sat),
        "stabilizer": str(cert.witness),
        "units_counterexample": [str(cx[0]), str(cx[1]), str(cx[2])] if cx else None,
    }
    return expected, computed


def _fixture_4z() -> tuple[dict, dict]:
    ring = Integers()
    ideal = Ideal.principal(ring.element(4))
    outside_2 = ComplementOfPrimes(ring, (ring.element(2),))
    report = classify(ideal, outside_2)
    expected = {"s_primary": True, "s_prime": False, "primary": True, "prime": False}
    computed = {
        "s_primary": report.flags["s_primary"],
        "s_prime": report.flags["s_prime"],
        "primary": report.flags["primary"],
        "prime": report.flags["prime"],
    }
    return expected, computed


def _fixture_boolean(k: int) -> tuple[dict, dict]:
    ring = FiniteProduct((2,) * k)
    zero = Ideal.zero_ideal(ring)
    first_unit_vector = ring.element((1,) + (0,) * (k - 1))
    mult_set = ExplicitFinite(ring, (ring.one(), first_unit_vector))
    report = classify(zero, mult_set)
    universe = build_universe(ring)
    expected = {
        "s_primary": True,
        "witness": str(first_unit_vector),
        "oracle_agrees": True,
    }
    computed = {
        "s_primary": report.flags["s_primary"],
        "witness": str(report.witnesses["s_primary"].witness) if report.witnesses["s_primary"] else None,
        "oracle_agrees": brute_is_s_primary(universe, zero, mult_set) == report.flags["s_primary"],
    }
    return expected, computed


_RUNNERS = {
    "6Z-s-irreducible": _fixture_6z,
    "4Z-s-primary-not-s-prime": _fixture_4z,
    "boolean-zero-s-primary-k2": lambda: _fixture_boolean(2),
    "boolean-zero-s-primary-k3": lambda: _fixture_boolean(3),
    "boolean-zero-s-primary-k4": lambda: _fixture_boolean(4),
    "boolean-zero-s-primary-k6": lambda: _fixture_boolean(6),
}

FIXTURE_NAMES = tuple(_RUNNERS)


def run_fixture(name: str) -> FixtureResult:
    expected, computed = _RUNNERS[name]()
    return FixtureResult(name, expected == computed, expected, computed)


def run_all() -> tuple[FixtureResult, ...]:
    return tuple(run_fixture(name) for name in FIXTURE_NAMES)
