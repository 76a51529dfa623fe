"""JSON envelopes for every report type, with exact round-tripping.

Ring-derived integers are rendered as decimal strings so arbitrarily large
witnesses survive any JSON reader untouched; structural counts stay plain
numbers.  Key order is fixed by construction.  parse_report(to_json(x))
rebuilds an equal object for each supported type.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .classify import ClassificationReport
from .decompose import (
    Decomposition,
    DecompositionComponent,
    FirstUniquenessReport,
    TheoremMinReport,
)
from .errors import DomainError
from .multiplicative_sets import (
    ComplementOfPrimes,
    ExplicitFinite,
    GeneratedBy,
    MultiplicativeSet,
    UnitsOnly,
    WitnessCertificate,
)
from .oracle import SweepReport
from .parsing import parse_element, parse_ring
from .ring_core import (
    FiniteProduct,
    Ideal,
    PolynomialsOverPrimeField,
    RingDescriptor,
    RingElement,
)

SCHEMA = 1


@dataclass(frozen=True)
class SaturationReport:
    ideal: Ideal
    mult_set: MultiplicativeSet
    saturation: Ideal
    witness: WitnessCertificate


@dataclass(frozen=True)
class ReportBundle:
    decomposition: Decomposition
    associated: tuple[Ideal, ...]
    isolated: tuple[int, ...]
    first_uniqueness: FirstUniquenessReport | None
    theorem_min: TheoremMinReport | None


# ---------------------------------------------------------------------------
# value codecs


def element_to_payload(x: RingElement):
    ring = x.ring
    if isinstance(ring, PolynomialsOverPrimeField):
        return str(x)
    if isinstance(ring, FiniteProduct):
        return [str(c) for c in x.value]
    return str(x.value)


def element_from_payload(ring: RingDescriptor, payload) -> RingElement:
    if isinstance(ring, FiniteProduct):
        return ring.element(tuple(int(c) for c in payload))
    if isinstance(ring, PolynomialsOverPrimeField):
        return parse_element(payload, ring)
    return ring.element(int(payload))


def ideal_to_payload(ideal: Ideal):
    return element_to_payload(ideal.generator_element())


def ideal_from_payload(ring: RingDescriptor, payload) -> Ideal:
    return Ideal.principal(element_from_payload(ring, payload))


def mult_set_to_payload(mult_set: MultiplicativeSet) -> dict:
    if isinstance(mult_set, UnitsOnly):
        return {"kind": "units"}
    if isinstance(mult_set, ComplementOfPrimes):
        return {"kind": "complement", "primes": [element_to_payload(p) for p in mult_set.primes]}
    if isinstance(mult_set, GeneratedBy):
        return {"kind": "gen", "generators": [element_to_payload(g) for g in mult_set.generators]}
    if isinstance(mult_set, ExplicitFinite):
        return {"kind": "set", "members": [element_to_payload(m) for m in mult_set.members]}
    raise DomainError(f"unserializable multiplicative set {mult_set!r}")


def mult_set_from_payload(ring: RingDescriptor, payload: dict) -> MultiplicativeSet:
    kind = payload["kind"]
    if kind == "units":
        return UnitsOnly(ring)
    if kind == "complement":
        return ComplementOfPrimes(ring, tuple(element_from_payload(ring, p) for p in payload["primes"]))
    if kind == "gen":
        return GeneratedBy(ring, tuple(element_from_payload(ring, g) for g in payload["generators"]))
    if kind == "set":
        return ExplicitFinite(ring, tuple(element_from_payload(ring, m) for m in payload["members"]))
    raise DomainError(f"unknown multiplicative set kind {kind!r}")


def certificate_to_payload(cert: WitnessCertificate) -> dict:
    return {
        "witness": element_to_payload(cert.witness),
        "kind": cert.kind,
        "provenance": [element_to_payload(f) for f in cert.provenance],
    }


def certificate_from_payload(ring: RingDescriptor, payload: dict) -> WitnessCertificate:
    return WitnessCertificate(
        element_from_payload(ring, payload["witness"]),
        payload["kind"],
        tuple(element_from_payload(ring, f) for f in payload["provenance"]),
    )


# ---------------------------------------------------------------------------
# report codecs


def saturation_to_dict(report: SaturationReport) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "saturation",
        "ring": str(report.ideal.ring),
        "ideal": ideal_to_payload(report.ideal),
        "mult_set": mult_set_to_payload(report.mult_set),
        "saturation": ideal_to_payload(report.saturation),
        "witness": certificate_to_payload(report.witness),
    }


def saturation_from_dict(d: dict) -> SaturationReport:
    ring = parse_ring(d["ring"])
    return SaturationReport(
        ideal_from_payload(ring, d["ideal"]),
        mult_set_from_payload(ring, d["mult_set"]),
        ideal_from_payload(ring, d["saturation"]),
        certificate_from_payload(ring, d["witness"]),
    )


def classification_to_dict(report: ClassificationReport) -> dict:
    counterexample = None
    if report.s_irreducible_counterexample is not None:
        left, right, premise = report.s_irreducible_counterexample
        counterexample = {
            "left": ideal_to_payload(left),
            "right": ideal_to_payload(right),
            "premise_witness": element_to_payload(premise),
        }
    return {
        "schema": SCHEMA,
        "kind": "classification",
        "ring": str(report.ideal.ring),
        "ideal": ideal_to_payload(report.ideal),
        "mult_set": mult_set_to_payload(report.mult_set),
        "flags": dict(report.flags),
        "witnesses": {
            name: certificate_to_payload(cert) if cert is not None else None
            for name, cert in report.witnesses.items()
        },
        "radical": ideal_to_payload(report.radical),
        "saturation": ideal_to_payload(report.saturation),
        "s_irreducible_counterexample": counterexample,
    }


def classification_from_dict(d: dict) -> ClassificationReport:
    ring = parse_ring(d["ring"])
    counterexample = None
    if d["s_irreducible_counterexample"] is not None:
        c = d["s_irreducible_counterexample"]
        counterexample = (
            ideal_from_payload(ring, c["left"]),
            ideal_from_payload(ring, c["right"]),
            element_from_payload(ring, c["premise_witness"]),
        )
    return ClassificationReport(
        ideal_from_payload(ring, d["ideal"]),
        mult_set_from_payload(ring, d["mult_set"]),
        dict(d["flags"]),
        {
            name: certificate_from_payload(ring, cert) if cert is not None else None
            for name, cert in d["witnesses"].items()
        },
        ideal_from_payload(ring, d["radical"]),
        ideal_from_payload(ring, d["saturation"]),
        counterexample,
    )


def _component_to_dict(c: DecompositionComponent) -> dict:
    return {
        "component": ideal_to_payload(c.component),
        "radical": ideal_to_payload(c.radical),
        "saturation_of_component": ideal_to_payload(c.saturation_of_component),
        "saturation_of_radical": ideal_to_payload(c.saturation_of_radical),
        "witness": certificate_to_payload(c.witness),
    }


def _component_from_dict(ring: RingDescriptor, d: dict) -> DecompositionComponent:
    return DecompositionComponent(
        ideal_from_payload(ring, d["component"]),
        ideal_from_payload(ring, d["radical"]),
        ideal_from_payload(ring, d["saturation_of_component"]),
        ideal_from_payload(ring, d["saturation_of_radical"]),
        certificate_from_payload(ring, d["witness"]),
    )


def decomposition_to_dict(dec: Decomposition) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "decomposition",
        "ring": str(dec.ideal.ring),
        "ideal": ideal_to_payload(dec.ideal),
        "mult_set": mult_set_to_payload(dec.mult_set),
        "components": [_component_to_dict(c) for c in dec.components],
        "minimal": dec.minimal,
        "assembly_witness": certificate_to_payload(dec.assembly_witness),
    }


def decomposition_from_dict(d: dict) -> Decomposition:
    ring = parse_ring(d["ring"])
    return Decomposition(
        ideal_from_payload(ring, d["ideal"]),
        mult_set_from_payload(ring, d["mult_set"]),
        tuple(_component_from_dict(ring, c) for c in d["components"]),
        d["minimal"],
        certificate_from_payload(ring, d["assembly_witness"]),
    )


def first_uniqueness_to_dict(report: FirstUniquenessReport) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "first-uniqueness",
        "ring": str(report.ideal.ring),
        "ideal": ideal_to_payload(report.ideal),
        "mult_set": mult_set_to_payload(report.mult_set),
        "associated": [ideal_to_payload(p) for p in report.associated],
        "computed": [ideal_to_payload(p) for p in report.computed],
        "prime_witnesses": [
            {"prime": ideal_to_payload(p), "x": element_to_payload(x)}
            for p, x in report.prime_witnesses
        ],
    }


def first_uniqueness_from_dict(d: dict) -> FirstUniquenessReport:
    ring = parse_ring(d["ring"])
    return FirstUniquenessReport(
        ideal_from_payload(ring, d["ideal"]),
        mult_set_from_payload(ring, d["mult_set"]),
        tuple(ideal_from_payload(ring, p) for p in d["associated"]),
        tuple(ideal_from_payload(ring, p) for p in d["computed"]),
        tuple(
            (ideal_from_payload(ring, w["prime"]), element_from_payload(ring, w["x"]))
            for w in d["prime_witnesses"]
        ),
    )


def theorem_min_to_dict(report: TheoremMinReport) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "minimal-primes",
        "ring": str(report.ideal.ring),
        "ideal": ideal_to_payload(report.ideal),
        "mult_set": mult_set_to_payload(report.mult_set),
        "hypothesis_holds": report.hypothesis_holds,
        "condition_failures": [
            {"index": i, "s": element_to_payload(s), "x": element_to_payload(x)}
            for i, s, x in report.condition_failures
        ],
        "minimal_primes": [ideal_to_payload(p) for p in report.minimal_primes],
        "decomposition_radicals": [ideal_to_payload(p) for p in report.decomposition_radicals],
        "conclusion_holds": report.conclusion_holds,
    }


def theorem_min_from_dict(d: dict) -> TheoremMinReport:
    ring = parse_ring(d["ring"])
    return TheoremMinReport(
        ideal_from_payload(ring, d["ideal"]),
        mult_set_from_payload(ring, d["mult_set"]),
        d["hypothesis_holds"],
        tuple(
            (f["index"], element_from_payload(ring, f["s"]), element_from_payload(ring, f["x"]))
            for f in d["condition_failures"]
        ),
        tuple(ideal_from_payload(ring, p) for p in d["minimal_primes"]),
        tuple(ideal_from_payload(ring, p) for p in d["decomposition_radicals"]),
        d["conclusion_holds"],
    )


def sweep_to_dict(report: SweepReport) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "sweep",
        "universe": report.universe,
        "theorem": report.theorem,
        "instances": report.instances,
        "counterexamples": list(report.counterexamples),
        "elapsed": report.elapsed,
        "seed": report.seed,
    }


def sweep_from_dict(d: dict) -> SweepReport:
    return SweepReport(
        d["universe"], d["theorem"], d["instances"], tuple(d["counterexamples"]),
        d["elapsed"], d["seed"],
    )


def bundle_to_dict(bundle: ReportBundle) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "report",
        "decomposition": decomposition_to_dict(bundle.decomposition),
        "associated": [ideal_to_payload(p) for p in bundle.associated],
        "isolated": list(bundle.isolated),
        "first_uniqueness": (
            first_uniqueness_to_dict(bundle.first_uniqueness)
            if bundle.first_uniqueness is not None
            else None
        ),
        "theorem_min": (
            theorem_min_to_dict(bundle.theorem_min) if bundle.theorem_min is not None else None
        ),
    }


def bundle_from_dict(d: dict) -> ReportBundle:
    dec = decomposition_from_dict(d["decomposition"])
    ring = dec.ideal.ring
    return ReportBundle(
        dec,
        tuple(ideal_from_payload(ring, p) for p in d["associated"]),
        tuple(d["isolated"]),
        first_uniqueness_from_dict(d["first_uniqueness"]) if d["first_uniqueness"] else None,
        theorem_min_from_dict(d["theorem_min"]) if d["theorem_min"] else None,
    )


_TO_DICT = {
    SaturationReport: saturation_to_dict,
    ClassificationReport: classification_to_dict,
    Decomposition: decomposition_to_dict,
    FirstUniquenessReport: first_uniqueness_to_dict,
    TheoremMinReport: theorem_min_to_dict,
    SweepReport: sweep_to_dict,
    ReportBundle: bundle_to_dict,
}

_FROM_DICT = {
    "saturation": saturation_from_dict,
    "classification": classification_from_dict,
    "decomposition": decomposition_from_dict,
    "first-uniqueness": first_uniqueness_from_dict,
    "minimal-primes": theorem_min_from_dict,
    "sweep": sweep_from_dict,
    "report": bundle_from_dict,
}


def to_json(report, indent: int | None = None) -> str:
    encoder = _TO_DICT.get(type(report))
    if encoder is None:
        raise DomainError(f"no JSON encoding for {type(report).__name__}")
    return json.dumps(encoder(report), indent=indent)


def parse_report(text: str):
    d = json.loads(text)
    if d.get("schema") != SCHEMA:
        raise DomainError(f"unsupported schema {d.get('schema')!r}")
    decoder = _FROM_DICT.get(d.get("kind"))
    if decoder is None:
        raise DomainError(f"unknown report kind {d.get('kind')!r}")
    return decoder(d)
