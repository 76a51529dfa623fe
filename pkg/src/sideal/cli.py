"""Command-line front end.

Exit codes: 0 success, 1 domain error (bad mathematical input such as an
ideal meeting S), 2 parse error, 3 internal contract violation (oracle
disagreement, recomposition failure, fixture mismatch).

Output defaults to text; --output json (or the SIDEAL_OUTPUT environment
variable) switches to the versioned JSON envelopes from serialize.  The
enumeration caps are printed in every report.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .classify import ClassificationReport, classify
from .decompose import (
    Decomposition,
    assemble_decomposition,
    associated_s_primes,
    first_uniqueness_report,
    isolated_s_primes,
    minimalize,
    s_primary_decomposition,
    theorem_min_check,
)
from .errors import (
    CapacityError,
    ContractViolation,
    DisjointnessError,
    DomainError,
    ParseError,
    PreconditionError,
    UnsupportedEnumeration,
)
from .fixtures import run_all
from .multiplicative_sets import saturate
from .oracle import SWEEP_TAGS, TAG_ALIASES, build_universe, merge_candidate_sets, sweep
from .parsing import parse_ideal, parse_mult_set, parse_ring
from .serialize import (
    ReportBundle,
    SaturationReport,
    bundle_to_dict,
    classification_to_dict,
    decomposition_to_dict,
    saturation_to_dict,
    sweep_to_dict,
)

CLOSED_SUBSET_AUTO = 16


def _caps(args) -> dict:
    return {"max_elements": args.max_elements, "max_witness_degree": args.max_witness_degree}


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.output == "json":
        payload = dict(payload)
        payload["caps"] = _caps(args)
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)
        caps = _caps(args)
        print(f"caps: max-elements={caps['max_elements']} max-witness-degree={caps['max_witness_degree']}")


def _certificate_lines(label: str, cert) -> list[str]:
    if cert is None:
        return [f"{label}: none"]
    provenance = " * ".join(str(f) for f in cert.provenance)
    return [f"{label}: {cert.witness} [{cert.kind}] = {provenance}"]


def _classification_lines(report: ClassificationReport) -> list[str]:
    lines = [
        f"ring: {report.ideal.ring}",
        f"ideal: {report.ideal}",
        f"S: {report.mult_set.describe()}",
    ]
    for name, value in report.flags.items():
        rendered = "undecided" if value is None else str(value).lower()
        lines.append(f"{name}: {rendered}")
    for name, cert in report.witnesses.items():
        lines.extend(_certificate_lines(f"witness[{name}]", cert))
    lines.append(f"radical: {report.radical}")
    lines.append(f"saturation: {report.saturation}")
    if report.s_irreducible_counterexample is not None:
        left, right, premise = report.s_irreducible_counterexample
        lines.append(f"s_irreducible counterexample: I={left} J={right} s={premise}")
    return lines


def _decomposition_lines(dec: Decomposition) -> list[str]:
    lines = [
        f"ring: {dec.ideal.ring}",
        f"ideal: {dec.ideal}",
        f"S: {dec.mult_set.describe()}",
        f"minimal: {str(dec.minimal).lower()}",
    ]
    for i, c in enumerate(dec.components):
        lines.append(
            f"component {i}: {c.component}  radical {c.radical}  "
            f"S(Q) {c.saturation_of_component}  S(rad Q) {c.saturation_of_radical}  "
            f"witness {c.witness.witness}"
        )
    lines.extend(_certificate_lines("assembly witness", dec.assembly_witness))
    return lines


def _cmd_classify(args) -> int:
    ring = parse_ring(args.ring)
    report = classify(parse_ideal(args.ideal, ring), parse_mult_set(args.mult, ring))
    _emit(args, classification_to_dict(report), _classification_lines(report))
    return 0


def _cmd_saturate(args) -> int:
    ring = parse_ring(args.ring)
    ideal = parse_ideal(args.ideal, ring)
    mult_set = parse_mult_set(args.mult, ring)
    sat, cert = saturate(mult_set, ideal)
    report = SaturationReport(ideal, mult_set, sat, cert)
    lines = [
        f"ring: {ring}",
        f"ideal: {ideal}",
        f"S: {mult_set.describe()}",
        f"saturation: {sat}",
    ] + _certificate_lines("witness", cert)
    _emit(args, saturation_to_dict(report), lines)
    return 0


def _cmd_decompose(args) -> int:
    ring = parse_ring(args.ring)
    dec = s_primary_decomposition(parse_ideal(args.ideal, ring), parse_mult_set(args.mult, ring))
    _emit(args, decomposition_to_dict(dec), _decomposition_lines(dec))
    return 0


def _cmd_minimalize(args) -> int:
    ring = parse_ring(args.ring)
    mult_set = parse_mult_set(args.mult, ring)
    parts = [parse_ideal(text.strip(), ring) for text in args.components.split(";") if text.strip()]
    dec = minimalize(assemble_decomposition(mult_set, parts, strict=False))
    _emit(args, decomposition_to_dict(dec), _decomposition_lines(dec))
    return 0


def _cmd_report(args) -> int:
    ring = parse_ring(args.ring)
    ideal = parse_ideal(args.ideal, ring)
    mult_set = parse_mult_set(args.mult, ring)
    dec = s_primary_decomposition(ideal, mult_set)
    associated = associated_s_primes(dec)
    isolated = isolated_s_primes(dec)
    try:
        uniqueness = first_uniqueness_report(ideal, mult_set, dec)
    except (DomainError, UnsupportedEnumeration):
        uniqueness = None
    minimal_primes = theorem_min_check(dec) if ideal.is_zero() else None
    bundle = ReportBundle(dec, associated, isolated, uniqueness, minimal_primes)
    lines = _decomposition_lines(dec)
    lines.append("associated S-primes: " + ", ".join(str(p) for p in associated))
    lines.append("isolated component indices: " + (", ".join(str(i) for i in isolated) or "none"))
    if uniqueness is not None:
        pairs = ", ".join(f"{p} from x={x}" for p, x in uniqueness.prime_witnesses)
        lines.append(f"colon-derived S-primes: {pairs}")
    if minimal_primes is not None:
        lines.append(f"zero-divisor hypothesis: {str(minimal_primes.hypothesis_holds).lower()}")
        lines.append(
            "minimal primes: " + ", ".join(str(p) for p in minimal_primes.minimal_primes)
        )
        if minimal_primes.conclusion_holds is None:
            lines.append("minimal-prime containment: not asserted (hypothesis failed)")
        else:
            lines.append(f"minimal-prime containment: {str(minimal_primes.conclusion_holds).lower()}")
    _emit(args, bundle_to_dict(bundle), lines)
    return 0


def _cmd_oracle_verify(args) -> int:
    ring = parse_ring(args.ring)
    if not ring.is_finite():
        raise PreconditionError("oracle verification needs a finite ring")
    if ring.size() > args.max_elements:
        raise CapacityError(f"ring has {ring.size()} elements, over the cap {args.max_elements}")
    if args.policy == "auto":
        universe = build_universe(ring)
        if ring.size() <= CLOSED_SUBSET_AUTO:
            universe = merge_candidate_sets(universe, build_universe(ring, "all-closed-subsets"))
    else:
        universe = build_universe(ring, args.policy)
    tags = SWEEP_TAGS if args.theorem == "all" else (TAG_ALIASES.get(args.theorem, args.theorem),)
    failures = 0
    payloads = []
    lines = [f"ring: {ring}", f"candidate multiplicative sets: {len(universe.candidate_mult_sets)}"]
    for tag in tags:
        report = sweep(universe, tag, seed=args.seed)
        payloads.append(sweep_to_dict(report))
        lines.append(
            f"{tag}: {report.instances} instances, {len(report.counterexamples)} counterexamples"
            f" ({report.elapsed:.2f}s)"
        )
        for text in report.counterexamples[:5]:
            lines.append(f"  counterexample: {text}")
        failures += len(report.counterexamples)
    _emit(args, {"schema": 1, "kind": "sweep-batch", "reports": payloads}, lines)
    if failures:
        print(f"{failures} counterexample(s) found", file=sys.stderr)
        return 3
    return 0


def _cmd_paper_examples(args) -> int:
    results = run_all()
    payload = {
        "schema": 1,
        "kind": "fixtures",
        "results": [
            {"name": r.name, "passed": r.passed, "expected": r.expected, "computed": r.computed}
            for r in results
        ],
    }
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
        if not r.passed:
            lines.append(f"  expected: {r.expected}")
            lines.append(f"  computed: {r.computed}")
    _emit(args, payload, lines)
    if not all(r.passed for r in results):
        print("fixture mismatch", file=sys.stderr)
        return 3
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sideal",
        description="Saturations, classification, and S-primary decompositions of principal ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_ideal=True, needs_mult=True):
        p.add_argument("--ring", required=True, help="Z | Z/12 | GF(5)[x] | Z/2 x Z/2")
        if needs_ideal:
            p.add_argument("--ideal", required=True, help="(6) | (x^2+1) | (0,1,0)")
        if needs_mult:
            p.add_argument("--mult", required=True, help="units | complement(2,3) | gen(2) | set{...}")

    for name, handler, needs_ideal, needs_mult in (
        ("classify", _cmd_classify, True, True),
        ("saturate", _cmd_saturate, True, True),
        ("decompose", _cmd_decompose, True, True),
        ("report", _cmd_report, True, True),
    ):
        p = sub.add_parser(name)
        common(p, needs_ideal, needs_mult)
        p.set_defaults(handler=handler)

    p = sub.add_parser("minimalize")
    common(p, needs_ideal=False)
    p.add_argument("--components", required=True, help="semicolon-separated ideals: (4);(9);(36)")
    p.set_defaults(handler=_cmd_minimalize)

    p = sub.add_parser("oracle-verify")
    p.add_argument("--ring", required=True)
    p.add_argument("--theorem", default="all", help="all | " + " | ".join(SWEEP_TAGS))
    p.add_argument(
        "--policy",
        default="auto",
        choices=["auto", "generated-by-one-element", "unit-group", "all-closed-subsets"],
    )
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_oracle_verify)

    p = sub.add_parser("paper-examples")
    p.set_defaults(handler=_cmd_paper_examples)

    for p in sub.choices.values():
        p.add_argument(
            "--output",
            choices=["text", "json"],
            default=os.environ.get("SIDEAL_OUTPUT", "text"),
        )
        p.add_argument("--max-elements", type=int, default=4096)
        p.add_argument("--max-witness-degree", type=int, default=8)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except ParseError as exc:
        print(f"parse error at position {exc.position}: {exc}", file=sys.stderr)
        return 2
    except ContractViolation as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return 3
    except (DisjointnessError, DomainError, PreconditionError, UnsupportedEnumeration, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
