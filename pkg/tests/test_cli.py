"""Command-line behavior: exit codes, text and JSON output, error routing."""

import json
import subprocess
import sys

import pytest

from sideal.cli import main
from sideal.serialize import ReportBundle, parse_report

CAPS_LINE = "caps: max-elements=4096 max-witness-degree=8"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_saturate_example(capsys):
    code, out, err = run(capsys, ["saturate", "--ring", "Z", "--ideal", "(6)", "--mult", "complement(3)"])
    assert code == 0 and err == ""
    assert "saturation: (3)" in out
    assert "witness: 2 [saturation-stabilizer] = 2" in out
    assert CAPS_LINE in out


def test_classify_example(capsys):
    code, out, err = run(capsys, ["classify", "--ring", "Z", "--ideal", "(4)", "--mult", "complement(2)"])
    assert code == 0
    assert "s_prime: false" in out
    assert "s_primary: true" in out
    assert "radical: (2)" in out
    assert "saturation: (4)" in out


def test_decompose_example(capsys):
    code, out, err = run(capsys, ["decompose", "--ring", "Z", "--ideal", "(36)", "--mult", "units"])
    assert code == 0
    assert "minimal: true" in out
    assert "component 0: (4)" in out
    assert "component 1: (9)" in out


def test_decompose_generated_set(capsys):
    code, out, _ = run(capsys, ["decompose", "--ring", "Z", "--ideal", "(720)", "--mult", "gen(6)"])
    assert code == 0
    assert "component 0: (720)" in out
    assert "assembly witness: 1296" in out


def test_minimalize_drops_redundant(capsys):
    code, out, _ = run(
        capsys,
        ["minimalize", "--ring", "Z", "--mult", "units", "--components", "(4);(9);(36)"],
    )
    assert code == 0
    # the recomposed ideal is still (36); the redundant (36) component is gone
    assert "ideal: (36)" in out
    assert "component 0: (4)" in out and "component 1: (9)" in out
    assert "component 2" not in out


def test_meeting_ideal_exits_1_on_stderr(capsys):
    code, out, err = run(capsys, ["decompose", "--ring", "Z", "--ideal", "(12)", "--mult", "complement(5)"])
    assert code == 1
    assert out == ""
    assert err == "error: ideal meets S (witness 12)\n"


def test_parse_error_exits_2(capsys):
    code, out, err = run(capsys, ["decompose", "--ring", "Z", "--ideal", "(12", "--mult", "units"])
    assert code == 2
    assert err.startswith("parse error at position 3")


def test_bad_ring_parse_position(capsys):
    code, _, err = run(capsys, ["saturate", "--ring", "Z//3", "--ideal", "(2)", "--mult", "units"])
    assert code == 2
    assert "position 2" in err


def test_report_json_round_trips(capsys):
    code, out, _ = run(
        capsys,
        ["report", "--ring", "Z/12", "--ideal", "(0)", "--mult", "units", "--output", "json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "report"
    assert payload["caps"] == {"max_elements": 4096, "max_witness_degree": 8}
    bundle = parse_report(out)
    assert isinstance(bundle, ReportBundle)
    assert bundle.theorem_min is not None and bundle.theorem_min.hypothesis_holds


def test_report_text_sections(capsys):
    code, out, _ = run(capsys, ["report", "--ring", "Z/12", "--ideal", "(0)", "--mult", "units"])
    assert code == 0
    assert "associated S-primes: (2), (3)" in out
    assert "isolated component indices: 0, 1" in out
    assert "zero-divisor hypothesis: true" in out
    assert "minimal primes: (2), (3)" in out


def test_output_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("SIDEAL_OUTPUT", "json")
    code, out, _ = run(capsys, ["saturate", "--ring", "Z", "--ideal", "(6)", "--mult", "complement(3)"])
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "saturation"
    assert payload["saturation"] == "3"


def test_explicit_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("SIDEAL_OUTPUT", "json")
    code, out, _ = run(
        capsys,
        ["saturate", "--ring", "Z", "--ideal", "(6)", "--mult", "complement(3)", "--output", "text"],
    )
    assert code == 0
    assert "saturation: (3)" in out


def test_oracle_verify_single_theorem(capsys):
    code, out, _ = run(capsys, ["oracle-verify", "--ring", "Z/12", "--theorem", "sp",
                                "--policy", "generated-by-one-element"])
    assert code == 0
    assert "irreducible-implies-primary: 32 instances, 0 counterexamples" in out


def test_oracle_verify_auto_policy_merges_closed_subsets(capsys):
    # 12 <= 16 elements, so auto widens the candidate pool past one-generated sets
    code, out, _ = run(capsys, ["oracle-verify", "--ring", "Z/12", "--theorem", "sp"])
    assert code == 0
    assert "irreducible-implies-primary: 97 instances, 0 counterexamples" in out


def test_oracle_verify_all_clean(capsys):
    code, out, _ = run(capsys, ["oracle-verify", "--ring", "Z/30", "--theorem", "all",
                                "--policy", "generated-by-one-element"])
    assert code == 0
    assert "fast-agreement: 529 instances, 0 counterexamples" in out
    assert "second-uniqueness: 11 instances, 0 counterexamples" in out


def test_oracle_verify_rejects_infinite_ring(capsys):
    code, _, err = run(capsys, ["oracle-verify", "--ring", "Z"])
    assert code == 1
    assert "finite" in err


def test_oracle_verify_respects_element_cap(capsys):
    code, _, err = run(capsys, ["oracle-verify", "--ring", "Z/64", "--max-elements", "32"])
    assert code == 1
    assert "over the cap" in err


def test_fixture_replay_passes(capsys):
    code, out, err = run(capsys, ["paper-examples"])
    assert code == 0 and err == ""
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert lines and all(l.startswith("PASS") for l in lines)


def test_console_script_is_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "sideal.cli", "saturate", "--ring", "Z", "--ideal", "(6)",
         "--mult", "complement(3)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "saturation: (3)" in proc.stdout
