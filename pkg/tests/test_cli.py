from __future__ import annotations

import json

import pytest

from burnside.cli import ENUM_CAP_ENV, run


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_exponent_elementary_abelian(capsys):
    code, out, _ = run_cli(capsys, "exponent", "EA(3,2)")
    assert code == 0
    assert "e = 1" in out


def test_exponent_cyclic_eight(capsys):
    code, out, _ = run_cli(capsys, "exponent", "C(2^3)")
    assert code == 0
    assert "e = 4" in out


def test_exponent_quaternion_reports_honest_value(capsys):
    code, out, _ = run_cli(capsys, "exponent", "Q8", "--family", "ea")
    assert code == 0
    assert "e = 4" in out
    assert "closed form: 2 (case b), agrees: no" in out


def test_exponent_certify_lists_divisor_witnesses(capsys):
    code, out, _ = run_cli(capsys, "exponent", "Q8", "--certify")
    assert code == 0
    assert "d = 1:" in out and "d = 2:" in out


def test_exponent_json_payload(capsys):
    code, out, _ = run_cli(capsys, "exponent", "SD(16)", "--json", "--certify")
    assert code == 0
    data = json.loads(out)
    assert data["command"] == "exponent"
    assert data["group_spec"] == "SD(16)"
    payload = data["payload"]
    assert payload["exponent"] == 8
    assert payload["closed_form"] == {"value": 4, "case": "b", "agrees": False}
    assert [w["divisor"] for w in payload["certificate"]] == [1, 2, 4]


def test_lattice_text_census(capsys):
    code, out, _ = run_cli(capsys, "lattice", "Q8")
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.startswith("class")]
    assert len(lines) == 6
    assert "6 subgroups in 6 classes" in out


def test_lattice_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "lattice", "C(2^2)", "--json")
    assert code == 0
    data = json.loads(out)
    classes = data["payload"]["classes"]
    assert [c["order"] for c in classes] == [1, 2, 4]
    assert all(c["normal"] for c in classes)


def test_marks_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "marks", "C2")
    assert code == 0
    assert out.splitlines() == ["2 1", "0 1"]
    code, out, _ = run_cli(capsys, "marks", "C2", "--json")
    data = json.loads(out)
    assert data["payload"]["matrix"] == [[2, 1], [0, 1]]


def test_member_reports_both_routes(capsys):
    code, out, _ = run_cli(capsys, "member", "C2", "--vector", "1,0")
    assert code == 0
    assert "congruence test: not a member" in out
    assert "marks test: not a member" in out
    assert "coefficients: 1/2, 0" in out
    assert "first violated congruence" in out
    code, out, _ = run_cli(capsys, "member", "C2", "--vector", "2,0")
    assert code == 0
    assert "congruence test: member" in out
    assert "first violated" not in out


def test_member_json(capsys):
    code, out, _ = run_cli(capsys, "member", "Q8", "--vector", "4,4,0,0,0,0", "--json")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["dress"]["holds"] is True
    assert payload["marks"]["is_member"] is True
    assert payload["marks"]["coefficients"] == ["0", "1", "0", "0", "0", "0"]
    assert payload["agree"] is True


def test_member_vector_length_mismatch(capsys):
    code, _, err = run_cli(capsys, "member", "Q8", "--vector", "1,2")
    assert code == 1
    assert "error:" in err


def test_catalog_listing(capsys):
    code, out, _ = run_cli(capsys, "catalog", "--max-order", "16")
    assert code == 0
    assert "Q(8)" in out and "M(16)" in out and "EA(2,4)" in out
    assert "D(32)" not in out


def test_catalog_json(capsys):
    code, out, _ = run_cli(capsys, "catalog", "--max-order", "8", "--json")
    assert code == 0
    payload = json.loads(out)["payload"]
    specs = [row["spec"] for row in payload]
    assert "Q(8)" in specs and "C1" in specs
    assert all(row["order"] <= 8 for row in payload)


def test_verify_main_theorem_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify-main-theorem", "--max-order", "4")
    assert code == 0
    assert "all rows agree" in out
    code, out, _ = run_cli(capsys, "verify-main-theorem", "--max-order", "8")
    assert code == 3
    assert "disagreements: 2" in out


def test_verify_main_theorem_json(capsys):
    code, out, _ = run_cli(capsys, "verify-main-theorem", "--max-order", "8", "--json")
    assert code == 3
    payload = json.loads(out)["payload"]
    assert payload["all_agree"] is False
    rows = {row["spec"]: row for row in payload["rows"]}
    assert rows["Q(8)"]["brute_force"] == 4
    assert rows["Q(8)"]["closed_form"] == 2


def test_output_is_byte_identical_across_runs(capsys):
    first = run_cli(capsys, "lattice", "SD(16)", "--json")
    second = run_cli(capsys, "lattice", "SD(16)", "--json")
    assert first == second
    third = run_cli(capsys, "verify-main-theorem", "--max-order", "8")
    fourth = run_cli(capsys, "verify-main-theorem", "--max-order", "8")
    assert third == fourth


def test_json_keys_are_sorted(capsys):
    _, out, _ = run_cli(capsys, "marks", "C2", "--json")
    data = json.loads(out)
    assert list(data) == sorted(data)
    assert json.dumps(data, sort_keys=True, indent=2) == out.strip()


def test_bad_spec_is_domain_error(capsys):
    code, _, err = run_cli(capsys, "exponent", "Z9")
    assert code == 1
    assert "error:" in err


def test_invalid_parameters_are_domain_errors(capsys):
    code, _, err = run_cli(capsys, "lattice", "SD(8)")
    assert code == 1
    assert "error:" in err


def test_usage_error_exit_code(capsys):
    code, _, _ = run_cli(capsys, "no-such-command")
    assert code == 2
    code, _, _ = run_cli(capsys, "exponent", "Q8", "--family", "bogus")
    assert code == 2


def test_cap_exceeded_is_domain_error(capsys):
    code, _, err = run_cli(capsys, "lattice", "C(2^9)")
    assert code == 1
    assert "cap" in err


def test_enumeration_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv(ENUM_CAP_ENV, "8")
    code, _, err = run_cli(capsys, "lattice", "D16")
    assert code == 1
    assert "cap 8" in err
    monkeypatch.setenv(ENUM_CAP_ENV, "16")
    code, _, _ = run_cli(capsys, "lattice", "D16")
    assert code == 0
    monkeypatch.setenv(ENUM_CAP_ENV, "not-a-number")
    code, _, err = run_cli(capsys, "lattice", "C2")
    assert code == 1
    assert ENUM_CAP_ENV in err


def test_version_flag(capsys):
    code, out, _ = run_cli(capsys, "--version")
    assert code == 0
