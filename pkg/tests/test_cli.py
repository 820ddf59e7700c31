"""CLI contract: golden output, exit codes, JSON shape.

Regenerate golden files with ``BINOMVERIFY_REGEN_GOLDEN=1 pytest tests/test_cli.py``
and review the diff before committing.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from binomverify.cli import main

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"
DATA = HERE / "data"
REGEN = os.environ.get("BINOMVERIFY_REGEN_GOLDEN") == "1"

CENTRAL = "sum(i+j=n) C(2*i,i)*C(2*j,j) == 4^n"
GENERALIZED = "sum(i+j=n) C(2*i-l,i)*C(2*j+l,j) == 4^n"

# name -> (argv, expected exit code)
CASES = {
    "verify_poly_generalized": (
        ["verify", "--mode", "poly", "--free", "l", "--range", "n=0..6", "--expr", GENERALIZED], 0
    ),
    "verify_numeric_central": (["verify", "--mode", "numeric", "--assign", "n=3", "--expr", CENTRAL], 0),
    "verify_numeric_sweep": (
        ["verify", "--assign", "l=-5/2", "--range", "n=0..3", "--expr", GENERALIZED], 0
    ),
    "verify_failing": (["verify", "--expr", "C(2,1) == 3"], 1),
    "verify_poly_failing": (["verify", "--mode", "poly", "--free", "l", "--expr", "C(l,1) == l - 1"], 1),
    "verify_file": (
        ["verify", "--file", "convolution_identities.txt", "--mode", "poly", "--free", "l",
         "--assign", "p=2", "--range", "n=1..2"],
        0,
    ),
    "trace_n1": (["trace", "--n", "1", "--ell", "3"], 0),
    "trace_n0": (["trace", "--n", "0", "--ell", "13/7"], 0),
    "trace_n4": (["trace", "--n", "4", "--ell", "-2"], 0),
    "series_central": (["series", "--alpha", "-1/2", "--a", "-4", "--terms", "5"], 0),
    "series_square": (["series", "--alpha", "-1/2", "--a", "-4", "--terms", "4", "--square"], 0),
    "series_linear": (["series", "--alpha", "1", "--a", "1", "--terms", "3"], 0),
    "oracle_5_2": (["oracle", "--ell", "5", "--p", "2"], 0),
    "oracle_4_0": (["oracle", "--ell", "4", "--p", "0"], 0),
    "oracle_8_all": (["oracle", "--ell", "8", "--all"], 0),
}


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture(autouse=True)
def in_data_dir(monkeypatch):
    monkeypatch.chdir(DATA)
    monkeypatch.delenv("BINOMVERIFY_ENUM_CAP", raising=False)


@pytest.mark.parametrize("fmt", ["text", "json"])
@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, fmt, capsys):
    argv, expected_code = CASES[name]
    argv = argv[:1] + ["--format", fmt] + argv[1:]
    code, out, err = run(argv, capsys)
    again = run(argv, capsys)
    assert (code, out, err) == again
    assert code == expected_code
    assert err == ""
    path = GOLDEN / f"{name}.{'json' if fmt == 'json' else 'txt'}"
    if REGEN:
        path.write_bytes(out.encode("utf-8"))
    assert out.encode("utf-8") == path.read_bytes()


@pytest.mark.parametrize("name", sorted(CASES))
def test_json_is_canonical_and_float_free(name, capsys):
    argv, _ = CASES[name]
    _, out, _ = run(argv[:1] + ["--format", "json"] + argv[1:], capsys)
    payload = json.loads(out)
    assert out == json.dumps(payload, indent=2) + "\n"
    assert payload["command"] == argv[0]
    assert "inputs" in payload

    def no_floats(value):
        if isinstance(value, float):
            return False
        if isinstance(value, dict):
            return all(no_floats(v) for v in value.values())
        if isinstance(value, list):
            return all(no_floats(v) for v in value)
        return True

    assert no_floats(payload)


@pytest.mark.parametrize("name", [n for n in sorted(CASES) if n.startswith("verify")])
def test_text_and_json_agree(name, capsys):
    argv, _ = CASES[name]
    _, text, _ = run(argv, capsys)
    _, out, _ = run(argv[:1] + ["--format", "json"] + argv[1:], capsys)
    reports = json.loads(out)["reports"]
    blocks = [b for b in text.split("\n") if not b.startswith(" ") and ": " in b][: len(reports)]
    assert [b.split(":", 1)[0] for b in blocks] == [r["status"] for r in reports]
    for report in reports:
        values = report["lhs_value"] if isinstance(report["lhs_value"], list) else [report["lhs_value"]]
        assert f"lhs: {', '.join(values)}" in text


def test_series_json_shape(capsys):
    _, out, _ = run(["series", "--format", "json", "--alpha", "-1/2", "--a", "-4", "--terms", "5"], capsys)
    payload = json.loads(out)
    assert payload["order"] == 5
    assert payload["coefficients"] == ["1", "2", "6", "20", "70"]


def test_oracle_row_contents(capsys):
    code, out, _ = run(["oracle", "--format", "json", "--ell", "5", "--p", "2"], capsys)
    assert code == 0
    row = json.loads(out)["reports"][0]
    assert row == {"ell": 5, "p": 2, "enum": 9, "formula": 9, "expected": 9, "match": True}
    _, out, _ = run(["oracle", "--format", "json", "--ell", "8", "--all"], capsys)
    rows = json.loads(out)["reports"]
    assert len(rows) == 9 and all(r["match"] for r in rows)


def test_trace_contents(capsys):
    code, out, _ = run(["trace", "--n", "1", "--ell", "3"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert [line.rsplit(": ", 1)[1] for line in lines[1:7]] == ["4"] * 6
    assert lines[-1] == "VALID"


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["verify", "--expr", "C(2,1) = 3"], "line 1, column 8"),
        (["verify", "--expr", "sum(i=0..2) sum(i=0..1) 1 == 1"], "duplicate binder"),
        (["verify", "--expr", "C(l,1) == l", "--bogus"], "unrecognized arguments"),
        (["verify", "--expr", "C(l,1) == l", "--file", "convolution_identities.txt"], "not allowed"),
        (["verify", "--mode", "poly", "--expr", "C(l,1) == l"], "--free"),
        (["verify", "--expr", "C(l,1) == l"], "unassigned symbol(s) l"),
        (["verify", "--expr", "C(l,1) == l", "--assign", "l"], "bad assignment"),
        (["verify", "--expr", "C(l,1) == l", "--assign", "l=1.5"], "bad value"),
        (["verify", "--expr", "C(l,1) == l", "--assign", "l=1", "--assign", "l=2"], "more than once"),
        (["verify", "--expr", "C(n,1) == n", "--range", "n=3..1"], "empty range"),
        (["verify", "--expr", "C(n,1) == n", "--range", "n=1..x"], "bad range"),
        (["verify", "--mode", "poly", "--free", "l", "--assign", "l=1", "--expr", "l == l"], "must not be"),
        (["verify", "--free", "l", "--expr", "1 == 1"], "only applies"),
        (["verify", "--file", "missing.txt"], "cannot read"),
        (["verify", "--expr", "C(3,a) == 1", "--assign", "a=1/2"], ""),
        (["trace", "--n", "-1", "--ell", "3"], "must be >= 0"),
        (["trace", "--n", "1", "--ell", "x"], "not a rational"),
        (["series", "--alpha", "1", "--a", "1", "--terms", "0"], "must be >= 1"),
        (["oracle", "--ell", "3", "--p", "4"], "0 <= p <= ell"),
        (["oracle", "--ell", "3"], "one of the arguments"),
        (["oracle", "--ell", "30", "--p", "15"], "exceeds enumeration cap"),
        (["frobnicate"], "invalid choice"),
        ([], "required"),
    ],
)
def test_usage_errors_exit_2(argv, fragment, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    if fragment:
        assert fragment in err


def test_evaluation_error_is_reported_then_exit_2(capsys):
    code, out, err = run(["verify", "--expr", "C(3,a) == 1", "--assign", "a=1/2"], capsys)
    assert code == 2
    assert out.startswith("error: C(3,a) == 1")
    assert "binomial lower argument must be an integer" in out


def test_enum_cap_environment(monkeypatch, capsys):
    monkeypatch.setenv("BINOMVERIFY_ENUM_CAP", "9")
    code, _, err = run(["oracle", "--ell", "5", "--p", "2"], capsys)
    assert code == 2 and "cap 9" in err
    monkeypatch.setenv("BINOMVERIFY_ENUM_CAP", "2000000")
    code, _, _ = run(["oracle", "--ell", "22", "--p", "11"], capsys)
    assert code == 0


def test_malformed_file_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("C(2,1) == 2\n# fine\nC(2,,1) == 2\n", encoding="utf-8")
    code, out, err = run(["verify", "--file", str(bad)], capsys)
    assert code == 2 and out == ""
    assert "line 3, column 5" in err


def test_module_entry_point_is_byte_stable():
    cmd = [sys.executable, "-m", "binomverify", "trace", "--format", "json", "--n", "3", "--ell", "-5/2"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert first.stderr == b""
    lines = json.loads(first.stdout)["reports"][0]["lines"]
    assert [line["value"] for line in lines] == ["64"] * 6


def test_module_entry_point_exit_codes():
    base = [sys.executable, "-m", "binomverify", "verify"]
    ok = subprocess.run(base + ["--expr", "C(4,2) == 6"], capture_output=True, text=True)
    bad = subprocess.run(base + ["--expr", "C(2,1) == 3"], capture_output=True, text=True)
    broken = subprocess.run(base + ["--expr", "C(2,1) ="], capture_output=True, text=True)
    assert (ok.returncode, bad.returncode, broken.returncode) == (0, 1, 2)
    assert broken.stderr.strip() and broken.stdout == ""
