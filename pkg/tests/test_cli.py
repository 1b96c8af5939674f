import csv
import io
import json

import pytest

from planebranch.cli import build_report, main, render_report


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------- analyze -----------------------------

def test_analyze_table_10_23(capsys):
    code, out, _ = run_cli(capsys, "analyze", "10", "23")
    assert code == 0
    assert "p = 10  m = 23  mu = 198" in out
    for row in (
        "1 |  2 |    46 |   1 |     34     80 |    -46",
        "4 |  1 |    10 |   3 |    118    128 |    -89",
    ):
        assert row in out
    assert "(131)" in out and "(141)" in out
    assert "G = [10, 23, 34, 81, 105, 118]" in out
    assert "|G| = 6" in out
    assert "c(Lambda_gen) = 109" in out
    assert "ok = True" in out


def test_analyze_table_122_281(capsys):
    code, out, _ = run_cli(capsys, "analyze", "122", "281")
    assert code == 0
    assert "9150" in out and "17338" in out
    assert "|G| = 10" in out
    assert "c(Lambda_gen) = 17058" in out


def test_analyze_rejects_noncoprime(capsys):
    code, _, err = run_cli(capsys, "analyze", "10", "20")
    assert code == 2
    assert "coprime" in err


def test_analyze_rejects_out_of_range(capsys):
    code, _, err = run_cli(capsys, "analyze", "23", "10")
    assert code == 2
    code, _, err = run_cli(capsys, "analyze", "3", str(10**6 + 1))
    assert code == 2


def test_analyze_json_schema_and_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "analyze", "10", "23", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert list(obj) == [
        "input", "euclid", "steps", "G", "card", "mu",
        "conductor_lambda", "tau", "ok",
    ]
    assert obj["input"] == {"p": 10, "m": 23}
    assert obj["euclid"]["s"] == 2
    assert obj["euclid"]["N"] == [6, 3, 0]
    assert obj["steps"][0] == {
        "i": 1, "j": 2, "gamma": 46, "r": 1, "g": 34, "u": 80,
        "c": -46, "minimal": True,
    }
    assert obj["G"] == [10, 23, 34, 81, 105, 118]
    assert obj["tau"] == {"staircase": 157, "abm": 157, "oracle": 157}
    assert obj["ok"] is True
    # parsing and re-rendering reproduces the bytes exactly
    assert render_report(obj, "json") == out


def test_analyze_json_p2(capsys):
    code, out, _ = run_cli(capsys, "analyze", "2", "7", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["euclid"] is None and obj["steps"] == []
    assert obj["G"] == [2, 7]
    assert obj["tau"]["abm"] is None
    assert obj["tau"]["staircase"] == obj["tau"]["oracle"] == 6


def test_analyze_tau_method_selection(capsys):
    code, out, _ = run_cli(capsys, "analyze", "10", "23", "--format", "json",
                           "--tau-method", "staircase")
    obj = json.loads(out)
    assert obj["tau"]["staircase"] == 157
    assert obj["tau"]["abm"] is None and obj["tau"]["oracle"] is None


def test_build_report_oracle_only():
    report = build_report(10, 23, "oracle")
    assert report["tau"]["oracle"] == 157
    assert report["tau"]["staircase"] is None


# ----------------------------- verify -----------------------------

def test_verify_ok(capsys):
    code, out, _ = run_cli(capsys, "verify", "10", "23")
    assert code == 0
    assert "ok" in out


def test_verify_extreme_ok(capsys):
    code, out, _ = run_cli(capsys, "verify", "10", "19")
    assert code == 0


def test_verify_rejects_noncoprime(capsys):
    code, _, err = run_cli(capsys, "verify", "9", "12")
    assert code == 2


# ----------------------------- sweep -----------------------------

def test_sweep_csv(capsys):
    code, out, err = run_cli(capsys, "sweep", "3", "20", "20")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["p", "m", "s", "N1", "card", "conductor_lambda", "tau", "ok"]
    assert all(r["ok"] == "True" for r in rows)
    assert "failures: 0" in err
    first = rows[0]
    assert first["p"] == "3" and first["m"] == "4"
    assert first["card"] == "2" and first["conductor_lambda"] == "6"


def test_sweep_flag_arguments(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--min-p", "3", "--max-p", "10",
                           "--max-m", "12", "--format", "json")
    assert code == 0
    lines = out.strip().splitlines()
    summary = json.loads(lines[-1])
    assert summary["failures"] == 0
    assert summary["pairs"] == len(lines) - 1


def test_sweep_p2_line(capsys):
    code, out, _ = run_cli(capsys, "sweep", "2", "2", "50", "--format", "json")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    rows = lines[:-1]
    assert {r["m"] for r in rows} == {m for m in range(3, 51) if m % 2 == 1}
    for r in rows:
        assert r["card"] == 2
        assert r["tau"] == r["conductor_lambda"] == (2 - 1) * (r["m"] - 1)
        assert r["ok"] is True


def test_sweep_invalid_range(capsys):
    code, _, err = run_cli(capsys, "sweep", "5", "3", "10")
    assert code == 2
    code, _, err = run_cli(capsys, "sweep", "3", "5", "5000")
    assert code == 2


def test_sweep_jobs_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "sweep", "3", "15", "15")
    code2, out2, _ = run_cli(capsys, "sweep", "3", "15", "15", "--jobs", "2")
    assert code1 == code2 == 0
    assert out1 == out2


def test_sweep_table_format(capsys):
    code, out, _ = run_cli(capsys, "sweep", "3", "6", "8", "--format", "table")
    assert code == 0
    assert "failures: 0" in out
