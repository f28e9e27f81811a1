"""Command-line interface: pinned outputs, formats, and exit codes."""

import json

import pytest

from padichg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_pinned_value(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--prime", "7", "--function", "2g2", "--lambda", "3"
        )
        assert code == 0
        assert out == "-4\nnormalized=-1.511857892037\n"

    def test_special_value_at_one(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--prime", "7", "--function", "2g2", "--lambda", "1"
        )
        assert code == 0
        assert out.splitlines()[0] == "-1"

    def test_tilde_at_minus_one(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--prime", "5", "--function", "6g6t", "--lambda", "4"
        )
        assert code == 0
        assert out.splitlines()[0] == "-2"

    def test_not_prime(self, capsys):
        code, _, err = run_cli(
            capsys, "eval", "--prime", "8", "--function", "2g2", "--lambda", "3"
        )
        assert code == 2
        assert "8 is not prime" in err

    def test_wrong_residue_class(self, capsys):
        code, _, err = run_cli(
            capsys, "eval", "--prime", "11", "--function", "2g2", "--lambda", "3"
        )
        assert code == 2
        assert "p = 1 (mod 6)" in err

    def test_no_integer_lift_class(self, capsys):
        code, _, err = run_cli(
            capsys, "eval", "--prime", "13", "--function", "6g6", "--lambda", "3"
        )
        assert code == 2
        assert "p = 2 (mod 3)" in err

    def test_json_round_trip(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--prime", "7", "--function", "2g2",
            "--lambda", "3", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "p": 7,
            "function": "2g2",
            "lambda": 3,
            "value": -4,
            "normalized": -1.511857892037,
        }


class TestSweep:
    def test_pinned_p7(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--prime", "7", "--function", "2g2"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "lambda,value,normalized"
        assert len(lines) == 8
        assert [int(ln.split(",")[1]) for ln in lines[1:]] == [0, -1, 0, -4, 0, 4, 0]

    def test_ap_starts_at_two(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--prime", "7", "--function", "ap")
        lines = out.splitlines()
        assert code == 0
        assert lines[1].startswith("2,")
        assert len(lines) == 1 + 5


class TestMoments:
    def test_pinned_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "moments", "--prime", "7", "--function", "2g2", "--m-max", "2"
        )
        assert code == 0
        assert out.splitlines() == [
            "m,sum,normalized,expected",
            "1,-1,-0.053994924716,0.0",
            "2,33,0.673469387755,1.0",
        ]

    def test_json_keys_match_csv_columns(self, capsys):
        code, out, _ = run_cli(
            capsys, "moments", "--prime", "7", "--function", "2g2",
            "--m-max", "2", "--format", "json",
        )
        assert code == 0
        rows = json.loads(out)
        assert [r["m"] for r in rows] == [1, 2]
        assert rows[1] == {
            "m": 2, "sum": 33, "normalized": 0.673469387755, "expected": 1.0,
        }


class TestDistribution:
    def test_csv_shape(self, capsys):
        code, out, _ = run_cli(
            capsys, "distribution", "--prime", "7", "--function", "2g2",
            "--bins", "4",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == (
            "bin_left,bin_right,count,empirical_density,semicircle_density"
        )
        assert len(lines) == 1 + 4 + 1
        assert lines[-1].startswith("# ks=")
        assert [int(ln.split(",")[2]) for ln in lines[1:5]] == [1, 1, 4, 1]

    def test_json_carries_ks(self, capsys):
        code, out, _ = run_cli(
            capsys, "distribution", "--prime", "7", "--function", "2g2",
            "--bins", "4", "--format", "json",
        )
        payload = json.loads(out)
        assert code == 0
        assert set(payload) == {"p", "function", "ks", "rows"}
        assert len(payload["rows"]) == 4


class TestTrace:
    def test_pinned_row(self, capsys):
        code, out, _ = run_cli(
            capsys, "trace", "--prime", "5", "--weight", "4", "--level", "8"
        )
        assert code == 0
        assert out.splitlines() == ["p,k,level,trace", "5,4,8,-2"]

    def test_prime_range(self, capsys):
        code, out, _ = run_cli(
            capsys, "trace", "--pmin", "5", "--pmax", "13",
            "--weight", "4", "--level", "4",
        )
        assert code == 0
        lines = out.splitlines()
        assert [ln.split(",")[0] for ln in lines[1:]] == ["5", "7", "11", "13"]
        assert all(ln.endswith(",0") for ln in lines[1:])

    def test_needs_prime_or_range(self, capsys):
        code, _, err = run_cli(capsys, "trace", "--weight", "4", "--level", "4")
        assert code == 2
        assert "needs --prime" in err


class TestVerify:
    def test_identities_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--pmin", "5", "--pmax", "60",
            "--suite", "identities",
        )
        assert code == 0
        lines = out.splitlines()
        assert all(ln.startswith("PASS") for ln in lines[:-1])
        assert lines[-1].endswith("(primes 5..60, suite identities)")

    def test_thread_count_does_not_change_output(self, capsys):
        outs = []
        for threads in ("1", "4"):
            code, out, _ = run_cli(
                capsys, "verify", "--pmin", "5", "--pmax", "40",
                "--suite", "traces", "--threads", threads,
            )
            assert code == 0
            outs.append(out)
        assert outs[0] == outs[1]

    def test_json_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--pmin", "5", "--pmax", "30",
            "--suite", "gamma", "--format", "json",
        )
        assert code == 0
        results = json.loads(out)
        assert results and all(r["ok"] for r in results)
        assert set(results[0]) == {"suite", "name", "ok", "detail"}


def test_output_file(tmp_path, capsys):
    target = tmp_path / "row.csv"
    code, out, _ = run_cli(
        capsys, "trace", "--prime", "5", "--weight", "4", "--level", "8",
        "--output", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_text() == "p,k,level,trace\n5,4,8,-2\n"


def test_repeated_runs_are_identical(capsys):
    first = run_cli(capsys, "sweep", "--prime", "13", "--function", "2g2")
    second = run_cli(capsys, "sweep", "--prime", "13", "--function", "2g2")
    assert first == second
