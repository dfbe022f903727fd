import csv
import io
import json
import math
import subprocess
import sys

import pytest

from hirschbundles.cli import main, parse_theta_grid_flag, CliError
from hirschbundles.funcspace import from_citation_counts
from hirschbundles.operators import OperatorKind, OperatorSpec
from hirschbundles.solver import sample_bundle
from hirschbundles.thresholds import PowerThreshold

CSV_FIXTURE = "id,counts\nalice,10;8;5;4;3;2;1\nbob,9;7;2\n"


@pytest.fixture
def csv_file(tmp_path):
    p = tmp_path / "sources.csv"
    p.write_text(CSV_FIXTURE)
    return str(p)


@pytest.fixture
def json_file(tmp_path):
    p = tmp_path / "sources.json"
    p.write_text(
        json.dumps(
            [
                {"id": "alice", "counts": [10, 8, 5, 4, 3, 2, 1]},
                {"id": "bob", "counts": [9, 7, 2]},
            ]
        )
    )
    return str(p)


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestIndexCommand:
    def test_worked_values(self, csv_file, capsys):
        code, out, _ = run_cli(["index", csv_file], capsys)
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        by_key = {(r["id"], r["index"]): r["value"] for r in rows}
        assert by_key[("alice", "h")] == "4"
        assert by_key[("alice", "g")] == "6"

    def test_json_input_equivalent(self, csv_file, json_file, capsys):
        code_a, out_a, _ = run_cli(["index", csv_file], capsys)
        code_b, out_b, _ = run_cli(["index", json_file], capsys)
        assert code_a == code_b == 0
        assert out_a == out_b

    def test_statuses_do_not_abort_batch(self, csv_file, capsys):
        # bob's averaged transform never dips to theta=1 on its domain
        code, out, _ = run_cli(["index", csv_file], capsys)
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert {r["value"] for r in rows if r["id"] == "bob"} >= {"NoRoot"}

    def test_malformed_counts_exit_2(self, tmp_path, capsys):
        p = tmp_path / "bad.csv"
        p.write_text("id,counts\nok,3;2;1\nbroken,\n")
        code, _, err = run_cli(["index", str(p)], capsys)
        assert code == 2
        assert "line 3" in err

    def test_missing_header_exit_2(self, tmp_path, capsys):
        p = tmp_path / "bad.csv"
        p.write_text("name,cites\nx,1;2\n")
        code, _, err = run_cli(["index", str(p)], capsys)
        assert code == 2
        assert "line 1" in err

    def test_unsorted_counts_warn_and_sort(self, tmp_path, capsys):
        p = tmp_path / "unsorted.csv"
        p.write_text("id,counts\ncarol,1;5;3\n")
        code, out, err = run_cli(["index", str(p)], capsys)
        assert code == 0
        assert "sorting" in err

    def test_json_output_format(self, csv_file, capsys):
        code, out, _ = run_cli(["index", csv_file, "--format", "json"], capsys)
        assert code == 0
        rows = json.loads(out)
        assert rows[0]["id"] == "alice"


class TestBundleCommand:
    def test_header_and_values(self, csv_file, capsys):
        code, out, _ = run_cli(["bundle", csv_file, "--theta-grid", "0.5:2:3"], capsys)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "id,index,operator,p,shift,theta,m,status"

    def test_round_trip_against_solver(self, csv_file, capsys):
        code, out, _ = run_cli(["bundle", csv_file, "--theta-grid", "0.5:2:3"], capsys)
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        f = from_citation_counts([10, 8, 5, 4, 3, 2, 1])
        op = OperatorSpec(OperatorKind.IDENTITY, 0.0)
        sample = sample_bundle(f, op, PowerThreshold(1.0, 0.0), [0.5, 1.25, 2.0])
        api = {
            format(e.theta, ".12g"): (format(e.m, ".12g") if math.isfinite(e.m) else "")
            for e in sample.entries
        }
        for row in rows:
            if row["id"] == "alice" and row["index"] == "h":
                assert row["m"] == api[row["theta"]]

    def test_theta_grid_flag_log_spacing(self):
        grid = parse_theta_grid_flag("0.5:2:3:log")
        assert grid.values() == pytest.approx([0.5, 1.0, 2.0])
        with pytest.raises(CliError):
            parse_theta_grid_flag("1:2")
        with pytest.raises(CliError):
            parse_theta_grid_flag("0:2:3")

    def test_tol_flag_accepted_and_validated(self, csv_file, capsys):
        code, out, _ = run_cli(["index", csv_file, "--tol", "1e-8"], capsys)
        assert code == 0
        code, _, err = run_cli(["index", csv_file, "--tol", "-1"], capsys)
        assert code == 2

    def test_strictly_decreasing_along_theta(self, csv_file, capsys):
        code, out, _ = run_cli(["bundle", csv_file, "--theta-grid", "0.5:2:4"], capsys)
        rows = [
            r
            for r in csv.DictReader(io.StringIO(out))
            if r["id"] == "alice" and r["index"] == "h"
        ]
        ms = [float(r["m"]) for r in rows if r["m"]]
        assert all(b < a for a, b in zip(ms, ms[1:]))


class TestAdmissibleCommand:
    def test_counts_fixture_ranges(self, csv_file, capsys):
        code, out, _ = run_cli(["admissible", csv_file], capsys)
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        by_key = {(r["id"], r["index"]): r for r in rows}
        # theta unbounded for h (the ingested record descends to zero)
        assert by_key[("alice", "h")]["theta_min"] == "0"
        assert by_key[("alice", "h")]["theta_max"] == "inf"
        assert by_key[("alice", "h")]["certified"] == "true"
        # averaged transform keeps a positive floor: 4.75 / 8
        assert by_key[("alice", "g")]["theta_min"] == "0.59375"

    def test_uncertified_range_prints_caveat(self, tmp_path, capsys):
        p = tmp_path / "cfg.json"
        p.write_text(
            json.dumps(
                {"indices": [{"name": "iq", "operator": "integral", "p": 1.0, "shift": 0.0}]}
            )
        )
        src = tmp_path / "s.csv"
        src.write_text("id,counts\nx,4;4;4\n")
        code, out, err = run_cli(["admissible", str(src), "--config", str(p)], capsys)
        assert code == 0
        assert "certified=false" in err


class TestVerifyCommand:
    def test_stock_suite_exit_zero(self, tmp_path, capsys):
        rep = tmp_path / "rep.json"
        code, out, _ = run_cli(
            ["verify", "--trials", "4", "--seed", "5", "--report", str(rep)], capsys
        )
        assert code == 0
        data = json.loads(rep.read_text())
        assert data["counts"]["fail"] == 0
        assert "summary:" in out

    def test_reversal_injection_exit_one(self, tmp_path, capsys):
        rep = tmp_path / "rep.json"
        code, out, _ = run_cli(
            [
                "verify",
                "--trials",
                "4",
                "--seed",
                "5",
                "--inject-reversal",
                "--report",
                str(rep),
            ],
            capsys,
        )
        assert code == 1
        data = json.loads(rep.read_text())
        assert data["counts"]["fail"] == 1

    def test_zero_trials_vacuous_with_warning(self, tmp_path, capsys):
        rep = tmp_path / "rep.json"
        code, out, err = run_cli(
            ["verify", "--trials", "0", "--report", str(rep)], capsys
        )
        assert code == 0
        assert "vacuous" in err
        data = json.loads(rep.read_text())
        assert data["counts"]["pass"] == 0

    def test_bad_config_exit_2(self, tmp_path, capsys):
        p = tmp_path / "cfg.json"
        p.write_text("{not json")
        code, _, err = run_cli(["verify", "--config", str(p)], capsys)
        assert code == 2


class TestDeterminism:
    def test_byte_identical_runs(self, tmp_path):
        src = tmp_path / "s.csv"
        src.write_text(CSV_FIXTURE)
        cmd = [
            sys.executable,
            "-m",
            "hirschbundles",
            "bundle",
            str(src),
            "--theta-grid",
            "0.5:3:7",
            "--seed",
            "42",
        ]
        a = subprocess.run(cmd, capture_output=True)
        b = subprocess.run(cmd, capture_output=True)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout
