import csv
import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from ellipk import cli

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEval:
    def test_agm(self, capsys):
        code, out, err = run(capsys, "eval", "--k", "0.5", "--method", "agm")
        assert (code, out) == (0, "1.6857504\n")
        assert "iterations=" in err

    def test_parameter_convention(self, capsys):
        code, out, _ = run(capsys, "eval", "--m", "0.25", "--method", "series")
        assert (code, out) == (0, "1.6857504\n")

    def test_domain_exit_2(self, capsys):
        code, out, err = run(capsys, "eval", "--k", "1.0", "--method", "series")
        assert code == 2 and out == "" and "0 <= k < 1" in err

    def test_nonconvergence_exit_3(self, capsys):
        code, _, err = run(capsys, "eval", "--k", "0.99", "--method", "series", "--max-terms", "50")
        assert code == 3 and "AGM" in err

    @pytest.mark.parametrize("argv", [
        ["eval", "--k", "0.5", "--m", "0.25"],
        ["eval", "--k", "abc"],
        ["eval", "--k", "0.5", "--method", "simpson"],
        ["frobnicate"],
    ])
    def test_usage_exit_1(self, capsys, argv):
        with pytest.raises(SystemExit) as info:
            cli.main(argv)
        assert info.value.code == 1

    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "eval", "--k", "0.3", "--method", "gl", "--n", "20", "--format", "json")
        rec = json.loads(out)
        assert rec["param"] == {"n": 20}
        from ellipk import k_gl

        assert rec["K"] == k_gl(0.3, 20)


class TestTable:
    def test_golden_plain(self, capsys):
        code, out, _ = run(capsys, "table", "--kmin", "0", "--kmax", "0.5", "--step", "0.1")
        assert code == 0
        assert out == (GOLDEN / "table_plain.txt").read_text()

    def test_golden_kvalues_file(self, tmp_path, capsys):
        path = tmp_path / "Kvalues.txt"
        code, out, _ = run(capsys, "table", "--kmin", "0", "--kmax", "0.5", "--step", "0.1",
                           "--methods", "series", "--out", str(path))
        assert code == 0 and out == ""
        assert path.read_bytes() == (GOLDEN / "kvalues_series.txt").read_bytes()

    def test_single_row(self, capsys):
        _, out, _ = run(capsys, "table", "--kmin", "0", "--kmax", "0", "--step", "0.1", "--methods", "agm")
        lines = out.splitlines()
        assert len(lines) == 2 and lines[1].split() == ["0.00", "1.5707963"]

    def test_rows_agree(self, capsys):
        _, out, _ = run(capsys, "table", "--kmin", "0", "--kmax", "0.5", "--step", "0.1", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["k", "K_series", "K_agm", "K_gc", "K_gl"]
        assert len(rows) == 7
        for row in rows[1:]:
            vals = [float(v) for v in row[1:]]
            assert max(vals) - min(vals) < 1e-8

    def test_csv_round_trip(self, capsys):
        from ellipk import k_series

        _, out, _ = run(capsys, "table", "--kmin", "0.05", "--kmax", "0.35", "--step", "0.1",
                        "--methods", "series", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["k", "K"]
        for k, K in rows[1:]:
            assert float(K) == k_series(float(k))

    def test_json_round_trip(self, tmp_path, capsys):
        from ellipk import k_agm, k_gc

        path = tmp_path / "t.json"
        run(capsys, "table", "--kmin", "0.1", "--kmax", "0.3", "--step", "0.1",
            "--methods", "agm,gc", "--format", "json", "--out", str(path))
        records = json.loads(path.read_text())
        assert len(records) == 6
        for r in records:
            expected = k_agm(r["k"]) if r["method"] == "agm" else k_gc(r["k"])
            assert r["K"] == expected

    @pytest.mark.parametrize("argv", [
        ["--kmin", "0.6", "--kmax", "0.5"],
        ["--kmin", "0", "--kmax", "1.0"],
        ["--kmin", "0", "--kmax", "0.5", "--step", "0"],
        ["--kmin", "-0.1", "--kmax", "0.5"],
        ["--kmin", "0", "--kmax", "0.5", "--methods", "agm,trapezoid"],
    ])
    def test_invalid_range_exit_2(self, capsys, argv):
        code, _, _ = run(capsys, "table", *argv)
        assert code == 2


class TestRule:
    def test_gl_two(self, capsys):
        code, out, _ = run(capsys, "rule", "--family", "gl", "--n", "2", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and rows[0] == ["index", "node", "weight"]
        assert [abs(float(r[1])) for r in rows[1:]] == [0.577350269189626] * 2
        assert [float(r[2]) for r in rows[1:]] == [1.0, 1.0]

    def test_gc_four(self, capsys):
        _, out, _ = run(capsys, "rule", "--family", "gc", "--n", "4", "--format", "json")
        assert [r["weight"] for r in json.loads(out)] == [float(f"{math.pi / 4:.15g}")] * 4

    def test_gl_one(self, capsys):
        _, out, _ = run(capsys, "rule", "--family", "gl", "--n", "1")
        assert out.split() == ["1", "0", "2"]

    def test_zero_order_exit_2(self, capsys):
        code, _, err = run(capsys, "rule", "--family", "gl", "--n", "0")
        assert code == 2 and "order" in err


class TestSelftest:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "selftest")
        assert code == 0
        assert "FAIL" not in out

    def test_verbose_reports_measurements(self, capsys):
        _, out, _ = run(capsys, "selftest", "--verbose")
        assert "measured=" in out and "tol=" in out

    def test_injected_fault_exit_4(self, capsys):
        code, out, _ = run(capsys, "selftest", "--inject-fault", "1e-6")
        assert code == 4 and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ellipk", "eval", "--k", "0.1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1.5747456\n"
