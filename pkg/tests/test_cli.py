import subprocess
import sys

import pytest

from qfzeta.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_circle_unit(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--form", "1,0,1", "--x", "1")
        assert code == 0
        assert "A = 5" in out
        assert "B = 4" in out

    def test_origin_only(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--form", "1,sqrt(2),sqrt(3)", "--x", "0")
        assert code == 0
        assert "A = 1" in out
        assert "B = 0" in out

    def test_twelve_significant_digits(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--form", "1,0,1", "--x", "1")
        r_line = next(line for line in out.splitlines() if line.startswith("R = "))
        digits = r_line.split("= ")[1].replace(".", "").replace("-", "").lstrip("0")
        assert len(digits) >= 11

    def test_indefinite_form_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "count", "--form", "1,3,1", "--x", "10")
        assert code == 3
        assert "definite" in err

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "count", "--form", "nonsense", "--x", "1")
        assert code == 2
        assert "error" in err

    def test_budget_exit_code(self, capsys):
        code, _, err = run_cli(
            capsys, "count", "--form", "1,0,1", "--x", "1e9", "--budget", "1000"
        )
        assert code == 4
        assert "budget" in err

    def test_domain_exit_code(self, capsys):
        code, _, _ = run_cli(capsys, "count", "--form", "1,0,1", "--x", "-3")
        assert code == 3


class TestSweep:
    def test_row_count_and_header(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, out, _ = run_cli(
            capsys,
            "sweep", "--form", "1,0,1", "--ymax", "1000", "--rows", "100",
            "--out", str(out_path), "--no-timestamp",
        )
        assert code == 0
        lines = out_path.read_text().splitlines()
        assert lines[0] == "x,A,B,P,R"
        assert len(lines) == 101

    def test_deterministic_and_worker_independent(self, capsys, tmp_path):
        paths = [tmp_path / f"s{i}.csv" for i in range(3)]
        for path, workers in zip(paths, ("1", "1", "3")):
            code, _, _ = run_cli(
                capsys,
                "sweep", "--form", "1,sqrt(2),sqrt(3)", "--ymax", "2000",
                "--rows", "20", "--out", str(path), "--no-timestamp",
                "--workers", workers,
            )
            assert code == 0
        blobs = [p.read_bytes() for p in paths]
        assert blobs[0] == blobs[1] == blobs[2]

    def test_timestamp_line_present_by_default(self, capsys, tmp_path):
        out_path = tmp_path / "stamped.csv"
        code, _, _ = run_cli(
            capsys, "sweep", "--form", "1,0,1", "--ymax", "100",
            "--rows", "5", "--out", str(out_path),
        )
        assert code == 0
        assert out_path.read_text().startswith("# generated ")

    def test_log_step_with_mean_curve(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        mean_path = tmp_path / "mean.csv"
        code, _, _ = run_cli(
            capsys,
            "sweep", "--form", "1,0,1", "--ymax", "1000", "--rows", "10",
            "--log-step", "--out", str(out_path), "--mean-out", str(mean_path),
            "--no-timestamp",
        )
        assert code == 0
        lines = mean_path.read_text().splitlines()
        assert lines[0] == "Y,M"
        assert len(lines) == 11


class TestEpstein:
    def test_certified_evaluation(self, capsys):
        code, out, _ = run_cli(
            capsys, "epstein", "--form", "1,sqrt(2),sqrt(3)", "--s", "0.75+2i",
            "--Z", "500",
        )
        assert code == 0
        assert "certified  = True" in out
        assert "F2 bound" in out

    def test_series_comparison(self, capsys):
        code, out, _ = run_cli(
            capsys, "epstein", "--form", "1,0,1", "--s", "2", "--Z", "1000",
            "--series", "--tol", "1e-8",
        )
        assert code == 0
        series_line = next(l for l in out.splitlines() if l.startswith("|series-F1|"))
        gap = float(series_line.split("= ")[1])
        f2_line = next(l for l in out.splitlines() if l.startswith("F2 bound"))
        assert gap <= float(f2_line.split("= ")[1])

    def test_pole_exit_code(self, capsys):
        code, _, _ = run_cli(capsys, "epstein", "--form", "1,0,1", "--s", "1")
        assert code == 3

    def test_bad_s_literal(self, capsys):
        code, _, _ = run_cli(capsys, "epstein", "--form", "1,0,1", "--s", "wat")
        assert code == 2


class TestKappa:
    def test_reference_constants(self, capsys):
        code, out, _ = run_cli(capsys, "kappa", "--form", "1,sqrt(2),sqrt(3)")
        assert code == 0
        kappa_line = next(l for l in out.splitlines() if l.startswith("kappa"))
        assert abs(float(kappa_line.split("= ")[1]) - 0.569800186766) < 1e-9
        assert any(l.startswith("lambda1") for l in out.splitlines())


class TestK0:
    def test_text_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "k0", "--form", "1,sqrt(2),sqrt(3)", "--Z", "1000",
            "--zero-index", "1",
        )
        assert code == 0
        assert "valid           True" in out
        k0_line = next(l for l in out.splitlines() if l.startswith("k0_lower"))
        assert float(k0_line.split()[1]) > 4e-4

    def test_csv_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "k0", "--form", "1,sqrt(2),sqrt(3)", "--Z", "1000", "--csv",
        )
        assert code == 0
        header, row = out.strip().splitlines()
        assert header.startswith("a,b,c,zero_index")
        assert len(row.split(",")) == len(header.split(","))

    def test_auto_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "k0", "--form", "1,0,1", "--Z", "1000", "--auto",
        )
        assert code == 0
        assert "valid           True" in out


class TestVerifyPaper:
    def test_passes_at_default_cutoff(self, capsys):
        code, out, _ = run_cli(capsys, "verify-paper")
        assert code == 0
        assert "overall: PASS (5/5)" in out
        assert out.count("PASS") >= 6

    def test_fails_at_tiny_cutoff(self, capsys):
        code, out, _ = run_cli(capsys, "verify-paper", "--Z", "10")
        assert code == 5
        assert "FAIL" in out


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "qfzeta", "count", "--form", "1,0,1", "--x", "25"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "A = 81" in proc.stdout
