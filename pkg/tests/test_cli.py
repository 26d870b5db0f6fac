import json
import math
import os
import subprocess
import sys

import pytest

from mehlerfock.cli import main, parse_complex


def run_cli(args):
    """Run through main() in-process, capturing stdout."""
    import io
    from contextlib import redirect_stderr, redirect_stdout

    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(args)
    return code, out.getvalue(), err.getvalue()


class TestComplexLiterals:
    @pytest.mark.parametrize("text,value", [
        ("2", 2.0), ("-1.5", -1.5), ("3e-2", 0.03),
        ("1i", 1j), ("-2.5i", -2.5j), ("i", 1j),
        ("0.5+1i", 0.5 + 1j), ("-0.5+2i", -0.5 + 2j), ("1-0.25i", 1 - 0.25j),
        ("1e-3+2e-3i", 1e-3 + 2e-3j),
    ])
    def test_parse(self, text, value):
        assert parse_complex(text) == value

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            parse_complex("spam")


class TestEval:
    def test_eval_q_value(self):
        code, out, _ = run_cli(["eval-q", "--nu", "0", "--mu", "0", "--z", "2"])
        assert code == 0
        rec = json.loads(out)[0]
        assert abs(float(rec["value_re"]) - 0.5493061443340549) < 1e-12
        assert rec["value_im"] == "0"

    def test_eval_p_complex_literal(self):
        code, out, _ = run_cli(["eval-p", "--nu", "0.5+1i", "--mu", "0.25",
                                "--z", "2"])
        assert code == 0
        rec = json.loads(out)[0]
        assert abs(float(rec["value_re"]) - 0.5897855884061929) < 1e-12

    def test_missing_argument_is_usage_error(self):
        code, _, err = run_cli(["eval-q", "--nu", "0", "--mu", "0"])
        assert code == 2

    def test_numeric_domain_is_exit_3(self):
        code, _, err = run_cli(["eval-q", "--nu", "0", "--mu", "0", "--z", "0.5"])
        assert code == 3
        assert "cut" in err

    def test_grid_deterministic_bytes(self, tmp_path):
        args = ["eval-q", "--nu", "0.5", "--mu", "0", "--grid", "z:1.5:3:7",
                "--format", "csv"]
        p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run_cli(args + ["--output", str(p1)])[0] == 0
        assert run_cli(args + ["--output", str(p2)])[0] == 0
        b1, b2 = p1.read_bytes(), p2.read_bytes()
        # elapsed differs run to run; everything else must be identical
        rows1 = [",".join(line.split(",")[:-1]) for line in b1.decode().splitlines()]
        rows2 = [",".join(line.split(",")[:-1]) for line in b2.decode().splitlines()]
        assert rows1 == rows2
        assert len(rows1) == 8  # header + 7 grid rows


class TestVerify:
    def test_reciprocal_passes(self):
        code, out, _ = run_cli(["verify", "--kernel", "reciprocal",
                                "--nu", "0.5", "--z", "2", "--omega", "1.5"])
        assert code == 0
        rec = json.loads(out)[0]
        assert float(rec["residual"]) <= 1e-8

    def test_unknown_kernel(self):
        code, _, err = run_cli(["verify", "--kernel", "nope", "--nu", "0",
                                "--z", "2", "--omega", "1.5"])
        assert code == 3
        assert "unknown kernel" in err


class TestSuiteCommand:
    def test_named_suite(self):
        code, out, _ = run_cli(["suite", "--name", "representations"])
        assert code == 0
        assert "PASS representations/second_kind_integral" in out
        assert "checks passed" in out

    def test_unknown_suite(self):
        code, _, err = run_cli(["suite", "--name", "bogus"])
        assert code == 3


class TestConfigAndEnv:
    def test_config_file(self, tmp_path):
        cfg = {"command": "eval-q",
               "parameters": {"nu": "0", "mu": "0", "z": "2"},
               "tolerances": {},
               "output": {"format": "json"}}
        path = tmp_path / "run.json"
        path.write_text(json.dumps(cfg))
        code, out, _ = run_cli(["--config", str(path)])
        assert code == 0
        assert abs(float(json.loads(out)[0]["value_re"]) - math.atanh(0.5)) < 1e-12

    def test_config_unknown_key(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"command": "eval-q", "spam": 1}))
        code, _, err = run_cli(["--config", str(path)])
        assert code == 2

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("MEHLERFOCK_REL_TOL", "1e-6")
        code, out, _ = run_cli(["green-plane", "--d", "1.0", "--s", "1"])
        assert code == 0

    def test_env_and_flag_precedence(self, monkeypatch):
        monkeypatch.setenv("MEHLERFOCK_MAX_SUBDIVISIONS", "not-an-int")
        code, _, err = run_cli(["green-plane", "--d", "1.0", "--s", "1"])
        assert code == 2  # a broken override must not be silently ignored


class TestWedgeCommands:
    def test_green_wedge_point(self):
        code, out, _ = run_cli([
            "green-wedge", "--gamma", "2", "--a", "0.9", "--alpha", "0.6",
            "--b", "1.3", "--beta", "1.4", "--s", "1"])
        assert code == 0
        rec = json.loads(out)[0]
        assert 0.0 < float(rec["value_re"]) < 1.0

    def test_green_wedge_profile_grid(self):
        code, out, _ = run_cli([
            "green-wedge", "--gamma", "2", "--a", "0.9", "--alpha", "0.6",
            "--b", "1.3", "--beta", "1.4", "--s", "1",
            "--grid", "alpha:0.02:1.98:5", "--format", "csv"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 6
        vals = [float(line.split(",")[6]) for line in lines[1:]]
        assert all(v > 0 for v in vals)
        # boundary columns decay toward both wedge sides
        assert vals[0] < vals[2] and vals[-1] < vals[2]


class TestReport:
    def test_transform_residuals_report(self, tmp_path):
        code, out, _ = run_cli([
            "report", "transform-residuals", "--output-dir", str(tmp_path),
            "--nu", "0.5", "--z", "3", "--omega", "2"])
        assert code == 0
        assert (tmp_path / "transform_residuals.csv").exists()
        assert (tmp_path / "transform_residuals.png").exists()

    def test_boundary_profile_report(self, tmp_path):
        code, out, _ = run_cli([
            "report", "wedge-boundary-profile", "--output-dir", str(tmp_path),
            "--gamma", "2", "--s", "1"])
        assert code == 0
        csv_path = tmp_path / "wedge_boundary_profile.csv"
        assert csv_path.exists()
        assert (tmp_path / "wedge_boundary_profile.png").exists()
        lines = csv_path.read_text().strip().splitlines()
        assert len(lines) == 51


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "mehlerfock.cli", "eval-q", "--nu", "0",
         "--mu", "0", "--z", "2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "0.549306" in proc.stdout
