"""Tests for the scan, analytic, compare and oracle_check commands."""

import hashlib
import json
from io import StringIO
from unittest.mock import patch

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from wigner.lib.exceptions import TruncationError
from wigner.scans.oracle import OracleCheck

SMALL_SCAN = ["--radii", "3", "--phases", "4", "--intervals", "200"]


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO())
    return out.getvalue()


class TestScanCommand:
    def test_csv_to_stdout(self):
        output = run("scan", "--state", "vacuum", *SMALL_SCAN)
        lines = output.splitlines()
        assert lines[0] == "r_idx,phi_idx,beta_re,beta_im,p_est,p_se,p_exact,p_eq3"
        assert len(lines) == 13

    def test_repeat_invocations_are_identical(self):
        args = ("scan", "--state", "coherent", "--seed", "99", *SMALL_SCAN)
        digests = {
            hashlib.sha256(run(*args, "--workers", workers).encode()).digest()
            for workers in ("1", "1", "8")
        }
        assert len(digests) == 1

    def test_writes_file(self, tmp_path):
        path = tmp_path / "scan.json"
        output = run(
            "scan",
            "--state",
            "fock",
            "--format",
            "json",
            "--include-counts",
            "--out",
            str(path),
            *SMALL_SCAN,
        )
        assert "Wrote 12 records" in output
        document = json.loads(path.read_text())
        assert document["metadata"]["spec"]["kind"] == "fock"
        assert sum(document["records"][0]["counts"]) == 200

    def test_scenario_sets_phases_and_interval(self):
        output = run(
            "scan",
            "--scenario",
            "phase-diffused",
            "--radii",
            "2",
            "--intervals",
            "50",
            "--format",
            "json",
        )
        metadata = json.loads(output)["metadata"]
        assert len(metadata["grid"]["phases"]) == 40
        assert metadata["config"]["interval_duration_us"] == 30.0
        assert metadata["spec"]["phase_noise"]["distribution"] == "uniform"

    def test_invalid_configuration_exits_1(self):
        with pytest.raises(CommandError) as exc_info:
            run("scan", "--eta", "1.5", *SMALL_SCAN)
        assert exc_info.value.returncode == 1

    @pytest.mark.parametrize("command", ["scan", "analytic"])
    def test_zero_phases_exits_1(self, command):
        with pytest.raises(CommandError) as exc_info:
            run(command, "--scenario", "vacuum", "--radii", "3", "--phases", "0")
        assert exc_info.value.returncode == 1

    def test_bad_choice_exits_1(self):
        with pytest.raises(CommandError) as exc_info:
            run("scan", "--state", "squeezed")
        assert exc_info.value.returncode == 1

    def test_gaussian_noise_needs_width(self):
        with pytest.raises(CommandError) as exc_info:
            run(
                "scan",
                "--state",
                "phase-diffused",
                "--phase-noise",
                "gaussian",
                *SMALL_SCAN,
            )
        assert exc_info.value.returncode == 1

    def test_numerical_failure_exits_2(self):
        failure = TruncationError("leak", loss=1e-3, tail_tol=1e-10)
        with patch(
            "wigner.scans.management.commands.scan.run_scan",
            side_effect=failure,
        ):
            with pytest.raises(CommandError) as exc_info:
                run("scan", *SMALL_SCAN)
        assert exc_info.value.returncode == 2

    def test_unwritable_output_exits_3(self, tmp_path):
        with pytest.raises(CommandError) as exc_info:
            run("scan", "--out", str(tmp_path / "no" / "scan.csv"), *SMALL_SCAN)
        assert exc_info.value.returncode == 3


class TestAnalyticCommand:
    def test_json_metadata(self):
        output = run(
            "analytic", "--state", "coherent", "--radii", "4", "--format", "json"
        )
        document = json.loads(output)
        assert document["metadata"]["channel"]["s"] == pytest.approx(
            -0.4488554, abs=1e-6
        )
        assert 0.5 < document["metadata"]["normalization"] <= 1.0
        assert len(document["records"]) == 4 * 50

    def test_csv(self):
        lines = run("analytic", "--radii", "2", "--phases", "3").splitlines()
        assert lines[0] == "r_idx,phi_idx,beta_re,beta_im,p_eq3"
        assert len(lines) == 7


class TestCompareCommand:
    def test_reports_scan_file(self, tmp_path):
        path = tmp_path / "scan.csv"
        run(
            "scan",
            "--state",
            "coherent",
            "--radii",
            "6",
            "--phases",
            "12",
            "--intervals",
            "2000",
            "--out",
            str(path),
        )
        output = run("compare", str(path), "--fit-peak", "--isotropy")
        assert "identity RMS" in output
        assert "peak centre" in output

    def test_missing_file_exits_3(self, tmp_path):
        with pytest.raises(CommandError) as exc_info:
            run("compare", str(tmp_path / "absent.csv"))
        assert exc_info.value.returncode == 3

    def test_garbage_file_exits_1(self, tmp_path):
        path = tmp_path / "scan.csv"
        path.write_text("not,a,scan\n")
        with pytest.raises(CommandError) as exc_info:
            run("compare", str(path))
        assert exc_info.value.returncode == 1


class TestOracleCheckCommand:
    def test_all_checks_pass(self):
        output = run("oracle_check")
        assert "FAIL" not in output
        assert "checks passed" in output

    def test_failed_check_exits_2(self):
        checks = [OracleCheck("broken", 1.0, 1e-9)]
        with patch(
            "wigner.scans.management.commands.oracle_check.run_oracle_checks",
            return_value=checks,
        ):
            with pytest.raises(CommandError) as exc_info:
                run("oracle_check")
        assert exc_info.value.returncode == 2
