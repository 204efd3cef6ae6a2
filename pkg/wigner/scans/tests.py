"""Tests for polar grids and scan runs."""

import math
from unittest.mock import patch

import numpy as np
import pytest
from scipy.stats import chi2

from wigner import __version__
from wigner.estimator.factories import CountingConfigFactory
from wigner.lib.exceptions import (
    ConfigurationError,
    ScanPointError,
    TruncationError,
)
from wigner.quasiprob.params import SignalSpec
from wigner.scans.analysis import fit_peak, isotropy_test
from wigner.scans.grid import PolarGrid, build_polar_grid
from wigner.scans.runner import run_scan
from wigner.scans.serialization import serialize_scan


class TestBuildPolarGrid:
    def test_measured_grid(self):
        grid = build_polar_grid(20, 50, 2.0)
        assert len(grid) == 1000
        np.testing.assert_allclose(np.diff(grid.radii), 2.0 / 19)
        assert grid.radii[0] == 0.0
        assert grid.max_radius == 2.0
        assert grid.phases[0] == 0.0
        assert grid.phases[-1] < 2 * math.pi

    def test_diffused_grid(self):
        assert len(build_polar_grid(20, 40, 2.0)) == 800

    def test_single_point(self):
        grid = build_polar_grid(1, 1, 1.0)
        assert grid.radii.tolist() == [0.0]
        assert grid.phases.tolist() == [0.0]
        assert list(grid.points()) == [(0, 0, 0, 0j)]

    @pytest.mark.parametrize(
        "args", [(0, 5, 1.0), (5, 0, 1.0), (5, 5, 0.0), (5, 5, -1.0)]
    )
    def test_invalid(self, args):
        with pytest.raises(ConfigurationError):
            build_polar_grid(*args)

    def test_radii_must_increase(self):
        with pytest.raises(ConfigurationError):
            PolarGrid([0.0, 1.0, 1.0], [0.0])

    def test_phases_exclude_full_turn(self):
        with pytest.raises(ConfigurationError):
            PolarGrid([0.0], [0.0, 2 * math.pi])

    def test_points_are_radius_major(self):
        grid = build_polar_grid(2, 3, 1.0)
        indices = [(i, r, p) for i, r, p, _ in grid.points()]
        assert indices == [
            (0, 0, 0),
            (1, 0, 1),
            (2, 0, 2),
            (3, 1, 0),
            (4, 1, 1),
            (5, 1, 2),
        ]
        betas = [beta for *_, beta in grid.points()]
        third = 2 * math.pi / 3
        assert betas[4] == pytest.approx(
            complex(math.cos(third), math.sin(third))
        )


class TestRunScan:
    def test_records_and_metadata(self, channel, counting):
        grid = build_polar_grid(3, 4, 1.0)
        result = run_scan(SignalSpec.coherent(0.5), grid, channel, counting)
        assert len(result) == 12
        keys = [(r.r_idx, r.phi_idx) for r in result.records]
        assert keys == sorted(keys)
        assert len(set(keys)) == 12
        np.testing.assert_allclose(
            result.column("p_exact"), result.column("p_eq3"), atol=1e-9
        )
        metadata = result.metadata
        assert metadata["master_seed"] == counting.master_seed
        assert metadata["code_version"] == __version__
        assert metadata["channel"]["s"] == pytest.approx(-0.4488554, abs=1e-6)
        assert metadata["n_max"] > 0

    def test_vacuum_origin_is_exact(self, channel):
        grid = build_polar_grid(4, 6, 1.0)
        config = CountingConfigFactory()
        result = run_scan(SignalSpec.vacuum(), grid, channel, config)
        origin = result.records[0]
        assert origin.p_est == 2 / math.pi
        assert origin.p_se == 0.0

    def test_thread_count_does_not_change_output(self, channel, counting):
        grid = build_polar_grid(3, 5, 1.5)
        spec = SignalSpec.fock(1)
        single = run_scan(spec, grid, channel, counting, workers=1)
        pooled = run_scan(spec, grid, channel, counting, workers=4)
        assert serialize_scan(single) == serialize_scan(pooled)

    def test_include_counts(self, channel, counting):
        grid = build_polar_grid(2, 2, 1.0)
        result = run_scan(
            SignalSpec.coherent(1.0),
            grid,
            channel,
            counting,
            include_counts=True,
        )
        for record in result.records:
            assert sum(record.counts) == counting.intervals

    def test_envelope_scales_every_column(self, channel, counting):
        grid = build_polar_grid(3, 2, 1.0)
        spec = SignalSpec.coherent(0.7)
        plain = run_scan(spec, grid, channel, counting)
        damped = run_scan(spec, grid, channel, counting, gamma=0.4)
        radius = np.abs(plain.column("beta_re") + 1j * plain.column("beta_im"))
        envelope = np.exp(-0.4 * radius**2)
        for name in ("p_est", "p_se", "p_exact", "p_eq3"):
            np.testing.assert_allclose(
                damped.column(name), plain.column(name) * envelope
            )

    def test_failing_point_is_identified(self, channel, counting):
        grid = build_polar_grid(2, 2, 1.0)
        failure = TruncationError("boom", loss=1.0, tail_tol=1e-10)
        with patch(
            "wigner.scans.runner.statistics_at", side_effect=failure
        ):
            with pytest.raises(ScanPointError) as exc_info:
                run_scan(SignalSpec.vacuum(), grid, channel, counting)
        assert (exc_info.value.r_idx, exc_info.value.phi_idx) == (0, 0)
        assert exc_info.value.__cause__ is failure


class TestMeasuredScenarios:
    """Full-size scans at the measured channel and 8000 intervals."""

    def test_vacuum_peak_at_origin(self, channel):
        grid = build_polar_grid(20, 50, 2.0)
        config = CountingConfigFactory(master_seed=1)
        result = run_scan(SignalSpec.vacuum(), grid, channel, config)
        top = int(np.argmax(result.column("p_est")))
        assert result.records[top].r_idx == 0
        assert result.records[top].p_est == pytest.approx(2 / math.pi)

    def test_coherent_peak_sits_at_attenuated_amplitude(self, channel):
        grid = build_polar_grid(20, 50, 2.0)
        config = CountingConfigFactory(master_seed=2)
        result = run_scan(SignalSpec.coherent(1.0), grid, channel, config)
        peak = fit_peak(result)
        assert peak.radius == pytest.approx(
            math.sqrt(channel.efficiency), abs=2.0 / 19
        )
        assert abs(peak.height - 2 / math.pi) < 4 * peak.nearest_se

    def test_full_diffusion_is_isotropic(self, channel):
        grid = build_polar_grid(20, 40, 2.0)
        config = CountingConfigFactory(
            interval_duration_us=30.0, master_seed=3
        )
        result = run_scan(
            SignalSpec.phase_diffused(1.0), grid, channel, config
        )
        rows = isotropy_test(result)
        assert len(rows) == 20
        statistic = sum(row.chi2 for row in rows)
        dof = sum(row.dof for row in rows)
        assert chi2.sf(statistic, dof) > 0.01
