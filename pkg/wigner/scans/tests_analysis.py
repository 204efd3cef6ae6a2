import math

import numpy as np
import pytest

from wigner.lib.exceptions import ConfigurationError
from wigner.quasiprob.analytic import predicted_surface
from wigner.quasiprob.factories import ChannelParamsFactory
from wigner.quasiprob.params import SignalSpec
from wigner.scans.analysis import (
    compare_scan,
    fit_peak,
    isotropy_test,
    scan_normalization,
)
from wigner.scans.grid import build_polar_grid
from wigner.scans.runner import ScanRecord, ScanResult


def surface_result(values, grid, std_error=0.01, offsets=None):
    """A result whose estimate equals the exact surface plus *offsets*."""
    records = []
    for index, r_idx, phi_idx, beta in grid.points():
        exact = float(values[r_idx, phi_idx])
        offset = 0.0 if offsets is None else offsets[index]
        records.append(
            ScanRecord(
                r_idx=r_idx,
                phi_idx=phi_idx,
                beta_re=beta.real,
                beta_im=beta.imag,
                p_est=exact + offset,
                p_se=std_error,
                p_exact=exact,
                p_eq3=exact,
            )
        )
    return ScanResult(tuple(records), {})


class TestCompareScan:
    def test_z_scores(self):
        grid = build_polar_grid(2, 2, 1.0)
        values = np.zeros((2, 2))
        result = surface_result(
            values, grid, std_error=0.1, offsets=[0.0, 0.25, -0.35, 0.05]
        )
        report = compare_scan(result)
        assert report.n_points == 4
        assert report.n_with_se == 4
        assert report.max_abs_z == pytest.approx(3.5)
        assert report.frac_z_gt_2 == 0.5
        assert report.frac_z_gt_3 == 0.25
        assert report.identity_rms == 0.0

    def test_zero_error_points_are_skipped(self):
        grid = build_polar_grid(1, 3, 1.0)
        result = surface_result(np.ones((1, 3)), grid, std_error=0.0)
        report = compare_scan(result)
        assert report.n_with_se == 0
        assert report.max_abs_z == 0.0

    def test_empty_scan(self):
        with pytest.raises(ConfigurationError):
            compare_scan(ScanResult((), {}))


@pytest.mark.parametrize(
    "spec", [SignalSpec.vacuum(), SignalSpec.coherent(0.8j)]
)
def test_scan_normalization(spec):
    grid = build_polar_grid(31, 64, 3.5)
    channel = ChannelParamsFactory()
    values = predicted_surface(spec, grid.betas(), channel)
    result = surface_result(values, grid)
    assert scan_normalization(result) == pytest.approx(1.0, abs=0.02)


def test_scan_normalization_needs_two_radii():
    grid = build_polar_grid(1, 4, 1.0)
    assert math.isnan(scan_normalization(surface_result(np.ones((1, 4)), grid)))


def test_fit_peak_recovers_centre():
    grid = build_polar_grid(15, 36, 2.0)
    centre = 0.9 * np.exp(0.7j)
    betas = grid.betas()
    values = 0.6 * np.exp(-np.abs(betas - centre) ** 2 / (2 * 0.4**2))
    peak = fit_peak(surface_result(values, grid))
    assert peak.center == pytest.approx(centre, abs=1e-6)
    assert peak.height == pytest.approx(0.6, abs=1e-6)
    assert peak.width == pytest.approx(0.4, abs=1e-6)
    assert peak.radius == pytest.approx(0.9, abs=1e-6)
    assert peak.nearest_se == 0.01


class TestIsotropy:
    def test_constant_rings(self):
        grid = build_polar_grid(3, 8, 1.0)
        values = np.array([[0.5] * 8, [0.4] * 8, [0.1] * 8])
        rows = isotropy_test(surface_result(values, grid))
        assert [row.r_idx for row in rows] == [0, 1, 2]
        assert all(row.chi2 == pytest.approx(0.0) for row in rows)
        assert all(row.dof == 7 for row in rows)
        assert all(row.p_value == pytest.approx(1.0) for row in rows)

    def test_anisotropic_ring_is_flagged(self):
        grid = build_polar_grid(2, 8, 1.0)
        values = np.vstack([np.zeros(8), 0.1 * np.cos(grid.phases)])
        rows = isotropy_test(surface_result(values, grid))
        assert rows[1].p_value < 1e-6

    def test_rings_without_error_are_skipped(self):
        grid = build_polar_grid(2, 4, 1.0)
        result = surface_result(np.zeros((2, 4)), grid, std_error=0.0)
        assert isotropy_test(result) == []
