"""Checks run on a finished scan: estimator-vs-oracle agreement, surface
normalization, the location of a coherent peak and rotational symmetry.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import curve_fit
from scipy.stats import chi2

from wigner.lib.exceptions import ConfigurationError


@dataclass(frozen=True)
class ComparisonReport:
    n_points: int
    n_with_se: int
    max_abs_z: float
    frac_z_gt_2: float
    frac_z_gt_3: float
    identity_rms: float
    normalization: float

    def as_dict(self):
        return dict(self.__dict__)


def _z_scores(result):
    se = result.column("p_se")
    mask = se > 0
    z = (result.column("p_est")[mask] - result.column("p_exact")[mask]) / se[
        mask
    ]
    return z


def scan_normalization(result):
    """Polar-weighted sum ``Σ P_exact·r·Δr·Δφ`` over the scan.

    Needs uniformly spaced radii and phases; returns nan for a single
    radius.
    """
    r_idx = result.column("r_idx")
    n_radii = int(r_idx.max()) + 1
    n_phases = int(result.column("phi_idx").max()) + 1
    if n_radii < 2:
        return math.nan
    radius = np.abs(result.column("beta_re") + 1j * result.column("beta_im"))
    radii = np.array([radius[r_idx == i].mean() for i in range(n_radii)])
    dr = radii[1] - radii[0]
    dphi = 2.0 * math.pi / n_phases
    return float(np.sum(result.column("p_exact") * radius) * dr * dphi)


def compare_scan(result):
    """Summarize estimate-vs-exact z-scores and the identity residual."""
    if not len(result):
        raise ConfigurationError("Cannot compare an empty scan")
    z = np.abs(_z_scores(result))
    residual = result.column("p_exact") - result.column("p_eq3")
    n = len(z)
    return ComparisonReport(
        n_points=len(result),
        n_with_se=n,
        max_abs_z=float(z.max()) if n else 0.0,
        frac_z_gt_2=float(np.mean(z > 2)) if n else 0.0,
        frac_z_gt_3=float(np.mean(z > 3)) if n else 0.0,
        identity_rms=float(np.sqrt(np.mean(residual**2))),
        normalization=scan_normalization(result),
    )


@dataclass(frozen=True)
class PeakFit:
    center: complex
    height: float
    width: float
    nearest_se: float

    @property
    def radius(self):
        return abs(self.center)


def _gaussian(xy, height, x0, y0, width):
    x, y = xy
    return height * np.exp(-((x - x0) ** 2 + (y - y0) ** 2) / (2 * width**2))


def fit_peak(result):
    """Least-squares 2-D Gaussian fit to the estimated surface."""
    x = result.column("beta_re")
    y = result.column("beta_im")
    p = result.column("p_est")
    top = int(np.argmax(p))
    guess = (p[top], x[top], y[top], 0.5)
    params, _ = curve_fit(_gaussian, (x, y), p, p0=guess)
    height, x0, y0, width = params
    center = complex(x0, y0)
    nearest = int(np.argmin(np.abs(x + 1j * y - center)))
    return PeakFit(
        center=center,
        height=float(height),
        width=abs(float(width)),
        nearest_se=float(result.column("p_se")[nearest]),
    )


@dataclass(frozen=True)
class IsotropyRow:
    r_idx: int
    radius: float
    chi2: float
    dof: int
    p_value: float


def isotropy_test(result):
    """χ² test that P is constant around each circle of the grid.

    Radii where any point has zero standard error are skipped.
    """
    rows = []
    r_idx = result.column("r_idx")
    p = result.column("p_est")
    se = result.column("p_se")
    radius = np.abs(result.column("beta_re") + 1j * result.column("beta_im"))
    for i in np.unique(r_idx):
        ring = r_idx == i
        if ring.sum() < 2 or np.any(se[ring] <= 0):
            continue
        weights = 1.0 / se[ring] ** 2
        mean = np.sum(weights * p[ring]) / np.sum(weights)
        statistic = float(np.sum(weights * (p[ring] - mean) ** 2))
        dof = int(ring.sum()) - 1
        rows.append(
            IsotropyRow(
                r_idx=int(i),
                radius=float(radius[ring].mean()),
                chi2=statistic,
                dof=dof,
                p_value=float(chi2.sf(statistic, dof)),
            )
        )
    return rows
