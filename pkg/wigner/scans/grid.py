"""Polar grids of phase-space points β = r·e^(iφ)."""

import math
from dataclasses import dataclass, field

import numpy as np

from wigner.lib.exceptions import ConfigurationError


@dataclass(frozen=True, eq=False)
class PolarGrid:
    """Radii and phases spanning the scan.

    ``n_vac_scale`` converts instrument units to |β| = √n_vac; it is
    carried as metadata.
    """

    radii: np.ndarray = field(repr=False)
    phases: np.ndarray = field(repr=False)
    n_vac_scale: float = 1.0

    def __post_init__(self):
        radii = np.array(self.radii, dtype=float)
        phases = np.array(self.phases, dtype=float)
        if radii.size == 0 or phases.size == 0:
            raise ConfigurationError("Grid needs at least one radius and phase")
        if radii[0] < 0 or np.any(np.diff(radii) <= 0):
            raise ConfigurationError(
                "Radii must be non-negative and strictly increasing"
            )
        if (
            phases[0] < 0
            or phases[-1] >= 2.0 * math.pi
            or np.any(np.diff(phases) <= 0)
        ):
            raise ConfigurationError(
                "Phases must be strictly increasing within [0, 2π)"
            )
        if self.n_vac_scale <= 0:
            raise ConfigurationError(f"n_vac_scale {self.n_vac_scale} <= 0")
        radii.setflags(write=False)
        phases.setflags(write=False)
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "phases", phases)

    def __len__(self):
        return len(self.radii) * len(self.phases)

    @property
    def max_radius(self):
        return float(self.radii[-1])

    def betas(self):
        """Grid points as a (radii, phases) complex array."""
        return self.radii[:, None] * np.exp(1j * self.phases[None, :])

    def points(self):
        """``(point_index, r_idx, phi_idx, beta)``, radius-major."""
        betas = self.betas()
        n_phases = len(self.phases)
        for r_idx in range(len(self.radii)):
            for phi_idx in range(n_phases):
                yield (
                    r_idx * n_phases + phi_idx,
                    r_idx,
                    phi_idx,
                    complex(betas[r_idx, phi_idx]),
                )

    def as_dict(self):
        return {
            "radii": self.radii.tolist(),
            "phases": self.phases.tolist(),
            "n_vac_scale": self.n_vac_scale,
        }


def build_polar_grid(n_radii, n_phases, max_radius, n_vac_scale=1.0):
    """Uniform radii on ``[0, max_radius]`` and phases on ``[0, 2π)``.

    Both radial end points are included when there is more than one
    radius; a single radius sits at the origin.
    """
    if n_radii < 1 or n_phases < 1:
        raise ConfigurationError(
            f"Grid needs positive counts, got {n_radii}x{n_phases}"
        )
    if max_radius <= 0:
        raise ConfigurationError(f"max_radius {max_radius} <= 0")
    radii = np.linspace(0.0, max_radius, n_radii) if n_radii > 1 else [0.0]
    phases = 2.0 * math.pi * np.arange(n_phases) / n_phases
    return PolarGrid(radii, phases, n_vac_scale=n_vac_scale)
