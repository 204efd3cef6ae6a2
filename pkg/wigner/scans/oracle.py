"""Self-checks of the simulation against its closed-form oracles.

Each check reports a residual and the tolerance it must stay under. The
``oracle_check`` command runs them all and fails when any exceeds its
tolerance.
"""

import logging
import math
from dataclasses import dataclass

from wigner.experiment.loss import parity_sum
from wigner.experiment.model import (
    LOSSLESS_SIGNAL,
    bs_approximation_error,
    scan_cutoff,
    signal_density_matrix,
    statistics_at,
)
from wigner.quasiprob.analytic import normalization_check, predicted_surface
from wigner.quasiprob.params import ChannelParams, SignalSpec
from wigner.scans.grid import build_polar_grid

logger = logging.getLogger(__name__)

IDENTITY_TOL = 1e-9
BS_TOL = 1e-10
# Allowed deviation of the halving ratio from 2.
BS_SCALING_TOL = 0.25
NORMALIZATION_TOL = 1e-6

IDENTITY_SPECS = (
    SignalSpec.vacuum(),
    SignalSpec.coherent(0.5),
    SignalSpec.coherent(complex(math.cos(0.6), math.sin(0.6))),
    SignalSpec.coherent(-1.5j),
    SignalSpec.fock(1),
)
IDENTITY_CHANNELS = (
    ChannelParams(1.0, 1.0),
    ChannelParams(0.70, 0.986),
    ChannelParams(0.5, 0.9),
)


@dataclass(frozen=True)
class OracleCheck:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self):
        return self.residual <= self.tolerance


def identity_residual(spec, channel, grid, tail_tol=None):
    """Largest |parity sum - predicted P| over the points of *grid*."""
    cutoff = scan_cutoff(spec, channel, grid.max_radius)
    rho = signal_density_matrix(spec, cutoff, tail_tol=tail_tol)
    predicted = predicted_surface(spec, grid.betas(), channel)
    return max(
        abs(
            parity_sum(statistics_at(rho, beta, channel, tail_tol=tail_tol))
            - predicted[r_idx, phi_idx]
        )
        for _, r_idx, phi_idx, beta in grid.points()
    )


def identity_checks(tail_tol=None):
    grid = build_polar_grid(5, 8, 2.0)
    return [
        OracleCheck(
            f"identity {spec.kind} α={spec.amplitude:.3g} n={spec.n} "
            f"η={channel.eta} T={channel.transmission}",
            identity_residual(spec, channel, grid, tail_tol=tail_tol),
            IDENTITY_TOL,
        )
        for spec in IDENTITY_SPECS
        for channel in IDENTITY_CHANNELS
    ]


def beam_splitter_checks(transmission=0.986, probe=1.0):
    """Coherent signals match the exact beam splitter; the lossless-signal
    error of a one-photon state halves with ``1 - T``.
    """
    checks = [
        OracleCheck(
            f"beam splitter coherent α={alpha} T={transmission}",
            bs_approximation_error(
                SignalSpec.coherent(alpha), probe, transmission
            ),
            BS_TOL,
        )
        for alpha in (0.5, 1.0)
    ]
    fock = SignalSpec.fock(1)
    full = bs_approximation_error(
        fock, probe, transmission, model=LOSSLESS_SIGNAL
    )
    half = bs_approximation_error(
        fock, probe, 1.0 - (1.0 - transmission) / 2, model=LOSSLESS_SIGNAL
    )
    checks.append(
        OracleCheck(
            "beam splitter lossless-signal error ratio on halving 1-T",
            abs(full / half / 2.0 - 1.0),
            BS_SCALING_TOL,
        )
    )
    return checks


def normalization_checks(channel=None, radial_extent=6.0):
    channel = channel or ChannelParams(0.70, 0.986)
    return [
        OracleCheck(
            f"normalization {spec.kind} α={spec.amplitude:.3g}",
            abs(normalization_check(spec, channel, radial_extent) - 1.0),
            NORMALIZATION_TOL,
        )
        for spec in (SignalSpec.vacuum(), SignalSpec.coherent(1.0))
    ]


def run_oracle_checks(tail_tol=None):
    checks = [
        *identity_checks(tail_tol=tail_tol),
        *beam_splitter_checks(),
        *normalization_checks(),
    ]
    failed = [c for c in checks if not c.passed]
    logger.info("Oracle checks: %d run, %d failed", len(checks), len(failed))
    return checks
