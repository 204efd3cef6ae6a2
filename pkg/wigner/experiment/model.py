"""Photon statistics the detector records at a phase-space grid point.

The signal is displaced by ``β/√(ηT)`` and then thinned with the overall
efficiency ηT, so a coherent signal α₀ yields Poisson counts of mean
``|β - √(ηT)·α₀|²``. The parity sum of these statistics reproduces the
s-ordered quasidistribution exactly (up to truncation).
"""

import logging
import math

import numpy as np

from wigner.experiment.loss import LossChannel, loss_transform
from wigner.fock.beam_splitter import two_mode_bs_oracle
from wigner.fock.displacement import apply_displacement, displaced_cutoff
from wigner.fock.states import (
    DensityMatrix,
    coherent_state,
    photon_statistics,
)
from wigner.lib.exceptions import ConfigurationError
from wigner.quasiprob.params import SignalKind

logger = logging.getLogger(__name__)

DISPLACEMENT_LOSS = "displacement_loss"
LOSSLESS_SIGNAL = "lossless_signal"


def signal_density_matrix(spec, cutoff, tail_tol=None):
    """ρ of *spec* in the basis of *cutoff*.

    Phase-diffused states are the quadrature mixture of rotated coherent
    states; rotating |α⟩ by φ multiplies ρ_mn by e^(i(m-n)φ).
    """
    match spec.kind:
        case SignalKind.VACUUM:
            return DensityMatrix.vacuum(cutoff)
        case SignalKind.FOCK:
            return DensityMatrix.fock(spec.n, cutoff)
        case SignalKind.COHERENT:
            return coherent_state(
                spec.amplitude, cutoff, tail_tol=tail_tol
            ).to_density_matrix()
        case SignalKind.PHASE_DIFFUSED:
            base = coherent_state(
                spec.amplitude, cutoff, tail_tol=tail_tol
            ).to_density_matrix()
            index = np.arange(cutoff.dim)
            offset = index[:, None] - index[None, :]

            def evaluate(phases):
                return base.elements[None] * np.exp(
                    1j * offset[None] * phases[:, None, None]
                )

            return DensityMatrix(spec.phase_noise.average(evaluate))
    raise ConfigurationError(f"Unknown signal kind {spec.kind}")


def scan_cutoff(spec, channel, max_radius):
    """One cutoff large enough for every point with ``|β| ≤ max_radius``."""
    return displaced_cutoff(
        spec.mean_photons, max_radius / math.sqrt(channel.efficiency)
    )


def statistics_at(rho, beta, channel, tail_tol=None):
    """Counts distribution for signal *rho* probed at *beta*."""
    efficiency = channel.efficiency
    displaced = apply_displacement(
        rho, complex(beta) / math.sqrt(efficiency), tail_tol=tail_tol
    )
    return loss_transform(photon_statistics(displaced), LossChannel(efficiency))


def displaced_statistics(spec, beta, channel, cutoff=None, tail_tol=None):
    """Photon statistics p_n(β) recorded for *spec* through *channel*.

    Without a *cutoff*, one is chosen to hold the displaced signal.
    """
    if cutoff is None:
        cutoff = scan_cutoff(spec, channel, abs(complex(beta)))
    rho = signal_density_matrix(spec, cutoff, tail_tol=tail_tol)
    return statistics_at(rho, beta, channel, tail_tol=tail_tol)


def bs_approximation_error(
    spec,
    probe_alpha,
    transmission,
    cutoff=None,
    model=DISPLACEMENT_LOSS,
    tail_tol=None,
):
    """Max difference between exact beam-splitter and modelled statistics.

    The exact side traces the reflected port of the two-mode evolution.
    ``displacement_loss`` displaces the signal by ``i√((1-T)/T)·α_p`` and
    thins it with T; ``lossless_signal`` displaces by ``i√(1-T)·α_p`` and
    ignores the signal's attenuation.
    """
    probe = complex(probe_alpha)
    match model:
        case "displacement_loss":
            shift = 1j * math.sqrt((1.0 - transmission) / transmission) * probe
            efficiency = transmission
        case "lossless_signal":
            shift = 1j * math.sqrt(1.0 - transmission) * probe
            efficiency = 1.0
        case _:
            raise ConfigurationError(f"Unknown beam-splitter model {model!r}")

    if cutoff is None:
        cutoff = displaced_cutoff(spec.mean_photons, abs(shift))
    rho = signal_density_matrix(spec, cutoff, tail_tol=tail_tol)

    exact = photon_statistics(
        two_mode_bs_oracle(rho, probe, transmission, cutoff, tail_tol=tail_tol)
    )
    # apply_displacement(ρ, -δ) moves |α₀⟩ to |α₀ + δ⟩.
    modelled = loss_transform(
        photon_statistics(apply_displacement(rho, -shift, tail_tol=tail_tol)),
        LossChannel(efficiency),
    )
    error = float(np.max(np.abs(exact.probs - modelled.probs)))
    logger.debug(
        "Beam-splitter model %s at T=%.4g: error %.3e", model, transmission, error
    )
    return error
