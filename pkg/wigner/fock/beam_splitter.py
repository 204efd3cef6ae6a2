"""Exact two-mode beam-splitter model of displacement by interference.

The signal (mode a) and a coherent probe (mode b) enter a beam splitter
whose transmitted port carries ``√T·a + i√(1-T)·b``. The unitary
``exp(iθ(a†b + ab†))`` with ``cos θ = √T`` conserves the total photon
number K, so it is applied block by block on the (K+1)-dimensional
subspaces: no truncation error enters the two-mode evolution itself.
The reflected port is traced out.
"""

import logging
import math

import numpy as np
from scipy.linalg import eigh_tridiagonal

from wigner.fock.states import (
    DensityMatrix,
    FockCutoff,
    coherent_state,
    tail_tolerance,
)
from wigner.lib.exceptions import ConfigurationError, TruncationError

logger = logging.getLogger(__name__)


def _block_unitary(theta, total):
    """exp(iθ(a†b + ab†)) on the states |j, total-j⟩, j = 0..total."""
    if total == 0:
        return np.ones((1, 1), dtype=complex)
    j = np.arange(total)
    hopping = np.sqrt((j + 1.0) * (total - j))
    eigenvalues, vectors = eigh_tridiagonal(np.zeros(total + 1), hopping)
    return (vectors * np.exp(1j * theta * eigenvalues)) @ vectors.T


def two_mode_bs_oracle(
    rho_signal, probe_alpha, transmission, cutoff, tail_tol=None
):
    """Reduced state of the transmitted port, truncated at *cutoff*."""
    tail_tol = tail_tolerance(tail_tol)
    if not 0.0 < transmission <= 1.0:
        raise ConfigurationError(
            f"Transmission must be in (0, 1], got {transmission}"
        )
    theta = math.acos(math.sqrt(transmission))

    probe = coherent_state(
        probe_alpha,
        FockCutoff.for_mean(abs(complex(probe_alpha)) ** 2),
        tail_tol=tail_tol,
    ).amplitudes

    # Split ρ into weighted pure components so only amplitudes evolve.
    weights, vectors = np.linalg.eigh(rho_signal.elements)
    keep = weights > 0.0
    weights, vectors = weights[keep], vectors[:, keep].T

    d_signal, d_probe = rho_signal.cutoff.dim, len(probe)
    top = d_signal + d_probe - 2
    joint = np.einsum("rj,m->rjm", vectors, probe)
    out = np.zeros((len(weights), top + 1, top + 1), dtype=complex)
    for total in range(top + 1):
        j = np.arange(max(0, total - d_probe + 1), min(total, d_signal - 1) + 1)
        block_in = np.zeros((len(weights), total + 1), dtype=complex)
        block_in[:, j] = joint[:, j, total - j]
        block_out = block_in @ _block_unitary(theta, total).T
        j_out = np.arange(total + 1)
        out[:, j_out, total - j_out] = block_out

    reduced = np.einsum("r,rjm,rkm->jk", weights, out, out.conj())
    kept = reduced[: cutoff.dim, : cutoff.dim]

    supplied = rho_signal.trace * float(np.sum(np.abs(probe) ** 2))
    loss = supplied - float(np.trace(kept).real)
    if loss > tail_tol:
        raise TruncationError(
            f"Beam-splitter output exceeds n_max={cutoff.n_max}",
            loss=loss,
            tail_tol=tail_tol,
        )
    logger.debug(
        "Beam splitter T=%.4g, probe %s: output loss %.2e",
        transmission,
        complex(probe_alpha),
        loss,
    )
    return DensityMatrix(0.5 * (kept + kept.conj().T))
