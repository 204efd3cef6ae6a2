"""Displacement operators, displaced parity and point-wise Wigner values.

Matrix elements use the closed form

    ⟨m|D(α)|n⟩ = √(n!/m!) α^(m-n) e^(-|α|²/2) L_n^(m-n)(|α|²),   m ≥ n,

with ⟨m|D(α)|n⟩ = conj(⟨n|D(-α)|m⟩) above the diagonal. The Laguerre
polynomials are never formed directly: each diagonal k = m - n runs the
three-term recurrence on ``g_n = √(n! k!/(n+k)!)·L_n^(k)``, which stays
O(1) for the orders used here. Above ``LOG_SPLIT_THRESHOLD`` the
recurrence is rescaled as it goes and magnitudes are combined in the log
domain.

Sign convention: ``apply_displacement(rho, α)`` returns D†(α)ρD(α), which
moves a coherent state |α₀⟩ to |α₀ - α⟩. The Wigner function is then
``(2/π)·parity(D†(α)ρD(α))``.
"""

import logging
import math

import numpy as np
from scipy.special import gammaln

from wigner.fock.states import (
    DensityMatrix,
    FockCutoff,
    parity_expectation,
    tail_tolerance,
)
from wigner.lib.exceptions import TruncationError

logger = logging.getLogger(__name__)

# |α|² above which the Laguerre recurrence runs in log-magnitude form.
LOG_SPLIT_THRESHOLD = 30.0
# Rescale the recurrence once values pass this magnitude.
RESCALE_LIMIT = 1e150


def _lower_triangle(alpha: complex, dim: int) -> np.ndarray:
    """Elements ⟨n+k|D(α)|n⟩ for every k ≥ 0, placed on the lower triangle."""
    x = abs(alpha) ** 2
    k = np.arange(dim)
    log_split = x > LOG_SPLIT_THRESHOLD

    with np.errstate(divide="ignore"):
        log_prefactor = (
            k * np.log(abs(alpha)) - 0.5 * x - 0.5 * gammaln(k + 1)
        )
    # α = 0 leaves only the diagonal; 0·log(0) is nan for k = 0.
    log_prefactor[0] = -0.5 * x
    phase = np.exp(1j * k * np.angle(alpha))
    prefactor = np.exp(log_prefactor) * phase

    lower = np.zeros((dim, dim), dtype=complex)
    g_prev = np.zeros(dim)
    g = np.ones(dim)
    log_scale = np.zeros(dim)
    for n in range(dim):
        width = dim - n
        rows = n + k[:width]
        if log_split:
            with np.errstate(divide="ignore"):
                magnitude = np.exp(
                    log_prefactor[:width]
                    + log_scale[:width]
                    + np.log(np.abs(g[:width]))
                )
            lower[rows, n] = np.sign(g[:width]) * magnitude * phase[:width]
        else:
            lower[rows, n] = prefactor[:width] * g[:width]

        g_next = (
            (2 * n + 1 + k - x) * g - np.sqrt(n * (n + k)) * g_prev
        ) / np.sqrt((n + 1) * (n + 1 + k))
        g_prev, g = g, g_next
        if log_split:
            scale = np.maximum(np.abs(g), np.abs(g_prev))
            big = scale > RESCALE_LIMIT
            if np.any(big):
                g[big] /= scale[big]
                g_prev[big] /= scale[big]
                log_scale[big] += np.log(scale[big])
    return lower


def displacement_matrix(alpha, cutoff):
    """⟨m|D(α)|n⟩ for m, n = 0..n_max.

    Unitary only in the infinite-dimensional limit; elements near the
    cutoff are exact but the truncated matrix is not.
    """
    a = complex(alpha)
    dim = cutoff.dim
    lower = _lower_triangle(a, dim)
    upper = _lower_triangle(-a, dim).conj().T
    return np.tril(lower) + np.triu(upper, 1)


def apply_displacement(rho, alpha, tail_tol=None):
    """D†(α)ρD(α), computed on an enlarged basis and truncated back.

    Raises ``TruncationError`` if more than *tail_tol* of the probability
    ends up above the declared cutoff.
    """
    tail_tol = tail_tolerance(tail_tol)
    cutoff = rho.cutoff
    work = cutoff.enlarged()
    d = displacement_matrix(alpha, work)
    displaced = d.conj().T @ rho.embedded(work).elements @ d
    kept = displaced[: cutoff.dim, : cutoff.dim]

    loss = rho.trace - float(np.trace(kept).real)
    if loss > tail_tol:
        raise TruncationError(
            f"Displacement by {complex(alpha):.4g} leaves n_max="
            f"{cutoff.n_max}",
            loss=loss,
            tail_tol=tail_tol,
        )
    logger.debug(
        "Displaced by %s: truncation loss %.2e (working n_max=%d)",
        complex(alpha),
        loss,
        work.n_max,
    )
    return DensityMatrix(0.5 * (kept + kept.conj().T))


def wigner_point(rho, alpha, tail_tol=None):
    """W(α) = (2/π)·⟨D(α) Π D†(α)⟩, exact up to truncation."""
    displaced = apply_displacement(rho, alpha, tail_tol=tail_tol)
    return 2.0 / math.pi * parity_expectation(displaced)


def displaced_cutoff(n_bar, displacement):
    """Cutoff for a state of mean *n_bar* displaced by *displacement*.

    Bounds the displaced mean by ``(√n̄ + |β|)²``, which covers the signal
    mean, ``|β|²`` and the cross term.
    """
    return FockCutoff.for_mean((math.sqrt(n_bar) + abs(displacement)) ** 2)
