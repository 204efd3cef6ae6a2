"""Truncated Fock-space states of a single light mode.

Every value here is immutable: array fields are copied and marked
read-only on construction, so states can be shared across scan threads.

A truncated state may carry less than unit probability; the deficit is the
mass that fell above ``n_max``. It is checked against ``tail_tol`` and
reported, never renormalized away.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import poisson

from wigner.lib.config import resolve
from wigner.lib.exceptions import ConfigurationError, TruncationError

logger = logging.getLogger(__name__)

DEFAULT_TAIL_TOL = 1e-10

# Tolerances for accepting a matrix as a density matrix.
HERMITIAN_ATOL = 1e-12
PSD_ATOL = 1e-10
# Diagonal entries this far below zero are round-off and clamp to zero.
NEGATIVE_PROB_ATOL = 1e-12


def tail_tolerance(tail_tol=None):
    """Return *tail_tol*, or the configured ``WIGNER_TAIL_TOL``."""
    return resolve(tail_tol, "WIGNER_TAIL_TOL", DEFAULT_TAIL_TOL)


def _frozen_array(values, dtype):
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class FockCutoff:
    """Highest retained Fock index; the basis has ``n_max + 1`` states."""

    n_max: int

    def __post_init__(self):
        if self.n_max < 0:
            raise ConfigurationError(
                f"n_max must be non-negative, got {self.n_max}"
            )

    @property
    def dim(self):
        return self.n_max + 1

    @classmethod
    def for_mean(cls, n_bar):
        """Cutoff whose Poisson tail above ``n_max`` is below 1e-12.

        *n_bar* is the largest mean photon number in the computation.
        """
        if n_bar < 0:
            raise ConfigurationError(f"Mean photon number {n_bar} < 0")
        n_max = math.ceil(n_bar + 10.0 * math.sqrt(n_bar + 1.0) + 20.0)
        logger.debug("Cutoff n_max=%d for mean %.4g", n_max, n_bar)
        return cls(n_max)

    def enlarged(self):
        """Working cutoff for displacements: ``2·n_max + 20``."""
        return FockCutoff(2 * self.n_max + 20)


@dataclass(frozen=True)
class PhasePoint:
    """A complex phase-space coordinate (dimensionless field amplitude)."""

    value: complex

    def __post_init__(self):
        value = complex(self.value)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise ConfigurationError(f"Phase-space point {value} not finite")
        object.__setattr__(self, "value", value)

    @classmethod
    def from_polar(cls, radius, phase):
        if radius < 0:
            raise ConfigurationError(f"Radius {radius} < 0")
        return cls(radius * complex(math.cos(phase), math.sin(phase)))

    @property
    def radius(self):
        return abs(self.value)

    @property
    def phase(self):
        """Argument in ``[0, 2π)``."""
        return math.atan2(self.value.imag, self.value.real) % (2.0 * math.pi)

    def __neg__(self):
        return PhasePoint(-self.value)

    def __complex__(self):
        return self.value


@dataclass(frozen=True, eq=False)
class StateVector:
    """Fock-basis amplitudes of a pure state."""

    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "amplitudes", _frozen_array(self.amplitudes, complex)
        )

    @property
    def cutoff(self):
        return FockCutoff(len(self.amplitudes) - 1)

    @property
    def norm(self):
        """Total probability retained in the truncated basis."""
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def to_density_matrix(self):
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A single-mode state ρ as a truncated Fock-basis matrix."""

    elements: np.ndarray = field(repr=False)

    def __post_init__(self):
        elements = _frozen_array(self.elements, complex)
        if elements.ndim != 2 or elements.shape[0] != elements.shape[1]:
            raise ConfigurationError(
                f"Density matrix must be square, got shape {elements.shape}"
            )
        object.__setattr__(self, "elements", elements)

    @classmethod
    def vacuum(cls, cutoff):
        return cls.fock(0, cutoff)

    @classmethod
    def fock(cls, n, cutoff):
        if not 0 <= n <= cutoff.n_max:
            raise ConfigurationError(
                f"Fock state |{n}> outside cutoff n_max={cutoff.n_max}"
            )
        elements = np.zeros((cutoff.dim, cutoff.dim), dtype=complex)
        elements[n, n] = 1.0
        return cls(elements)

    @classmethod
    def mixture(cls, weights, states):
        """Convex combination of density matrices of equal dimension."""
        elements = sum(
            w * s.elements for w, s in zip(weights, states, strict=True)
        )
        return cls(elements)

    @property
    def cutoff(self):
        return FockCutoff(self.elements.shape[0] - 1)

    @property
    def trace(self):
        return float(np.trace(self.elements).real)

    def embedded(self, cutoff):
        """The same state zero-padded into a larger basis."""
        if cutoff.dim < self.cutoff.dim:
            raise ConfigurationError(
                f"Cannot embed n_max={self.cutoff.n_max} into "
                f"n_max={cutoff.n_max}"
            )
        elements = np.zeros((cutoff.dim, cutoff.dim), dtype=complex)
        d = self.cutoff.dim
        elements[:d, :d] = self.elements
        return DensityMatrix(elements)

    def truncated(self, cutoff):
        """The leading ``cutoff.dim`` block, without renormalizing."""
        d = cutoff.dim
        return DensityMatrix(self.elements[:d, :d])

    def validate(self, tail_tol=None):
        """Raise unless this is a valid state within *tail_tol*."""
        tail_tol = tail_tolerance(tail_tol)
        rho = self.elements
        asymmetry = np.max(np.abs(rho - rho.conj().T), initial=0.0)
        if asymmetry > HERMITIAN_ATOL:
            raise ConfigurationError(
                f"Density matrix not Hermitian (max deviation {asymmetry:.2e})"
            )
        trace = self.trace
        if trace > 1.0 + tail_tol:
            raise ConfigurationError(f"Density matrix trace {trace} > 1")
        if 1.0 - trace > tail_tol:
            raise TruncationError(
                "Density matrix trace below tolerance",
                loss=1.0 - trace,
                tail_tol=tail_tol,
            )
        smallest = float(np.linalg.eigvalsh(rho)[0])
        if smallest < -PSD_ATOL:
            raise ConfigurationError(
                f"Density matrix not positive semidefinite "
                f"(eigenvalue {smallest:.2e})"
            )
        return self


@dataclass(frozen=True, eq=False)
class PhotonStatistics:
    """Probabilities ``p_n`` of registering n photons, n = 0..n_max."""

    probs: np.ndarray = field(repr=False)

    def __post_init__(self):
        probs = np.array(self.probs, dtype=float)
        if probs.ndim != 1 or probs.size == 0:
            raise ConfigurationError("Photon statistics must be a 1-D array")
        if np.any(probs < -NEGATIVE_PROB_ATOL) or np.any(probs > 1.0 + 1e-12):
            raise ConfigurationError("Photon statistics outside [0, 1]")
        probs = np.clip(probs, 0.0, 1.0)
        probs.setflags(write=False)
        object.__setattr__(self, "probs", probs)

    def __len__(self):
        return len(self.probs)

    @property
    def total(self):
        return float(np.sum(self.probs))

    @property
    def deficit(self):
        """Probability missing from the truncated distribution."""
        return max(0.0, 1.0 - self.total)

    @property
    def mean(self):
        return float(np.dot(np.arange(len(self.probs)), self.probs))


def coherent_state(alpha, cutoff, tail_tol=None):
    """The coherent state |α⟩ truncated at *cutoff*.

    Amplitudes follow the recurrence ``c_{n+1} = c_n·α/√(n+1)`` from
    ``c_0 = exp(-|α|²/2)``. Raises ``TruncationError`` if the Poisson tail
    above ``n_max`` exceeds *tail_tol*.
    """
    tail_tol = tail_tolerance(tail_tol)
    a = complex(alpha)
    n_bar = abs(a) ** 2
    tail = float(poisson.sf(cutoff.n_max, n_bar))
    if tail > tail_tol:
        raise TruncationError(
            f"Cutoff n_max={cutoff.n_max} too small for |α|²={n_bar:.4g}",
            loss=tail,
            tail_tol=tail_tol,
        )

    amplitudes = np.empty(cutoff.dim, dtype=complex)
    amplitudes[0] = math.exp(-0.5 * n_bar)
    for n in range(cutoff.n_max):
        amplitudes[n + 1] = amplitudes[n] * a / math.sqrt(n + 1)
    return StateVector(amplitudes)


def photon_statistics(rho):
    """Diagonal of *rho*: the photon-number distribution."""
    return PhotonStatistics(np.real(np.diag(rho.elements)))


def parity_expectation(rho):
    """``Σ_n (-1)^n ρ_nn``, the expectation of the photon-number parity."""
    diagonal = np.real(np.diag(rho.elements))
    signs = np.where(np.arange(len(diagonal)) % 2 == 0, 1.0, -1.0)
    return float(np.dot(signs, diagonal))
