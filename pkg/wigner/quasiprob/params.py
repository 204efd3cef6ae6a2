"""Parameter types shared by the analytic and simulated models."""

import math
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np
from scipy.stats import norm

from wigner.lib.exceptions import ConfigurationError
from wigner.lib.quadrature import (
    adaptive,
    circle_average_nodes,
    gauss_legendre,
)


@dataclass(frozen=True)
class OrderingParam:
    """Ordering parameter s of W(α; s). s = 0 is Wigner, s = -1 is Q."""

    s: float

    def __post_init__(self):
        if not self.s <= 1.0:
            raise ConfigurationError(f"Ordering parameter s={self.s} > 1")

    def __float__(self):
        return float(self.s)


@dataclass(frozen=True)
class ChannelParams:
    """Detector efficiency η and beam-splitter power transmission T."""

    eta: float
    transmission: float

    def __post_init__(self):
        for name in ("eta", "transmission"):
            value = getattr(self, name)
            if not 0.0 < value <= 1.0:
                raise ConfigurationError(f"{name} must be in (0, 1], got {value}")

    @property
    def efficiency(self):
        """Overall efficiency ηT seen by the signal."""
        return self.eta * self.transmission


class NoiseDistribution(StrEnum):
    NONE = "none"
    UNIFORM = "uniform"
    # Phase of a sinusoidally driven mirror sampled at a random time.
    ARCSINE = "arcsine"
    WRAPPED_GAUSSIAN = "wrapped_gaussian"


@dataclass(frozen=True)
class PhaseNoiseModel:
    """Distribution of a random phase offset applied to the signal.

    ``width`` is the half-width for uniform and arcsine noise and the
    standard deviation for wrapped Gaussian noise, in radians. A uniform
    half-width of π is full phase diffusion.
    """

    distribution: NoiseDistribution = NoiseDistribution.NONE
    width: float = 0.0

    def __post_init__(self):
        object.__setattr__(
            self, "distribution", NoiseDistribution(self.distribution)
        )
        if self.width < 0:
            raise ConfigurationError(f"Noise width {self.width} < 0")
        if (
            self.distribution
            in (NoiseDistribution.UNIFORM, NoiseDistribution.ARCSINE)
            and self.width > math.pi
        ):
            raise ConfigurationError(
                f"Half-width {self.width} exceeds π for {self.distribution}"
            )

    @property
    def is_trivial(self):
        return self.distribution == NoiseDistribution.NONE or self.width == 0

    def nodes(self, order):
        """Phases and weights (summing to one) of an *order*-point rule."""
        if self.is_trivial:
            return np.zeros(1), np.ones(1)
        match self.distribution:
            case NoiseDistribution.UNIFORM if self.width >= math.pi:
                return circle_average_nodes(order)
            case NoiseDistribution.UNIFORM:
                phases, weights = gauss_legendre(order, -self.width, self.width)
                return phases, weights / (2.0 * self.width)
            case NoiseDistribution.ARCSINE:
                u, weights = circle_average_nodes(order)
                return self.width * np.sin(u), weights
            case NoiseDistribution.WRAPPED_GAUSSIAN:
                phases, _ = circle_average_nodes(order)
                phases = phases - math.pi
                wraps = np.arange(-self._wrap_count(), self._wrap_count() + 1)
                density = norm.pdf(
                    phases[:, None] + 2.0 * math.pi * wraps[None, :],
                    scale=self.width,
                ).sum(axis=1)
                return phases, density / density.sum()
        raise ConfigurationError(f"Unknown distribution {self.distribution}")

    def _wrap_count(self):
        return math.ceil(6.0 * self.width / (2.0 * math.pi)) + 1

    def average(self, evaluate, *, tol=None, max_order=None):
        """Average ``evaluate(phases)`` over this distribution.

        *evaluate* maps an array of phases to an array whose leading axis
        runs over the phases. The order doubles until converged.
        """

        def at_order(order):
            phases, weights = self.nodes(order)
            return np.tensordot(weights, evaluate(phases), axes=1)

        if self.is_trivial:
            return at_order(1)
        value, _ = adaptive(at_order, tol=tol, max_order=max_order)
        return value


class SignalKind(StrEnum):
    VACUUM = "vacuum"
    COHERENT = "coherent"
    PHASE_DIFFUSED = "phase_diffused_coherent"
    FOCK = "fock"


@dataclass(frozen=True)
class SignalSpec:
    """The signal state whose quasidistribution is measured.

    ``amplitude`` applies to the coherent kinds, ``phase_noise`` to the
    phase-diffused kind and ``n`` to Fock states.
    """

    kind: SignalKind
    amplitude: complex = 0j
    phase_noise: PhaseNoiseModel = field(default_factory=PhaseNoiseModel)
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", SignalKind(self.kind))
        amplitude = complex(self.amplitude)
        if not (
            math.isfinite(amplitude.real) and math.isfinite(amplitude.imag)
        ):
            raise ConfigurationError(f"Amplitude {amplitude} not finite")
        object.__setattr__(self, "amplitude", amplitude)
        if self.n < 0:
            raise ConfigurationError(f"Fock number {self.n} < 0")

    @classmethod
    def vacuum(cls):
        return cls(SignalKind.VACUUM)

    @classmethod
    def coherent(cls, amplitude):
        return cls(SignalKind.COHERENT, amplitude=amplitude)

    @classmethod
    def phase_diffused(cls, amplitude, phase_noise=None):
        if phase_noise is None:
            phase_noise = PhaseNoiseModel(NoiseDistribution.UNIFORM, math.pi)
        return cls(
            SignalKind.PHASE_DIFFUSED,
            amplitude=amplitude,
            phase_noise=phase_noise,
        )

    @classmethod
    def fock(cls, n):
        return cls(SignalKind.FOCK, n=n)

    @property
    def mean_photons(self):
        match self.kind:
            case SignalKind.VACUUM:
                return 0.0
            case SignalKind.FOCK:
                return float(self.n)
        return abs(self.amplitude) ** 2

    def as_dict(self):
        return {
            "kind": str(self.kind),
            "amplitude": [self.amplitude.real, self.amplitude.imag],
            "phase_noise": {
                "distribution": str(self.phase_noise.distribution),
                "width": self.phase_noise.width,
            },
            "n": self.n,
        }
