"""Finite counting runs and the parity-sum estimator.

Every grid point draws from its own random stream, seeded from
``(master_seed, point_index)`` through ``numpy.random.SeedSequence`` and
fed to the counter-based Philox generator. A point's histogram therefore
depends only on the seed and its index, never on evaluation order or
thread count.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from wigner.fock.states import tail_tolerance
from wigner.lib.exceptions import ConfigurationError, TruncationError

RNG_ALGORITHM = "Philox-4x64 seeded by SeedSequence(master_seed, point_index)"

# 2/π: the largest magnitude of the parity signal.
PARITY_SCALE = 2.0 / math.pi


@dataclass(frozen=True)
class CountingConfig:
    """Counting intervals per grid point and the run's master seed."""

    intervals: int
    interval_duration_us: float = 40.0
    master_seed: int = 0

    def __post_init__(self):
        if self.intervals < 1:
            raise ConfigurationError(
                f"Need at least one counting interval, got {self.intervals}"
            )
        if not 0 <= self.master_seed < 2**64:
            raise ConfigurationError(
                f"Seed {self.master_seed} is not a 64-bit unsigned integer"
            )

    def as_dict(self):
        return {
            "intervals": self.intervals,
            "interval_duration_us": self.interval_duration_us,
            "master_seed": self.master_seed,
            "rng": RNG_ALGORITHM,
        }


@dataclass(frozen=True, eq=False)
class CountHistogram:
    """Number of intervals that registered n photons."""

    counts: np.ndarray = field(repr=False)

    def __post_init__(self):
        counts = np.array(self.counts, dtype=np.int64)
        if np.any(counts < 0):
            raise ConfigurationError("Histogram counts must be non-negative")
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)

    @property
    def total(self):
        return int(self.counts.sum())

    @property
    def even(self):
        return int(self.counts[0::2].sum())

    @property
    def odd(self):
        return int(self.counts[1::2].sum())


@dataclass(frozen=True)
class ParityEstimate:
    value: float
    std_error: float


def point_generator(master_seed, point_index):
    """Independent generator for one grid point."""
    seed = np.random.SeedSequence([master_seed, point_index])
    return np.random.Generator(np.random.Philox(seed))


def sample_counts(p, config, point_index, tail_tol=None):
    """Draw ``config.intervals`` photon numbers from *p* by inverse CDF.

    Raises ``TruncationError`` when *p* is missing more than *tail_tol* of
    its probability.
    """
    tail_tol = tail_tolerance(tail_tol)
    if p.deficit > tail_tol:
        raise TruncationError(
            "Cannot sample a defective distribution",
            loss=p.deficit,
            tail_tol=tail_tol,
        )
    cdf = np.cumsum(p.probs)
    uniforms = point_generator(config.master_seed, point_index).random(
        config.intervals
    )
    # The at-most-tail_tol deficit above the last bin lands in that bin.
    draws = np.minimum(np.searchsorted(cdf, uniforms, side="right"), len(p) - 1)
    return CountHistogram(np.bincount(draws, minlength=len(p)))


def estimate_parity(hist):
    """``(2/π)(N_even - N_odd)/N`` with its binomial standard error."""
    n = hist.total
    if n < 1:
        raise ConfigurationError("Cannot estimate parity from an empty run")
    mean_parity = (hist.even - hist.odd) / n
    std_error = PARITY_SCALE * math.sqrt(max(0.0, 1.0 - mean_parity**2) / n)
    return ParityEstimate(PARITY_SCALE * mean_parity, std_error)
