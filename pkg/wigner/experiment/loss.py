"""Photodetection losses and the parity sum over photon statistics."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import binom

from wigner.fock.states import PhotonStatistics
from wigner.lib.exceptions import ConfigurationError


@dataclass(frozen=True)
class LossChannel:
    """Each photon survives independently with probability ``efficiency``."""

    efficiency: float

    def __post_init__(self):
        if not 0.0 < self.efficiency <= 1.0:
            raise ConfigurationError(
                f"Efficiency must be in (0, 1], got {self.efficiency}"
            )

    def matrix(self, dim):
        """``B[n, m] = C(m, n)·e^n·(1-e)^(m-n)``, the Bernoulli thinning map."""
        n = np.arange(dim)
        return binom.pmf(n[:, None], n[None, :], self.efficiency)


def loss_transform(p, channel):
    """Photon statistics after Bernoulli thinning; total probability is kept."""
    if channel.efficiency == 1.0:
        return p
    return PhotonStatistics(channel.matrix(len(p)) @ p.probs)


def parity_sum(p):
    """``(2/π)·Σ_n (-1)^n p_n``."""
    signs = np.where(np.arange(len(p)) % 2 == 0, 1.0, -1.0)
    return 2.0 / math.pi * float(np.dot(signs, p.probs))
