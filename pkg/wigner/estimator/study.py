"""Repeat a counting run many times to calibrate the parity estimator."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from wigner.estimator.sampling import estimate_parity, sample_counts
from wigner.experiment.loss import parity_sum
from wigner.experiment.model import displaced_statistics
from wigner.lib.exceptions import ConfigurationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RepeatSummary:
    repeats: int
    exact: float
    mean: float
    std: float
    mean_std_error: float
    z_score: float


def repeat_study(spec, beta, channel, config, repeats, tail_tol=None):
    """Summarize *repeats* independent runs at one grid point.

    Run r draws from stream ``(config.master_seed, r)``. The z-score
    compares the mean estimate with the exact parity sum using the mean
    predicted standard error over √repeats.
    """
    if repeats < 2:
        raise ConfigurationError(f"Need at least two repeats, got {repeats}")
    statistics = displaced_statistics(spec, beta, channel, tail_tol=tail_tol)
    exact = parity_sum(statistics)
    estimates = [
        estimate_parity(
            sample_counts(statistics, config, run, tail_tol=tail_tol)
        )
        for run in range(repeats)
    ]
    values = np.array([e.value for e in estimates])
    std_errors = np.array([e.std_error for e in estimates])

    mean = float(values.mean())
    mean_std_error = float(std_errors.mean())
    if mean_std_error > 0:
        z_score = (mean - exact) / (mean_std_error / math.sqrt(repeats))
    else:
        z_score = 0.0
    summary = RepeatSummary(
        repeats=repeats,
        exact=exact,
        mean=mean,
        std=float(values.std(ddof=1)),
        mean_std_error=mean_std_error,
        z_score=z_score,
    )
    logger.info(
        "Repeat study at beta=%s: mean %.6f, exact %.6f, z=%.2f",
        complex(beta),
        summary.mean,
        summary.exact,
        summary.z_score,
    )
    return summary
