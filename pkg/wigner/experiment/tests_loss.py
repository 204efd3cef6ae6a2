import math

import numpy as np
import pytest
from scipy.stats import poisson

from wigner.experiment.loss import LossChannel, loss_transform, parity_sum
from wigner.fock.states import PhotonStatistics
from wigner.lib.exceptions import ConfigurationError


@pytest.mark.parametrize("efficiency", [0.0, -0.2, 1.5])
def test_invalid_efficiency(efficiency):
    with pytest.raises(ConfigurationError):
        LossChannel(efficiency)


def test_matrix_columns_are_distributions():
    matrix = LossChannel(0.3).matrix(12)
    np.testing.assert_allclose(matrix.sum(axis=0), 1.0)
    assert np.all(np.tril(matrix, -1) == 0)


def test_poisson_stays_poisson():
    n = np.arange(60)
    lossy = loss_transform(
        PhotonStatistics(poisson.pmf(n, 2.0)), LossChannel(0.7)
    )
    np.testing.assert_allclose(lossy.probs, poisson.pmf(n, 1.4), atol=1e-12)


def test_unit_efficiency_is_identity():
    p = PhotonStatistics([0.2, 0.8])
    assert loss_transform(p, LossChannel(1.0)) is p


def test_parity_sum():
    assert parity_sum(PhotonStatistics([1.0])) == pytest.approx(2 / math.pi)
    assert parity_sum(PhotonStatistics([0, 1.0])) == pytest.approx(
        -2 / math.pi
    )


def test_generating_function_identity():
    rng = np.random.default_rng(1234)
    for _ in range(100):
        probs = rng.dirichlet(np.ones(15))
        efficiency = rng.uniform(0.05, 1.0)
        lossy = loss_transform(
            PhotonStatistics(probs), LossChannel(efficiency)
        )
        expected = (
            2
            / math.pi
            * np.dot(probs, (1 - 2 * efficiency) ** np.arange(15))
        )
        assert parity_sum(lossy) == pytest.approx(expected, abs=1e-12)


def test_successive_losses_compose():
    rng = np.random.default_rng(55)
    p = PhotonStatistics(rng.dirichlet(np.ones(20)))
    twice = loss_transform(
        loss_transform(p, LossChannel(0.8)), LossChannel(0.7)
    )
    once = loss_transform(p, LossChannel(0.8 * 0.7))
    np.testing.assert_allclose(twice.probs, once.probs, atol=1e-12)
