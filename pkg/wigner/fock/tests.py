"""Tests for truncated Fock-space states."""

import math

import numpy as np
import pytest

from wigner.fock.states import (
    DensityMatrix,
    FockCutoff,
    PhasePoint,
    PhotonStatistics,
    StateVector,
    coherent_state,
    parity_expectation,
    photon_statistics,
)
from wigner.lib.exceptions import ConfigurationError, TruncationError


class TestFockCutoff:
    def test_dim(self):
        assert FockCutoff(0).dim == 1
        assert FockCutoff(30).dim == 31

    def test_negative_rejected(self):
        with pytest.raises(ConfigurationError):
            FockCutoff(-1)

    @pytest.mark.parametrize(
        "n_bar, n_max", [(0.0, 30), (1.0, 36), (4.0, 47)]
    )
    def test_for_mean(self, n_bar, n_max):
        assert FockCutoff.for_mean(n_bar).n_max == n_max

    def test_enlarged(self):
        assert FockCutoff(30).enlarged().n_max == 80


class TestPhasePoint:
    def test_from_polar(self):
        point = PhasePoint.from_polar(2.0, 3 * math.pi / 2)
        assert point.radius == pytest.approx(2.0)
        assert point.phase == pytest.approx(3 * math.pi / 2)
        assert complex(point) == pytest.approx(-2j)

    def test_negation(self):
        assert complex(-PhasePoint(1 + 2j)) == -1 - 2j

    def test_rejects_non_finite(self):
        with pytest.raises(ConfigurationError):
            PhasePoint(complex(math.inf, 0))

    def test_rejects_negative_radius(self):
        with pytest.raises(ConfigurationError):
            PhasePoint.from_polar(-1.0, 0.0)


class TestCoherentState:
    def test_normalized_with_poisson_mean(self):
        state = coherent_state(1.0 + 0.5j, FockCutoff(30))
        assert state.norm == pytest.approx(1.0, abs=1e-12)
        stats = photon_statistics(state.to_density_matrix())
        assert stats.mean == pytest.approx(1.25, abs=1e-10)

    def test_vacuum_amplitude(self):
        state = coherent_state(0, FockCutoff(5))
        np.testing.assert_allclose(state.amplitudes, [1, 0, 0, 0, 0, 0])

    def test_small_cutoff_raises_with_loss(self):
        with pytest.raises(TruncationError) as exc_info:
            coherent_state(2.0, FockCutoff(3))
        assert exc_info.value.loss > 1e-10
        assert exc_info.value.tail_tol == 1e-10

    def test_amplitudes_are_read_only(self):
        state = StateVector([1.0, 0.0])
        with pytest.raises(ValueError):
            state.amplitudes[0] = 0.5


class TestDensityMatrix:
    def test_fock_outside_cutoff(self):
        with pytest.raises(ConfigurationError):
            DensityMatrix.fock(5, FockCutoff(3))

    def test_must_be_square(self):
        with pytest.raises(ConfigurationError):
            DensityMatrix(np.zeros((2, 3)))

    def test_mixture(self):
        cutoff = FockCutoff(2)
        rho = DensityMatrix.mixture(
            [0.25, 0.75],
            [DensityMatrix.vacuum(cutoff), DensityMatrix.fock(2, cutoff)],
        )
        np.testing.assert_allclose(np.diag(rho.elements).real, [0.25, 0, 0.75])

    def test_embed_and_truncate(self):
        rho = DensityMatrix.fock(1, FockCutoff(1))
        big = rho.embedded(FockCutoff(4))
        assert big.cutoff.n_max == 4
        assert big.trace == 1.0
        assert big.truncated(FockCutoff(0)).trace == 0.0
        with pytest.raises(ConfigurationError):
            big.embedded(FockCutoff(2))

    def test_validate_accepts_states(self):
        rho = coherent_state(0.7j, FockCutoff(30)).to_density_matrix()
        assert rho.validate() is rho

    def test_validate_rejects_non_hermitian(self):
        with pytest.raises(ConfigurationError):
            DensityMatrix([[0.5, 0.1], [0.0, 0.5]]).validate()

    def test_validate_reports_missing_trace(self):
        with pytest.raises(TruncationError):
            DensityMatrix([[0.5, 0.0], [0.0, 0.0]]).validate()

    def test_validate_rejects_negative_eigenvalue(self):
        with pytest.raises(ConfigurationError):
            DensityMatrix([[1.5, 0.0], [0.0, -0.5]]).validate()


class TestPhotonStatistics:
    def test_round_off_negatives_clamp(self):
        stats = PhotonStatistics([1.0, -1e-14])
        assert stats.probs[1] == 0.0

    @pytest.mark.parametrize("probs", [[-0.1, 1.1], [1.5], []])
    def test_invalid(self, probs):
        with pytest.raises(ConfigurationError):
            PhotonStatistics(probs)

    def test_deficit(self):
        stats = PhotonStatistics([0.5, 0.3])
        assert stats.total == pytest.approx(0.8)
        assert stats.deficit == pytest.approx(0.2)
        assert len(stats) == 2


@pytest.mark.parametrize("n, parity", [(0, 1.0), (1, -1.0), (4, 1.0)])
def test_parity_of_fock_states(n, parity):
    assert parity_expectation(DensityMatrix.fock(n, FockCutoff(5))) == parity
