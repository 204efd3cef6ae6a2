"""Tests for displacement operators and point-wise Wigner values."""

import math

import numpy as np
import pytest

from wigner.fock.displacement import (
    apply_displacement,
    displaced_cutoff,
    displacement_matrix,
    wigner_point,
)
from wigner.fock.states import (
    DensityMatrix,
    FockCutoff,
    coherent_state,
    photon_statistics,
)
from wigner.lib.exceptions import TruncationError


class TestDisplacementMatrix:
    def test_zero_is_identity(self):
        np.testing.assert_allclose(
            displacement_matrix(0, FockCutoff(10)), np.eye(11), atol=1e-15
        )

    @pytest.mark.parametrize("alpha", [0.3, 1 - 0.5j, 2j])
    def test_first_column_is_coherent_state(self, alpha):
        cutoff = FockCutoff(40)
        np.testing.assert_allclose(
            displacement_matrix(alpha, cutoff)[:, 0],
            coherent_state(alpha, cutoff).amplitudes,
            atol=1e-13,
        )

    def test_unitary_away_from_cutoff(self):
        d = displacement_matrix(0.7 + 0.2j, FockCutoff(60))
        np.testing.assert_allclose(
            (d.conj().T @ d)[:20, :20], np.eye(20), atol=1e-10
        )

    def test_unitary_on_central_columns_with_padded_rows(self):
        # |α|² = 37 ≤ n_max/4 at n_max = 300. Rows run to 600 so the
        # central 150 columns keep their full weight.
        d = displacement_matrix(6 + 1j, FockCutoff(600))[:, :150]
        np.testing.assert_allclose(d.conj().T @ d, np.eye(150), atol=1e-8)

    def test_inverse_is_negative_displacement(self):
        cutoff = FockCutoff(60)
        d = displacement_matrix(0.9j, cutoff)
        d_inv = displacement_matrix(-0.9j, cutoff)
        np.testing.assert_allclose(d.conj().T[:20, :20], d_inv[:20, :20])

    def test_large_amplitude_stays_finite(self):
        # |α|² = 36 takes the rescaled log-domain recurrence.
        cutoff = FockCutoff(120)
        d = displacement_matrix(6.0, cutoff)
        assert np.all(np.isfinite(d))
        np.testing.assert_allclose(
            d[:, 0], coherent_state(6.0, cutoff).amplitudes, atol=1e-12
        )


class TestApplyDisplacement:
    def test_moves_vacuum_to_coherent_state(self):
        cutoff = FockCutoff(30)
        alpha = 1.0 + 0.5j
        displaced = apply_displacement(DensityMatrix.vacuum(cutoff), -alpha)
        expected = coherent_state(alpha, cutoff).to_density_matrix()
        np.testing.assert_allclose(
            displaced.elements, expected.elements, atol=1e-10
        )

    def test_result_is_hermitian(self):
        rho = DensityMatrix.fock(2, FockCutoff(40))
        displaced = apply_displacement(rho, 0.8 - 0.3j).elements
        np.testing.assert_array_equal(displaced, displaced.conj().T)

    def test_opposite_displacements_cancel(self):
        cutoff = FockCutoff(60)
        rho = DensityMatrix.mixture(
            [0.3, 0.7],
            [
                DensityMatrix.fock(2, cutoff),
                coherent_state(0.5j, cutoff).to_density_matrix(),
            ],
        )
        alpha = 0.8 - 0.4j
        restored = apply_displacement(apply_displacement(rho, alpha), -alpha)
        np.testing.assert_allclose(
            restored.elements[:30, :30], rho.elements[:30, :30], atol=1e-10
        )

    def test_coherent_state_returns_to_vacuum(self):
        alpha0 = 1.1 - 0.6j
        rho = coherent_state(alpha0, FockCutoff(40)).to_density_matrix()
        probs = photon_statistics(apply_displacement(rho, alpha0)).probs
        assert probs[0] == pytest.approx(1.0, abs=1e-10)
        np.testing.assert_allclose(probs[1:], 0.0, atol=1e-10)

    def test_truncation_loss_raises(self):
        with pytest.raises(TruncationError):
            apply_displacement(DensityMatrix.vacuum(FockCutoff(5)), 3.0)


class TestWignerPoint:
    def test_vacuum_origin(self):
        rho = DensityMatrix.vacuum(FockCutoff(30))
        assert wigner_point(rho, 0) == pytest.approx(2 / math.pi, abs=1e-14)

    def test_single_photon_is_negative_at_origin(self):
        rho = DensityMatrix.fock(1, FockCutoff(30))
        assert wigner_point(rho, 0) == pytest.approx(-2 / math.pi)

    @pytest.mark.parametrize("alpha", [0, 0.5, 1 + 1j, -0.4j])
    def test_coherent_state_is_gaussian(self, alpha):
        alpha0 = 0.8 + 0.3j
        rho = coherent_state(alpha0, FockCutoff(40)).to_density_matrix()
        expected = 2 / math.pi * math.exp(-2 * abs(alpha - alpha0) ** 2)
        assert wigner_point(rho, alpha) == pytest.approx(expected, abs=1e-10)


def test_displaced_cutoff():
    assert displaced_cutoff(1.0, 1.0).n_max == 47
    assert displaced_cutoff(0.0, 0.0).n_max == 30
