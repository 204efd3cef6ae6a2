"""Tests for the closed-form quasidistributions and the lossy parity law."""

import math

import numpy as np
import pytest
from scipy.special import eval_laguerre

from wigner.fock.displacement import wigner_point
from wigner.fock.states import DensityMatrix, FockCutoff
from wigner.lib.exceptions import ConfigurationError
from wigner.quasiprob.analytic import (
    analytic_quasidist,
    mode_mismatch_envelope,
    normalization_check,
    predicted_p,
    predicted_surface,
    quasidist_surface,
    s_from_losses,
)
from wigner.quasiprob.factories import ChannelParamsFactory
from wigner.quasiprob.params import (
    NoiseDistribution,
    PhaseNoiseModel,
    SignalSpec,
)

CHANNELS = [
    ChannelParamsFactory(eta=1.0, transmission=1.0),
    ChannelParamsFactory(),
    ChannelParamsFactory(eta=0.5, transmission=0.9),
]


class TestOrdering:
    def test_measured_channel(self, channel):
        s = s_from_losses(channel).s
        assert s == pytest.approx(-0.4488554042, abs=1e-9)
        assert round(s, 2) == -0.45

    def test_lossless_channel_is_wigner(self, lossless):
        assert s_from_losses(lossless).s == 0.0

    def test_s_of_one_rejected(self):
        with pytest.raises(ConfigurationError):
            analytic_quasidist(SignalSpec.vacuum(), 0, 1.0)


class TestQuasidistribution:
    def test_vacuum_wigner_origin(self):
        value = analytic_quasidist(SignalSpec.vacuum(), 0, 0.0)
        assert value == pytest.approx(2 / math.pi)

    @pytest.mark.parametrize("s", [0.0, -0.45, -1.0])
    def test_coherent_peak_height(self, s):
        spec = SignalSpec.coherent(0.8 - 0.2j)
        assert analytic_quasidist(spec, 0.8 - 0.2j, s) == pytest.approx(
            2 / (math.pi * (1 - s))
        )

    @pytest.mark.parametrize("n", [0, 1, 2, 5])
    @pytest.mark.parametrize("alpha", [0.0, 0.4, 0.8 + 0.6j])
    def test_fock_wigner_matches_laguerre(self, n, alpha):
        x = abs(alpha) ** 2
        expected = (
            2 / math.pi * (-1) ** n * eval_laguerre(n, 4 * x) * math.exp(-2 * x)
        )
        value = analytic_quasidist(SignalSpec.fock(n), alpha, 0.0)
        assert value == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("n", [1, 2])
    def test_fock_wigner_matches_displaced_parity(self, n):
        rho = DensityMatrix.fock(n, FockCutoff(40))
        alpha = 0.5 + 0.4j
        assert analytic_quasidist(
            SignalSpec.fock(n), alpha, 0.0
        ) == pytest.approx(wigner_point(rho, alpha), abs=1e-10)

    def test_fock_q_function_limit(self):
        alpha = 1.3
        x = alpha**2
        expected = x**2 * math.exp(-x) / (math.pi * 2)
        value = analytic_quasidist(SignalSpec.fock(2), alpha, -1.0)
        assert value == pytest.approx(expected, abs=1e-14)

    def test_single_photon_dip_survives_smoothing(self):
        s = -0.45
        expected = -2 / (math.pi * (1 - s)) * (1 + s) / (1 - s)
        value = analytic_quasidist(SignalSpec.fock(1), 0, s)
        assert value == pytest.approx(expected)
        assert value < 0

    def test_phase_diffused_without_noise_is_coherent(self):
        spec = SignalSpec.phase_diffused(1.0, PhaseNoiseModel())
        alphas = np.array([0, 1, 0.5j])
        np.testing.assert_allclose(
            quasidist_surface(spec, alphas, -0.3),
            quasidist_surface(SignalSpec.coherent(1.0), alphas, -0.3),
        )

    def test_full_phase_diffusion_is_rotation_invariant(self):
        spec = SignalSpec.phase_diffused(1.0)
        values = quasidist_surface(
            spec, 0.7 * np.exp(1j * np.array([0.0, 1.1, 4.0])), -0.45
        )
        np.testing.assert_allclose(values, values[0], atol=1e-10)

    def test_vacuum_origin_falls_as_s_decreases(self):
        values = [
            analytic_quasidist(SignalSpec.vacuum(), 0, s)
            for s in (0.5, 0.0, -0.45, -1.0, -3.0)
        ]
        assert all(a > b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize(
        "noise",
        [
            PhaseNoiseModel(),
            PhaseNoiseModel(NoiseDistribution.UNIFORM, math.pi),
            PhaseNoiseModel(NoiseDistribution.UNIFORM, 0.5),
            PhaseNoiseModel(NoiseDistribution.ARCSINE, 0.6),
            PhaseNoiseModel(NoiseDistribution.WRAPPED_GAUSSIAN, 0.4),
        ],
    )
    def test_diffusion_leaves_origin_unchanged(self, noise):
        spec = SignalSpec.phase_diffused(0.9 + 0.4j, noise)
        assert analytic_quasidist(spec, 0, -0.45) == pytest.approx(
            analytic_quasidist(SignalSpec.coherent(0.9 + 0.4j), 0, -0.45),
            abs=1e-10,
        )

    @pytest.mark.parametrize("phi", [0.3, 2.0, -1.2])
    def test_coherent_state_rotates_with_its_amplitude(self, phi):
        rotation = complex(math.cos(phi), math.sin(phi))
        alpha0, alpha = 0.8 - 0.3j, 0.4 + 0.5j
        rotated = analytic_quasidist(
            SignalSpec.coherent(alpha0 * rotation), alpha * rotation, -0.45
        )
        assert rotated == pytest.approx(
            analytic_quasidist(SignalSpec.coherent(alpha0), alpha, -0.45),
            abs=1e-12,
        )

    def test_partial_diffusion_keeps_direction(self):
        noise = PhaseNoiseModel(NoiseDistribution.ARCSINE, 0.6)
        spec = SignalSpec.phase_diffused(1.0, noise)
        along = analytic_quasidist(spec, 1.0, 0.0)
        across = analytic_quasidist(spec, -1.0, 0.0)
        assert along > across


class TestModeMismatch:
    def test_identity_without_mismatch(self):
        assert mode_mismatch_envelope(1.5, 0.0) == 1.0

    def test_gaussian(self):
        assert mode_mismatch_envelope(1j, 0.2) == pytest.approx(
            math.exp(-0.2)
        )

    def test_negative_rate_rejected(self):
        with pytest.raises(ConfigurationError):
            mode_mismatch_envelope(0.5, -0.1)

    def test_array_input(self):
        values = mode_mismatch_envelope(np.array([0, 1]), 1.0)
        np.testing.assert_allclose(values, [1.0, math.exp(-1.0)])


class TestPredictedP:
    @pytest.mark.parametrize("channel", CHANNELS)
    def test_vacuum_origin_is_two_over_pi(self, channel):
        value = predicted_p(SignalSpec.vacuum(), 0, channel)
        assert value == pytest.approx(2 / math.pi, abs=1e-15)

    def test_coherent_peak_is_at_attenuated_amplitude(self, channel):
        spec = SignalSpec.coherent(1.0)
        peak = math.sqrt(channel.efficiency)
        assert peak == pytest.approx(0.8308, abs=1e-4)
        assert predicted_p(spec, peak, channel) == pytest.approx(2 / math.pi)
        assert predicted_p(spec, peak + 0.1, channel) < 2 / math.pi

    def test_envelope_scales_surface(self, channel):
        spec = SignalSpec.fock(1)
        betas = np.array([0.3, 1.0j])
        np.testing.assert_allclose(
            predicted_surface(spec, betas, channel, gamma=0.5),
            predicted_surface(spec, betas, channel)
            * np.exp(-0.5 * np.abs(betas) ** 2),
        )


class TestNormalization:
    @pytest.mark.parametrize(
        "spec",
        [
            SignalSpec.vacuum(),
            SignalSpec.coherent(1.0),
            SignalSpec.coherent(-0.6 + 0.9j),
            SignalSpec.fock(1),
        ],
    )
    def test_integrates_to_one(self, spec, channel):
        assert normalization_check(spec, channel, 6.0) == pytest.approx(
            1.0, abs=1e-6
        )

    def test_envelope_loses_weight(self, channel):
        value = normalization_check(
            SignalSpec.vacuum(), channel, 6.0, gamma=1.0
        )
        assert value == pytest.approx(2 / 3, abs=1e-6)

    def test_invalid_extent(self, channel):
        with pytest.raises(ConfigurationError):
            normalization_check(SignalSpec.vacuum(), channel, 0.0)
