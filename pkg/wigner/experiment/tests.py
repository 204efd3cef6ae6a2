"""Tests for the detected photon statistics and the beam-splitter model."""

import math

import numpy as np
import pytest
from scipy.stats import poisson

from wigner.experiment.loss import parity_sum
from wigner.experiment.model import (
    LOSSLESS_SIGNAL,
    bs_approximation_error,
    displaced_statistics,
    scan_cutoff,
    signal_density_matrix,
)
from wigner.fock.states import FockCutoff, coherent_state
from wigner.lib.exceptions import ConfigurationError
from wigner.quasiprob.analytic import predicted_p
from wigner.quasiprob.factories import ChannelParamsFactory
from wigner.quasiprob.params import PhaseNoiseModel, SignalSpec

CHANNELS = [
    ChannelParamsFactory(eta=1.0, transmission=1.0),
    ChannelParamsFactory(),
    ChannelParamsFactory(eta=0.5, transmission=0.9),
]
SPECS = [
    SignalSpec.vacuum(),
    SignalSpec.coherent(0.5),
    SignalSpec.coherent(-1.0j),
    SignalSpec.coherent(1.5 * np.exp(0.4j)),
    SignalSpec.fock(1),
    SignalSpec.phase_diffused(0.9),
]


class TestSignalDensityMatrix:
    def test_full_diffusion_removes_coherences(self):
        cutoff = FockCutoff(30)
        rho = signal_density_matrix(SignalSpec.phase_diffused(1.0), cutoff)
        elements = rho.elements
        np.testing.assert_allclose(
            np.diag(elements).real,
            poisson.pmf(np.arange(31), 1.0),
            atol=1e-12,
        )
        off_diagonal = elements - np.diag(np.diag(elements))
        assert np.max(np.abs(off_diagonal)) < 1e-10

    def test_no_noise_is_coherent(self):
        cutoff = FockCutoff(30)
        rho = signal_density_matrix(
            SignalSpec.phase_diffused(0.8j, PhaseNoiseModel()), cutoff
        )
        expected = coherent_state(0.8j, cutoff).to_density_matrix()
        np.testing.assert_allclose(rho.elements, expected.elements)

    def test_states_validate(self):
        cutoff = FockCutoff(30)
        for spec in SPECS:
            signal_density_matrix(spec, cutoff).validate()


class TestDisplacedStatistics:
    def test_coherent_signal_gives_poisson_counts(self, channel):
        beta = 0.3 + 0.2j
        mean = abs(beta - math.sqrt(channel.efficiency) * 1.0) ** 2
        stats = displaced_statistics(SignalSpec.coherent(1.0), beta, channel)
        n = np.arange(len(stats))
        np.testing.assert_allclose(
            stats.probs, poisson.pmf(n, mean), atol=1e-10
        )

    @pytest.mark.parametrize("channel", CHANNELS)
    def test_vacuum_origin(self, channel):
        stats = displaced_statistics(SignalSpec.vacuum(), 0, channel)
        assert parity_sum(stats) == pytest.approx(2 / math.pi, abs=1e-15)

    @pytest.mark.parametrize("channel", CHANNELS)
    @pytest.mark.parametrize("spec", SPECS)
    def test_parity_sum_matches_prediction(self, spec, channel):
        for beta in (0, 0.4, 1.1 - 0.7j, -1.9j):
            stats = displaced_statistics(spec, beta, channel)
            assert parity_sum(stats) == pytest.approx(
                predicted_p(spec, beta, channel), abs=1e-9
            )

    def test_scan_cutoff_covers_grid(self, channel):
        cutoff = scan_cutoff(SignalSpec.coherent(1.0), channel, 2.0)
        displacement = 2.0 / math.sqrt(channel.efficiency)
        assert cutoff.n_max >= (1 + displacement) ** 2


class TestBeamSplitterModel:
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 1.5j])
    def test_exact_for_coherent_signals(self, alpha):
        spec = SignalSpec.coherent(alpha)
        assert bs_approximation_error(spec, 1.0, 0.986) < 1e-10

    def test_zero_probe(self):
        error = bs_approximation_error(SignalSpec.fock(1), 0.0, 0.986)
        assert error < 1e-12

    def test_exact_for_fock_signals(self):
        assert bs_approximation_error(SignalSpec.fock(1), 1.0, 0.986) < 1e-10

    def test_lossless_signal_error_is_linear_in_reflectance(self):
        spec = SignalSpec.fock(1)
        full = bs_approximation_error(spec, 1.0, 0.986, model=LOSSLESS_SIGNAL)
        half = bs_approximation_error(spec, 1.0, 0.993, model=LOSSLESS_SIGNAL)
        assert full / half == pytest.approx(2.0, rel=0.25)

    def test_unknown_model(self):
        with pytest.raises(ConfigurationError):
            bs_approximation_error(SignalSpec.vacuum(), 1.0, 0.9, model="x")
