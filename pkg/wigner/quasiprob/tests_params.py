import math

import numpy as np
import pytest
from scipy.special import j0

from wigner.lib.exceptions import ConfigurationError
from wigner.quasiprob.factories import (
    ChannelParamsFactory,
    PhaseNoiseModelFactory,
    SignalSpecFactory,
)
from wigner.quasiprob.params import (
    NoiseDistribution,
    OrderingParam,
    PhaseNoiseModel,
    SignalKind,
    SignalSpec,
)


def test_ordering_above_one_rejected():
    with pytest.raises(ConfigurationError):
        OrderingParam(1.5)
    assert float(OrderingParam(-1.0)) == -1.0


class TestChannelParams:
    def test_efficiency(self):
        assert ChannelParamsFactory().efficiency == pytest.approx(0.6902)

    @pytest.mark.parametrize(
        "eta, transmission", [(0.0, 1.0), (1.0, 0.0), (1.1, 0.9)]
    )
    def test_out_of_range(self, eta, transmission):
        with pytest.raises(ConfigurationError):
            ChannelParamsFactory(eta=eta, transmission=transmission)


class TestPhaseNoiseModel:
    def test_trivial(self):
        assert PhaseNoiseModel().is_trivial
        assert PhaseNoiseModel(NoiseDistribution.UNIFORM, 0.0).is_trivial
        assert not PhaseNoiseModelFactory().is_trivial

    def test_invalid_widths(self):
        with pytest.raises(ConfigurationError):
            PhaseNoiseModel(NoiseDistribution.UNIFORM, -0.1)
        with pytest.raises(ConfigurationError):
            PhaseNoiseModel(NoiseDistribution.ARCSINE, 4.0)

    def test_distribution_coerced_from_string(self):
        noise = PhaseNoiseModel("wrapped_gaussian", 0.3)
        assert noise.distribution is NoiseDistribution.WRAPPED_GAUSSIAN

    @pytest.mark.parametrize(
        "noise",
        [
            PhaseNoiseModel(NoiseDistribution.UNIFORM, math.pi),
            PhaseNoiseModel(NoiseDistribution.UNIFORM, 0.5),
            PhaseNoiseModel(NoiseDistribution.ARCSINE, 1.0),
            PhaseNoiseModel(NoiseDistribution.WRAPPED_GAUSSIAN, 2.0),
        ],
    )
    def test_weights_sum_to_one(self, noise):
        _, weights = noise.nodes(32)
        assert weights.sum() == pytest.approx(1.0)

    @pytest.mark.parametrize(
        "noise, mean_cos",
        [
            (PhaseNoiseModel(), 1.0),
            (PhaseNoiseModel(NoiseDistribution.UNIFORM, math.pi), 0.0),
            (
                PhaseNoiseModel(NoiseDistribution.UNIFORM, 0.5),
                math.sin(0.5) / 0.5,
            ),
            (PhaseNoiseModel(NoiseDistribution.ARCSINE, 1.2), j0(1.2)),
            (
                PhaseNoiseModel(NoiseDistribution.WRAPPED_GAUSSIAN, 0.5),
                math.exp(-0.125),
            ),
        ],
    )
    def test_average_of_cosine(self, noise, mean_cos):
        value = noise.average(np.cos, tol=1e-12)
        assert float(value) == pytest.approx(mean_cos, abs=1e-10)


class TestSignalSpec:
    def test_constructors(self):
        assert SignalSpec.vacuum().mean_photons == 0.0
        assert SignalSpec.fock(3).mean_photons == 3.0
        assert SignalSpec.coherent(1 + 1j).mean_photons == pytest.approx(2.0)

    def test_phase_diffused_defaults_to_full_uniform(self):
        spec = SignalSpec.phase_diffused(1.0)
        assert spec.kind is SignalKind.PHASE_DIFFUSED
        assert spec.phase_noise == PhaseNoiseModel(
            NoiseDistribution.UNIFORM, math.pi
        )

    def test_factory_trait(self):
        spec = SignalSpecFactory(diffused=True)
        assert spec.kind is SignalKind.PHASE_DIFFUSED
        assert not spec.phase_noise.is_trivial

    def test_invalid(self):
        with pytest.raises(ConfigurationError):
            SignalSpec.fock(-1)
        with pytest.raises(ConfigurationError):
            SignalSpec.coherent(complex(math.nan, 0))
        with pytest.raises(ValueError):
            SignalSpec("squeezed")

    def test_as_dict(self):
        data = SignalSpec.coherent(0.5 - 1j).as_dict()
        assert data["kind"] == "coherent"
        assert data["amplitude"] == [0.5, -1.0]
        assert data["phase_noise"]["distribution"] == "none"
