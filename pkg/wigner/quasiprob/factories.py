import math

import factory

from .params import (
    ChannelParams,
    NoiseDistribution,
    PhaseNoiseModel,
    SignalKind,
    SignalSpec,
)


class ChannelParamsFactory(factory.Factory):
    class Meta:
        model = ChannelParams

    eta = 0.70
    transmission = 0.986


class PhaseNoiseModelFactory(factory.Factory):
    class Meta:
        model = PhaseNoiseModel

    distribution = NoiseDistribution.UNIFORM
    width = math.pi


class SignalSpecFactory(factory.Factory):
    class Meta:
        model = SignalSpec

    kind = SignalKind.COHERENT
    amplitude = 1.0

    class Params:
        diffused = factory.Trait(
            kind=SignalKind.PHASE_DIFFUSED,
            phase_noise=factory.SubFactory(PhaseNoiseModelFactory),
        )
