import factory

from .sampling import CountingConfig


class CountingConfigFactory(factory.Factory):
    class Meta:
        model = CountingConfig

    intervals = 8000
    interval_duration_us = 40.0
    master_seed = factory.Sequence(lambda n: 1000 + n)
