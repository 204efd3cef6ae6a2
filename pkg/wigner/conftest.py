"""Shared pytest fixtures for the simulation apps."""

import pytest

from wigner.estimator.factories import CountingConfigFactory
from wigner.quasiprob.factories import ChannelParamsFactory


@pytest.fixture(autouse=True)
def _single_worker(settings):
    """Scans run on one thread unless a test asks for more.

    A developer's environment may set WIGNER_WORKERS; output never
    depends on it, but timing-sensitive tests should not either.
    """
    settings.WIGNER_WORKERS = 1


@pytest.fixture
def channel():
    """Detector efficiency 0.70 behind a 98.6% beam splitter."""
    return ChannelParamsFactory()


@pytest.fixture
def lossless():
    return ChannelParamsFactory(eta=1.0, transmission=1.0)


@pytest.fixture
def counting():
    """A short counting run with a fixed seed."""
    return CountingConfigFactory(intervals=500, master_seed=11)
