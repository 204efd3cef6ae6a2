"""Tests for counting runs, the parity estimator and repeat studies."""

import math

import numpy as np
import pytest

from wigner.estimator.factories import CountingConfigFactory
from wigner.estimator.sampling import (
    CountHistogram,
    CountingConfig,
    estimate_parity,
    point_generator,
    sample_counts,
)
from wigner.estimator.study import repeat_study
from wigner.experiment.model import displaced_statistics
from wigner.fock.states import PhotonStatistics
from wigner.lib.exceptions import ConfigurationError, TruncationError
from wigner.quasiprob.params import SignalSpec


class TestCountingConfig:
    def test_requires_an_interval(self):
        with pytest.raises(ConfigurationError):
            CountingConfig(intervals=0)

    @pytest.mark.parametrize("seed", [-1, 2**64])
    def test_seed_range(self, seed):
        with pytest.raises(ConfigurationError):
            CountingConfig(intervals=10, master_seed=seed)

    def test_metadata_names_generator(self):
        data = CountingConfigFactory(master_seed=5).as_dict()
        assert data["master_seed"] == 5
        assert "Philox" in data["rng"]


class TestPointGenerator:
    def test_streams_are_reproducible(self):
        first = point_generator(42, 7).random(5)
        np.testing.assert_array_equal(first, point_generator(42, 7).random(5))

    def test_streams_are_independent(self):
        a = point_generator(42, 7).random(5)
        assert not np.array_equal(a, point_generator(42, 8).random(5))
        assert not np.array_equal(a, point_generator(43, 7).random(5))


class TestSampleCounts:
    def test_vacuum_counts_only_zeros(self):
        config = CountingConfigFactory()
        hist = sample_counts(PhotonStatistics([1.0, 0.0, 0.0]), config, 0)
        assert hist.counts.tolist() == [8000, 0, 0]
        estimate = estimate_parity(hist)
        assert estimate.value == 2 / math.pi
        assert estimate.std_error == 0.0

    def test_total_and_determinism(self, channel):
        stats = displaced_statistics(SignalSpec.coherent(1.0), 0.2, channel)
        config = CountingConfigFactory(intervals=2000, master_seed=3)
        hist = sample_counts(stats, config, 17)
        assert hist.total == 2000
        np.testing.assert_array_equal(
            hist.counts, sample_counts(stats, config, 17).counts
        )

    def test_frequencies_follow_distribution(self):
        stats = PhotonStatistics([0.25, 0.5, 0.25])
        config = CountingConfigFactory(intervals=40000, master_seed=9)
        hist = sample_counts(stats, config, 0)
        np.testing.assert_allclose(
            hist.counts / hist.total, stats.probs, atol=0.01
        )

    def test_defective_distribution_rejected(self):
        config = CountingConfigFactory(intervals=10)
        with pytest.raises(TruncationError):
            sample_counts(PhotonStatistics([0.5, 0.3]), config, 0)


class TestEstimateParity:
    def test_value_and_standard_error(self):
        estimate = estimate_parity(CountHistogram([6, 4]))
        assert estimate.value == pytest.approx(2 / math.pi * 0.2)
        assert estimate.std_error == pytest.approx(
            2 / math.pi * math.sqrt(0.96 / 10)
        )

    def test_even_and_odd(self):
        hist = CountHistogram([3, 2, 1, 4])
        assert (hist.even, hist.odd, hist.total) == (4, 6, 10)

    def test_empty_run_rejected(self):
        with pytest.raises(ConfigurationError):
            estimate_parity(CountHistogram([0, 0]))

    def test_negative_counts_rejected(self):
        with pytest.raises(ConfigurationError):
            CountHistogram([-1, 2])


class TestRepeatStudy:
    def test_standard_error_is_calibrated(self, channel):
        config = CountingConfigFactory(intervals=8000, master_seed=2024)
        summary = repeat_study(
            SignalSpec.coherent(1.0), 0.5, channel, config, repeats=200
        )
        assert summary.repeats == 200
        assert summary.std == pytest.approx(summary.mean_std_error, rel=0.15)
        assert abs(summary.z_score) < 4

    def test_vacuum_origin_has_no_spread(self, channel):
        config = CountingConfigFactory(intervals=100)
        summary = repeat_study(SignalSpec.vacuum(), 0, channel, config, 3)
        assert summary.mean == pytest.approx(2 / math.pi)
        assert summary.std == 0.0
        assert summary.z_score == 0.0

    def test_needs_two_repeats(self, channel):
        with pytest.raises(ConfigurationError):
            repeat_study(
                SignalSpec.vacuum(), 0, channel, CountingConfigFactory(), 1
            )

    def test_mean_is_unbiased(self, channel):
        config = CountingConfigFactory(intervals=4000, master_seed=77)
        summary = repeat_study(
            SignalSpec.coherent(1.0), 0.3j, channel, config, repeats=600
        )
        assert abs(summary.mean - summary.exact) < 5 * (
            summary.mean_std_error / math.sqrt(summary.repeats)
        )

    def test_spread_shrinks_as_root_intervals(self, channel):
        spreads = [
            repeat_study(
                SignalSpec.coherent(1.0),
                0.5,
                channel,
                CountingConfigFactory(intervals=intervals, master_seed=31),
                repeats=1000,
            ).std
            for intervals in (2000, 4000, 8000)
        ]
        for wide, narrow in zip(spreads, spreads[1:]):
            assert wide / narrow == pytest.approx(math.sqrt(2), rel=0.1)
