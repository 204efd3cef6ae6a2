import math

import numpy as np
import pytest

from wigner.fock.beam_splitter import two_mode_bs_oracle
from wigner.fock.states import (
    DensityMatrix,
    FockCutoff,
    coherent_state,
    photon_statistics,
)
from wigner.lib.exceptions import ConfigurationError, TruncationError


def test_full_transmission_passes_signal_unchanged():
    cutoff = FockCutoff(30)
    rho = DensityMatrix.fock(1, cutoff)
    out = two_mode_bs_oracle(rho, 1.0, 1.0, cutoff)
    np.testing.assert_allclose(out.elements, rho.elements, atol=1e-12)


def test_vacuum_signal_receives_reflected_probe():
    cutoff = FockCutoff.for_mean(2.0)
    out = two_mode_bs_oracle(DensityMatrix.vacuum(cutoff), 2.0, 0.5, cutoff)
    # Transmitted port carries √T·a + i√(1-T)·b.
    expected = coherent_state(1j * math.sqrt(0.5) * 2.0, cutoff)
    np.testing.assert_allclose(
        out.elements, expected.to_density_matrix().elements, atol=1e-10
    )


def test_mixed_signal_keeps_unit_trace():
    cutoff = FockCutoff(40)
    rho = DensityMatrix.mixture(
        [0.5, 0.5],
        [DensityMatrix.vacuum(cutoff), DensityMatrix.fock(1, cutoff)],
    )
    out = two_mode_bs_oracle(rho, 0.5j, 0.9, cutoff)
    assert out.trace == pytest.approx(1.0, abs=1e-10)
    out.validate()


@pytest.mark.parametrize("transmission", [0.0, -0.1, 1.2])
def test_invalid_transmission(transmission):
    cutoff = FockCutoff(5)
    with pytest.raises(ConfigurationError):
        two_mode_bs_oracle(
            DensityMatrix.vacuum(cutoff), 1.0, transmission, cutoff
        )


def test_output_beyond_cutoff_raises():
    cutoff = FockCutoff(2)
    with pytest.raises(TruncationError):
        two_mode_bs_oracle(DensityMatrix.vacuum(cutoff), 3.0, 0.5, cutoff)


@pytest.mark.parametrize("transmission", [0.5, 0.9, 0.986, 1.0])
def test_coherent_signal_stays_coherent(transmission):
    cutoff = FockCutoff(40)
    alpha0, probe = 0.8 + 0.3j, 1.2 - 0.5j
    rho = coherent_state(alpha0, cutoff).to_density_matrix()
    out = two_mode_bs_oracle(rho, probe, transmission, cutoff)
    amplitude = (
        math.sqrt(transmission) * alpha0
        + 1j * math.sqrt(1 - transmission) * probe
    )
    expected = coherent_state(amplitude, cutoff).to_density_matrix()
    np.testing.assert_allclose(out.elements, expected.elements, atol=1e-10)


def test_single_photon_splits_by_transmission():
    cutoff = FockCutoff(10)
    out = two_mode_bs_oracle(DensityMatrix.fock(1, cutoff), 0, 0.986, cutoff)
    np.testing.assert_allclose(
        photon_statistics(out).probs[:3], [0.014, 0.986, 0.0], atol=1e-12
    )
