import numpy as np
import pytest

from bci_arm.errors import EpochError
from bci_arm.features import dwt4, idwt4
from bci_arm.features.wavelet import HIGHPASS, LOWPASS
from bci_arm.signal import EPOCH_SAMPLES, N_CHANNELS, EegEpoch


def test_filters_orthonormal():
    assert abs(np.sum(LOWPASS**2) - 1.0) < 1e-12
    assert abs(np.sum(HIGHPASS**2) - 1.0) < 1e-12
    assert abs(np.dot(LOWPASS, HIGHPASS)) < 1e-12


def test_zero_epoch_zero_coeffs():
    e = EegEpoch(0.0, np.zeros((EPOCH_SAMPLES, N_CHANNELS)))
    c = dwt4(e)
    for ch in range(N_CHANNELS):
        for level in range(1, 5):
            assert np.all(c.detail(ch, level) == 0.0)
        assert np.all(c.approx[ch] == 0.0)


def test_coefficient_counts():
    e = EegEpoch(0.0, np.zeros((EPOCH_SAMPLES, N_CHANNELS)))
    c = dwt4(e)
    assert [c.detail(0, k).size for k in range(1, 5)] == [128, 64, 32, 16]
    assert c.approx[0].size == 16
    total = sum(c.detail(0, k).size for k in range(1, 5)) + c.approx[0].size
    assert total == EPOCH_SAMPLES


def test_perfect_reconstruction(random_epoch):
    rec = idwt4(dwt4(random_epoch))
    err = np.sqrt(np.mean((rec - random_epoch.samples) ** 2))
    assert err < 1e-8


def test_parseval_energy_conservation(random_epoch):
    c = dwt4(random_epoch)
    for ch in range(N_CHANNELS):
        coeff_energy = sum(np.sum(c.detail(ch, k) ** 2) for k in range(1, 5))
        coeff_energy += np.sum(c.approx[ch] ** 2)
        sample_energy = np.sum(random_epoch.samples[:, ch] ** 2)
        assert abs(coeff_energy - sample_energy) < 1e-8 * sample_energy


def test_band_level_mapping_by_frequency():
    # a 10 Hz (Alpha) sine should put most detail energy in D3 (8-16 Hz),
    # a 20 Hz (Beta) sine in D2 (16-32 Hz)
    t = np.arange(EPOCH_SAMPLES) / 128.0
    for freq, level in ((10.0, 3), (20.0, 2)):
        wave = np.sin(2 * np.pi * freq * t)
        e = EegEpoch(0.0, np.tile(wave[:, None], (1, N_CHANNELS)))
        c = dwt4(e)
        energies = {k: np.sum(c.detail(0, k) ** 2) for k in range(1, 5)}
        assert max(energies, key=energies.get) == level


def test_rejected_epoch_errors(random_epoch):
    bad = EegEpoch(0.0, random_epoch.samples, rejected=True)
    with pytest.raises(EpochError, match="rejected"):
        dwt4(bad)
