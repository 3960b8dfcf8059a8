"""Hanning-windowed power spectral density and band powers.

Per channel: multiply by a length-256 Hanning window, DFT, one-sided
density |X(k)|^2 * 2 / (fs * sum(w^2)) in uV^2/Hz (DC and Nyquist carry
no factor 2). A band's power is the sum of its in-band bin densities.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EpochError
from .bands import CHANNELS, TAXONOMY, BandDef
from .session import EegEpoch


@dataclass(frozen=True)
class BandPower:
    """Summed one-sided bin densities per channel x band, uV^2/Hz."""

    bands: tuple[str, ...]
    values: np.ndarray  # (n_channels, n_bands), all >= 0
    bin_hz: float

    def band(self, name: str) -> np.ndarray:
        return self.values[:, self.bands.index(name)]

    def channel(self, name: str) -> np.ndarray:
        return self.values[CHANNELS.index(name), :]


def psd(epoch: EegEpoch) -> tuple[np.ndarray, np.ndarray]:
    """One-sided windowed periodogram: (freqs, density (n_bins, 5))."""
    if epoch.rejected:
        raise EpochError("epoch rejected")
    n = epoch.samples.shape[0]
    window = np.hanning(n)
    freqs = np.fft.rfftfreq(n, d=1.0 / epoch.fs)
    spectrum = np.fft.rfft(epoch.samples * window[:, None], axis=0)
    scale = 2.0 / (epoch.fs * np.sum(window**2))
    density = (np.abs(spectrum) ** 2) * scale
    density[0, :] /= 2.0
    if n % 2 == 0:
        density[-1, :] /= 2.0
    return freqs, density


def spectral_power(
    epoch: EegEpoch, bands: tuple[BandDef, ...] = TAXONOMY
) -> BandPower:
    """Band powers over the taxonomy (or any band set) for one epoch.

    Bin membership is half-open [lo, hi) except the topmost band, which
    also absorbs the Nyquist bin so the partition covers the spectrum.
    """
    freqs, density = psd(epoch)
    top_hi = max(b.hi_hz for b in bands)
    values = np.zeros((density.shape[1], len(bands)))
    for j, band in enumerate(bands):
        mask = (freqs >= band.lo_hz) & (freqs < band.hi_hz)
        if band.hi_hz == top_hi:
            mask |= freqs == band.hi_hz
        values[:, j] = density[mask, :].sum(axis=0)
    return BandPower(
        bands=tuple(b.name for b in bands),
        values=values,
        bin_hz=float(freqs[1] - freqs[0]),
    )
