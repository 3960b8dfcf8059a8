"""Epoch-level preprocessing: DC removal, artifact screening, band masking.

All three are pure: they never mutate their input epoch.
"""
from __future__ import annotations

import numpy as np

from ..errors import EpochError
from .bands import BandDef, EPOCH_SAMPLES
from .session import EegEpoch

DEFAULT_CLIP_UV = 100.0
DEFAULT_CLIP_FRACTION = 0.10


def remove_dc(epoch: EegEpoch) -> EegEpoch:
    """Subtract the per-channel mean (the high-pass / drift stand-in)."""
    s = epoch.samples
    return epoch.with_samples(s - s.mean(axis=0, keepdims=True))


def reject_artifacts(
    epoch: EegEpoch,
    clip_uv: float = DEFAULT_CLIP_UV,
    max_fraction: float = DEFAULT_CLIP_FRACTION,
) -> EegEpoch:
    """Flag the epoch if any channel has too many out-of-range samples.

    Rejected means strictly more than ``max_fraction`` of a channel's
    samples exceed ``clip_uv`` in magnitude. Samples are never altered.
    """
    if clip_uv <= 0:
        raise ValueError("clip_uv must be positive")
    counts = np.sum(np.abs(epoch.samples) > clip_uv, axis=0)
    bad = bool(np.any(counts > max_fraction * EPOCH_SAMPLES))
    if bad == epoch.rejected:
        return epoch
    return EegEpoch(epoch.start_t, epoch.samples, epoch.fs, rejected=bad)


def bandpass(epoch: EegEpoch, band: BandDef) -> EegEpoch:
    """Keep only DFT bins whose center frequency lies in [lo_hz, hi_hz].

    Realized as forward rFFT per channel, masking, inverse rFFT; with the
    conjugate half handled implicitly the output is exactly real.
    """
    nyquist = epoch.fs / 2.0
    if band.hi_hz > nyquist or band.lo_hz < 0:
        raise EpochError(f"band {band.lo_hz}-{band.hi_hz} Hz outside [0, {nyquist})")
    n = epoch.samples.shape[0]
    freqs = np.fft.rfftfreq(n, d=1.0 / epoch.fs)
    mask = (freqs >= band.lo_hz) & (freqs <= band.hi_hz)
    spectrum = np.fft.rfft(epoch.samples, axis=0)
    spectrum[~mask, :] = 0.0
    return epoch.with_samples(np.fft.irfft(spectrum, n=n, axis=0))
