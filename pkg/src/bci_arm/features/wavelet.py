"""4-level Daubechies wavelet analysis with periodic extension.

Uses the 8-tap Daubechies filter (4 vanishing moments); the filter bank
is orthonormal, so the transform conserves energy and inverts exactly.

At fs = 128 Hz the detail levels cover roughly D1 32-64, D2 16-32,
D3 8-16, D4 4-8 Hz; Alpha maps to D3 and Beta to D2.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EpochError
from ..signal.bands import N_CHANNELS
from ..signal.session import EegEpoch

LOWPASS = np.array(
    [
        0.23037781330885523,
        0.7148465705525415,
        0.6308807679295904,
        -0.02798376941698385,
        -0.18703481171888114,
        0.030841381835986965,
        0.032883011666982945,
        -0.010597401784997278,
    ]
)
# Quadrature mirror: g[n] = (-1)^n h[L-1-n]
HIGHPASS = np.array(
    [(-1.0) ** n * LOWPASS[len(LOWPASS) - 1 - n] for n in range(len(LOWPASS))]
)

LEVELS = 4
BAND_LEVEL = {"Alpha": 3, "Beta": 2}  # band -> detail level index (1-based)


@dataclass(frozen=True)
class WaveletCoeffs:
    """Per-channel detail vectors D1..D4 and approximation A4.

    details[ch][k] is D_{k+1} for channel ch; approx[ch] is A4. For a
    256-sample epoch the per-channel coefficient count is 128+64+32+16+16.
    """

    details: tuple[tuple[np.ndarray, ...], ...]
    approx: tuple[np.ndarray, ...]

    def detail(self, channel: int, level: int) -> np.ndarray:
        return self.details[channel][level - 1]

    def band_coeffs(self, channel: int, band: str) -> np.ndarray:
        return self.detail(channel, BAND_LEVEL[band])


def _analysis_step(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = x.size
    taps = LOWPASS.size
    xp = np.concatenate([x, x[: taps - 1]])  # periodic extension
    approx = np.zeros(n // 2)
    detail = np.zeros(n // 2)
    for k in range(taps):
        approx += LOWPASS[k] * xp[k : k + n : 2]
        detail += HIGHPASS[k] * xp[k : k + n : 2]
    return approx, detail


def _synthesis_step(approx: np.ndarray, detail: np.ndarray) -> np.ndarray:
    n = 2 * approx.size
    x = np.zeros(n)
    idx = np.arange(approx.size) * 2
    for k in range(LOWPASS.size):
        np.add.at(x, (idx + k) % n, LOWPASS[k] * approx + HIGHPASS[k] * detail)
    return x


def dwt4(epoch: EegEpoch) -> WaveletCoeffs:
    """4-level decomposition of every channel."""
    if epoch.rejected:
        raise EpochError("epoch rejected")
    details: list[tuple[np.ndarray, ...]] = []
    approxs: list[np.ndarray] = []
    for ch in range(N_CHANNELS):
        x = epoch.samples[:, ch]
        ds = []
        for _ in range(LEVELS):
            x, d = _analysis_step(x)
            ds.append(d)
        details.append(tuple(ds))
        approxs.append(x)
    return WaveletCoeffs(details=tuple(details), approx=tuple(approxs))


def idwt4(coeffs: WaveletCoeffs) -> np.ndarray:
    """Inverse transform back to a (256, 5) sample matrix."""
    out = []
    for ch in range(N_CHANNELS):
        x = coeffs.approx[ch]
        for level in range(LEVELS, 0, -1):
            x = _synthesis_step(x, coeffs.detail(ch, level))
        out.append(x)
    return np.stack(out, axis=1)
