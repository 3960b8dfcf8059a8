"""Frequency band taxonomy and the decoding band defaults.

Two sets of band edges coexist on purpose: the display taxonomy is a
gap-free partition of [0.5, 64) Hz used to label arbitrary frequencies,
while the decoding path uses the narrower Alpha 8-12 / Beta 13-30 edges.
"""
from __future__ import annotations

from dataclasses import dataclass

FS_HZ = 128.0
EPOCH_SECONDS = 2.0
EPOCH_SAMPLES = 256
CHANNELS = ("AF3", "AF4", "T7", "T8", "Pz")
N_CHANNELS = 5

SUB_DELTA = "sub-delta"


@dataclass(frozen=True)
class BandDef:
    """Half-open frequency interval [lo_hz, hi_hz) with a canonical name."""

    name: str
    lo_hz: float
    hi_hz: float

    def __post_init__(self) -> None:
        if not (0.0 < self.lo_hz < self.hi_hz):
            raise ValueError(f"bad band edges {self.lo_hz}..{self.hi_hz}")

    def contains(self, freq_hz: float) -> bool:
        return self.lo_hz <= freq_hz < self.hi_hz


# Display taxonomy: gap-free partition of [0.5, 64).
TAXONOMY = (
    BandDef("Delta", 0.5, 4.0),
    BandDef("Theta", 4.0, 8.0),
    BandDef("Alpha", 8.0, 12.0),
    BandDef("Beta", 12.0, 35.0),
    BandDef("Gamma", 35.0, 64.0),
)

# Decoding defaults: the band-pass stage keeps only these two.
ALPHA_BAND = BandDef("Alpha", 8.0, 12.0)
BETA_BAND = BandDef("Beta", 13.0, 30.0)


def classify_band(freq_hz: float) -> str:
    """Name the taxonomy band containing ``freq_hz``.

    Frequencies below 0.5 Hz map to the "sub-delta" sentinel; the top band
    is open-ended upward so any super-Gamma frequency still reads "Gamma".
    """
    if freq_hz <= 0.0:
        raise ValueError("frequency must be positive")
    if freq_hz < TAXONOMY[0].lo_hz:
        return SUB_DELTA
    for band in TAXONOMY[:-1]:
        if band.contains(freq_hz):
            return band.name
    return TAXONOMY[-1].name
