"""Session file I/O and epoching.

A session is a line-oriented UTF-8 file:

    # bci-arm session v1 fs=128
    t,af3,af4,t7,t8,pz
    ...

one sample per line, decimal text, timestamps strictly increasing. The
optional label track is `start_t,end_t,label` per line with its own header.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from ..errors import EpochError, SessionFormatError
from .bands import EPOCH_SAMPLES, FS_HZ, N_CHANNELS

SESSION_HEADER = "# bci-arm session v1 fs=128"
LABEL_HEADER = "# bci-arm labels v1"


class EegSample(NamedTuple):
    """One 5-channel sample: t seconds, channels in [AF3, AF4, T7, T8, Pz] uV."""

    t: float
    ch: tuple[float, float, float, float, float]


@dataclass(frozen=True)
class EegEpoch:
    """One 2 s analysis window: 256 x 5 samples at 128 Hz."""

    start_t: float
    samples: np.ndarray  # (256, 5) float64, microvolts
    fs: float = FS_HZ
    rejected: bool = False

    def __post_init__(self) -> None:
        s = np.asarray(self.samples, dtype=float)
        if s.shape != (EPOCH_SAMPLES, N_CHANNELS):
            raise EpochError(f"epoch shape {s.shape}, expected (256, 5)")
        if not np.all(np.isfinite(s)):
            raise EpochError("epoch contains non-finite values")
        object.__setattr__(self, "samples", s)

    def with_samples(self, samples: np.ndarray) -> "EegEpoch":
        return replace(self, samples=samples)


@dataclass(frozen=True)
class LabelInterval:
    start_t: float
    end_t: float
    label: str


def save_session(samples: Iterable[EegSample], path: str | Path) -> None:
    lines = [SESSION_HEADER]
    for s in samples:
        lines.append(",".join([repr(float(s.t))] + [repr(float(v)) for v in s.ch]))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_session(path: str | Path) -> list[EegSample]:
    """Read a session file; raises SessionFormatError naming the bad line."""
    p = Path(path)
    if not p.exists():
        raise SessionFormatError(f"session file not found: {p}")
    samples: list[EegSample] = []
    prev_t = -np.inf
    for lineno, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split(",")
        if len(fields) != 1 + N_CHANNELS:
            raise SessionFormatError(
                f"expected 5 channels at line {lineno} (got {len(fields) - 1})"
            )
        try:
            vals = [float(f) for f in fields]
        except ValueError as exc:
            raise SessionFormatError(f"bad number at line {lineno}: {exc}") from None
        t = vals[0]
        if t < 0:
            raise SessionFormatError(f"negative timestamp at line {lineno}")
        if t <= prev_t:
            raise SessionFormatError(f"non-monotonic timestamp at line {lineno}")
        prev_t = t
        samples.append(EegSample(t, tuple(vals[1:])))
    return samples


def save_labels(intervals: Iterable[LabelInterval], path: str | Path) -> None:
    lines = [LABEL_HEADER]
    for iv in intervals:
        lines.append(f"{iv.start_t!r},{iv.end_t!r},{iv.label}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_labels(path: str | Path) -> list[LabelInterval]:
    p = Path(path)
    if not p.exists():
        raise SessionFormatError(f"label track not found: {p}")
    out: list[LabelInterval] = []
    for lineno, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split(",")
        if len(fields) != 3:
            raise SessionFormatError(f"expected start,end,label at line {lineno}")
        try:
            start, end = float(fields[0]), float(fields[1])
        except ValueError:
            raise SessionFormatError(f"bad number at line {lineno}") from None
        if end <= start:
            raise SessionFormatError(f"empty interval at line {lineno}")
        out.append(LabelInterval(start, end, fields[2]))
    return out


def make_epochs(samples: Sequence[EegSample]) -> list[EegEpoch]:
    """Cut consecutive non-overlapping 256-sample windows.

    Fewer than 256 samples yields an empty list; a trailing remainder is
    dropped. The sample rate is validated from the timestamps (+-1%).
    """
    n = len(samples)
    if n < EPOCH_SAMPLES:
        return []
    t = np.array([s.t for s in samples])
    dt = np.diff(t)
    expected = 1.0 / FS_HZ
    if np.any(np.abs(dt - expected) > 0.01 * expected):
        worst = int(np.argmax(np.abs(dt - expected)))
        raise EpochError(
            f"sample rate deviates more than 1% from 128 Hz near t={t[worst]:.4f}"
        )
    values = np.array([s.ch for s in samples], dtype=float)
    epochs = []
    for i in range(0, n - EPOCH_SAMPLES + 1, EPOCH_SAMPLES):
        epochs.append(EegEpoch(start_t=float(t[i]), samples=values[i : i + EPOCH_SAMPLES]))
    return epochs


def quantize_16bit(samples: Sequence[EegSample], lsb_uv: float = 0.5) -> list[EegSample]:
    """Optional fidelity model of the 16-bit front end (off by default)."""
    lo, hi = -32768, 32767
    out = []
    for s in samples:
        q = tuple(
            float(np.clip(round(v / lsb_uv), lo, hi)) * lsb_uv for v in s.ch
        )
        out.append(EegSample(s.t, q))
    return out
