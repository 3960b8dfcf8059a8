"""The live decoding loop: epochs -> features -> label -> gate -> arm.

Per epoch: remove DC, screen artifacts, band-limit to Alpha+Beta,
extract wavelet features, classify, then gate. A command reaches the arm
only when the epoch survived screening, the confidence (or band power,
in power-gating mode) clears the threshold, and the cooldown from the
previous accepted command has elapsed. Every epoch emits exactly one
event, so gate behaviour is auditable from the log alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from ..arm import ArmState, CommandBinding, apply_command, tick
from ..errors import BciArmError
from ..features import NearestReferenceClassifier, extract_features
from ..features.classify import classify
from ..labels import BY_NAME
from ..signal import (
    ALPHA_BAND,
    BETA_BAND,
    BandDef,
    EegEpoch,
    bandpass,
    reject_artifacts,
    remove_dc,
    spectral_power,
)
from ..signal.preprocess import DEFAULT_CLIP_FRACTION, DEFAULT_CLIP_UV

GATE_PASSED = "passed"
GATE_BELOW_THRESHOLD = "below_threshold"
GATE_COOLDOWN = "cooldown"
GATE_REJECTED = "rejected_epoch"

TICKS_PER_EPOCH = 100  # 2 s of 20 ms periods

CONFIDENCE_MODE = "confidence"
BAND_POWER_MODE = "band_power"


@dataclass(frozen=True)
class SafetyConfig:
    confidence_threshold: float = 0.5
    cooldown_epochs: int = 1
    clip_uv: float = DEFAULT_CLIP_UV
    clip_fraction: float = DEFAULT_CLIP_FRACTION
    gate_mode: str = CONFIDENCE_MODE
    band_power_threshold: float = 0.0  # uV^2/Hz, used in band_power mode
    alpha_band: BandDef = ALPHA_BAND
    beta_band: BandDef = BETA_BAND

    def __post_init__(self) -> None:
        if not 0.0 <= self.confidence_threshold <= 1.0:
            raise BciArmError("confidence threshold must be in [0, 1]")
        if self.cooldown_epochs < 0:
            raise BciArmError("cooldown must be >= 0")
        if self.gate_mode not in (CONFIDENCE_MODE, BAND_POWER_MODE):
            raise BciArmError(f"unknown gate mode {self.gate_mode!r}")


@dataclass(frozen=True)
class PipelineEvent:
    epoch_index: int
    start_t: float
    alpha_power: tuple[float, ...]  # per channel
    beta_power: tuple[float, ...]
    features: Optional[tuple[float, ...]]
    label: Optional[str]
    confidence: Optional[float]
    gate: str
    command: Optional[str]  # label name actually applied, iff gate == passed


def preprocess_epoch(
    epoch: EegEpoch, safety: SafetyConfig
) -> tuple[EegEpoch, bool, np.ndarray]:
    """(band-limited epoch, rejected?, per-channel [alpha, beta] powers)."""
    e = remove_dc(epoch)
    e = reject_artifacts(e, clip_uv=safety.clip_uv, max_fraction=safety.clip_fraction)
    if e.rejected:
        return e, True, np.zeros((5, 2))
    power = spectral_power(e, bands=(safety.alpha_band, safety.beta_band))
    limited = e.with_samples(
        bandpass(e, safety.alpha_band).samples + bandpass(e, safety.beta_band).samples
    )
    return limited, False, power.values


def run_pipeline(
    source: Iterable[EegEpoch],
    model: NearestReferenceClassifier,
    safety: SafetyConfig,
    arm: ArmState,
    binding: CommandBinding,
) -> tuple[list[PipelineEvent], ArmState]:
    """Decode every epoch from `source`, driving `arm` through the gate.

    The arm advances TICKS_PER_EPOCH ticks per epoch (one 2 s window of
    20 ms PWM periods), so accepted commands play out between decodes.
    """
    if not hasattr(model, "centroids_"):
        raise BciArmError("model is not trained")
    events: list[PipelineEvent] = []
    cooldown_left = 0
    n_epochs = 0
    for index, epoch in enumerate(source):
        n_epochs += 1
        limited, rejected, power = preprocess_epoch(epoch, safety)
        if rejected:
            events.append(
                PipelineEvent(
                    epoch_index=index,
                    start_t=epoch.start_t,
                    alpha_power=tuple(power[:, 0]),
                    beta_power=tuple(power[:, 1]),
                    features=None,
                    label=None,
                    confidence=None,
                    gate=GATE_REJECTED,
                    command=None,
                )
            )
            cooldown_left = max(0, cooldown_left - 1)
            arm = _advance(arm)
            continue
        fv = extract_features(limited)
        label, confidence = classify(model, fv)
        if cooldown_left > 0:
            gate = GATE_COOLDOWN
            cooldown_left -= 1
        elif _strength(confidence, power, safety) < _threshold(safety):
            gate = GATE_BELOW_THRESHOLD
        else:
            gate = GATE_PASSED
            cooldown_left = safety.cooldown_epochs
        command = None
        if gate == GATE_PASSED:
            # unbound labels raise: gate=passed must imply an arm command
            arm = apply_command(arm, binding, label, confidence)
            command = label.name
        events.append(
            PipelineEvent(
                epoch_index=index,
                start_t=epoch.start_t,
                alpha_power=tuple(power[:, 0]),
                beta_power=tuple(power[:, 1]),
                features=tuple(float(v) for v in fv),
                label=label.name,
                confidence=confidence,
                gate=gate,
                command=command,
            )
        )
        arm = _advance(arm)
    if n_epochs == 0:
        raise BciArmError("source yielded no epochs")
    return events, arm


def _advance(arm: ArmState) -> ArmState:
    for _ in range(TICKS_PER_EPOCH):
        arm = tick(arm)
    return arm


def _strength(confidence: float, power: np.ndarray, safety: SafetyConfig) -> float:
    if safety.gate_mode == BAND_POWER_MODE:
        return float(power[:, 1].mean())
    return confidence


def _threshold(safety: SafetyConfig) -> float:
    if safety.gate_mode == BAND_POWER_MODE:
        return safety.band_power_threshold
    return safety.confidence_threshold
