"""Decoding loop, scripts, event logging, and session training."""

from .events import EVENTS_HEADER, load_events, record_events
from .run import (
    BAND_POWER_MODE,
    CONFIDENCE_MODE,
    GATE_BELOW_THRESHOLD,
    GATE_COOLDOWN,
    GATE_PASSED,
    GATE_REJECTED,
    TICKS_PER_EPOCH,
    PipelineEvent,
    SafetyConfig,
    preprocess_epoch,
    run_pipeline,
)
from .script import BUNDLED_SCRIPTS, PICK_AND_PLACE, Script, run_script
from .training import label_epochs, train_session

__all__ = [
    "BAND_POWER_MODE",
    "BUNDLED_SCRIPTS",
    "CONFIDENCE_MODE",
    "EVENTS_HEADER",
    "GATE_BELOW_THRESHOLD",
    "GATE_COOLDOWN",
    "GATE_PASSED",
    "GATE_REJECTED",
    "PICK_AND_PLACE",
    "PipelineEvent",
    "SafetyConfig",
    "Script",
    "TICKS_PER_EPOCH",
    "label_epochs",
    "load_events",
    "preprocess_epoch",
    "record_events",
    "run_pipeline",
    "run_script",
    "train_session",
]
