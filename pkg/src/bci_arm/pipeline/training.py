"""Training from a recorded session plus a label track."""
from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

from ..errors import BciArmError
from ..features import NearestReferenceClassifier
from ..features.classify import train
from ..labels import CommandLabel, parse_label
from ..signal import (
    EPOCH_SECONDS,
    EegEpoch,
    EegSample,
    LabelInterval,
    load_labels,
    load_session,
    make_epochs,
)
from .run import SafetyConfig, preprocess_epoch


def label_epochs(
    epochs: Sequence[EegEpoch], track: Sequence[LabelInterval]
) -> list[tuple[EegEpoch, CommandLabel]]:
    """Assign each epoch the label of the interval it overlaps most.

    Epochs overlapping no interval are discarded. Raises if a tracked
    label ends up with zero epochs, naming the missing labels.
    """
    labeled: list[tuple[EegEpoch, CommandLabel]] = []
    seen: set[str] = set()
    for epoch in epochs:
        lo, hi = epoch.start_t, epoch.start_t + EPOCH_SECONDS
        best: Optional[LabelInterval] = None
        best_overlap = 0.0
        for iv in track:
            overlap = min(hi, iv.end_t) - max(lo, iv.start_t)
            if overlap > best_overlap:
                best, best_overlap = iv, overlap
        if best is not None:
            labeled.append((epoch, parse_label(best.label)))
            seen.add(parse_label(best.label).name)
    missing = sorted({parse_label(iv.label).name for iv in track} - seen)
    if missing:
        raise BciArmError(f"labels with zero epochs: {', '.join(missing)}")
    return labeled


def train_session(
    session_path: str | Path,
    labels_path: str | Path,
    model_path: Optional[str | Path] = None,
    safety: Optional[SafetyConfig] = None,
) -> NearestReferenceClassifier:
    """Load, epoch, preprocess, label, and fit; optionally save the model.

    Epochs pass through the same preprocessing chain as live decoding, so
    training and inference see identical feature distributions. Rejected
    epochs are dropped.
    """
    safety = safety or SafetyConfig()
    samples = load_session(session_path)
    track = load_labels(labels_path)
    if len({parse_label(iv.label).name for iv in track}) < 2:
        raise BciArmError("label track must cover at least 2 labels")
    epochs = make_epochs(samples)
    labeled = label_epochs(epochs, track)
    processed = []
    for epoch, label in labeled:
        limited, rejected, _ = preprocess_epoch(epoch, safety)
        if not rejected:
            processed.append((limited, label))
    if not processed:
        raise BciArmError("no usable labeled epochs after preprocessing")
    model = train(processed)
    if model_path is not None:
        model.save(model_path)
    return model
