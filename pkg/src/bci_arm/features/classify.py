"""Nearest-reference command classifier with softmin confidence.

Features are z-scored with statistics fitted on the training set; each
label's reference is the centroid of its training vectors. Classification
is nearest centroid by Euclidean distance in the normalized space, with
confidence softmin(d) = exp(-d_best) / sum_l exp(-d_l); ties break toward
the lowest label code.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin

from ..errors import ModelError
from ..labels import BY_NAME, CommandLabel
from ..signal.session import EegEpoch
from .extract import N_FEATURES, extract_features

MODEL_FORMAT = "bci-arm model v1"
SCALE_FLOOR = 1e-6


class NearestReferenceClassifier(ClassifierMixin, BaseEstimator):
    """sklearn-style estimator over 70-dim feature rows, labels by name."""

    def fit(self, X, y):
        X = np.asarray(X, dtype=float)
        names = [str(v) for v in y]
        if X.ndim != 2 or X.shape[0] != len(names):
            raise ModelError("X must be (n_samples, n_features) matching y")
        unique = sorted(set(names), key=lambda n: BY_NAME[n].code)
        if len(unique) < 2:
            raise ModelError("need at least 2 distinct labels to train")
        self.classes_ = np.array(unique)
        self.n_features_in_ = X.shape[1]
        self.norm_mean_ = X.mean(axis=0)
        self.norm_scale_ = np.maximum(X.std(axis=0), SCALE_FLOOR)
        Z = (X - self.norm_mean_) / self.norm_scale_
        self.centroids_ = np.array(
            [Z[[n == u for n in names]].mean(axis=0) for u in unique]
        )
        self.label_scales_ = np.array(
            [
                np.maximum(Z[[n == u for n in names]].std(axis=0), SCALE_FLOOR)
                for u in unique
            ]
        )
        return self

    def _distances(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X[None, :]
        if X.shape[1] != self.n_features_in_:
            raise ModelError(
                f"feature dimension {X.shape[1]} != model's {self.n_features_in_}"
            )
        Z = (X - self.norm_mean_) / self.norm_scale_
        return np.linalg.norm(Z[:, None, :] - self.centroids_[None, :, :], axis=2)

    def predict(self, X) -> np.ndarray:
        d = self._distances(X)
        return self.classes_[np.argmin(d, axis=1)]

    def predict_proba(self, X) -> np.ndarray:
        """Softmin over centroid distances, rows summing to 1."""
        d = self._distances(X)
        shifted = np.exp(-(d - d.min(axis=1, keepdims=True)))
        return shifted / shifted.sum(axis=1, keepdims=True)

    def to_dict(self) -> dict:
        return {
            "format": MODEL_FORMAT,
            "n_features": int(self.n_features_in_),
            "norm_mean": self.norm_mean_.tolist(),
            "norm_scale": self.norm_scale_.tolist(),
            "labels": [
                {
                    "name": str(name),
                    "code": BY_NAME[str(name)].code,
                    "source": BY_NAME[str(name)].source,
                    "centroid": self.centroids_[i].tolist(),
                    "scale": self.label_scales_[i].tolist(),
                }
                for i, name in enumerate(self.classes_)
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "NearestReferenceClassifier":
        if doc.get("format") != MODEL_FORMAT:
            raise ModelError(f"unknown model format: {doc.get('format')!r}")
        self = cls()
        self.n_features_in_ = int(doc["n_features"])
        self.norm_mean_ = np.array(doc["norm_mean"], dtype=float)
        self.norm_scale_ = np.array(doc["norm_scale"], dtype=float)
        labels = sorted(doc["labels"], key=lambda l: l["code"])
        self.classes_ = np.array([l["name"] for l in labels])
        self.centroids_ = np.array([l["centroid"] for l in labels], dtype=float)
        self.label_scales_ = np.array([l["scale"] for l in labels], dtype=float)
        return self

    def save(self, path: str | Path) -> None:
        Path(path).write_text(
            json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n",
            encoding="utf-8",
        )

    @classmethod
    def load(cls, path: str | Path) -> "NearestReferenceClassifier":
        p = Path(path)
        if not p.exists():
            raise ModelError(f"model not found: {p}")
        try:
            doc = json.loads(p.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ModelError(f"model file is not valid JSON: {exc}") from None
        return cls.from_dict(doc)


def train(labeled_epochs: Sequence[tuple[EegEpoch, CommandLabel]]) -> NearestReferenceClassifier:
    """Fit a model from (epoch, label) pairs. Requires >= 2 distinct labels."""
    if not labeled_epochs:
        raise ModelError("no training epochs")
    X = np.array([extract_features(e) for e, _ in labeled_epochs])
    y = [label.name for _, label in labeled_epochs]
    return NearestReferenceClassifier().fit(X, y)


def classify(
    model: NearestReferenceClassifier, fv: np.ndarray
) -> tuple[CommandLabel, float]:
    """(label, confidence) for one feature vector."""
    proba = model.predict_proba(np.asarray(fv)[None, :])[0]
    # argmax with ties toward the lowest code: classes_ is code-sorted and
    # argmax takes the first maximum.
    best = int(np.argmax(proba))
    return BY_NAME[str(model.classes_[best])], float(proba[best])
