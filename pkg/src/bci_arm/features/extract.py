"""Epoch -> 70-dimensional feature vector.

Dimension order is fixed and versioned: channel-major over
[AF3, AF4, T7, T8, Pz], then band [Alpha, Beta], then statistic
[energy, mean, variance, skewness, kurtosis, max, min]. FEATURE_NAMES
spells out all 70 names in that order.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from ..signal.bands import CHANNELS
from ..signal.session import EegEpoch
from .stats import STAT_NAMES, feature_row
from .wavelet import dwt4

FEATURE_BANDS = ("Alpha", "Beta")
FEATURE_NAMES: tuple[str, ...] = tuple(
    f"{ch}.{band}.{stat}"
    for ch in CHANNELS
    for band in FEATURE_BANDS
    for stat in STAT_NAMES
)
N_FEATURES = len(FEATURE_NAMES)  # 70


def extract_features(epoch: EegEpoch) -> np.ndarray:
    """Wavelet band statistics for one preprocessed epoch."""
    coeffs = dwt4(epoch)
    rows = [
        feature_row(coeffs.band_coeffs(ch, band))
        for ch in range(len(CHANNELS))
        for band in FEATURE_BANDS
    ]
    return np.concatenate(rows)


class WaveletFeatureExtractor(TransformerMixin, BaseEstimator):
    """Stateless sklearn transformer: list of epochs -> (n, 70) matrix."""

    def fit(self, X: Sequence[EegEpoch], y=None):
        return self

    def transform(self, X: Sequence[EegEpoch]) -> np.ndarray:
        return np.array([extract_features(e) for e in X])

    def get_feature_names_out(self, input_features=None):
        return np.array(FEATURE_NAMES)
