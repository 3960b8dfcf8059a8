"""Wavelet feature extraction and command classification."""

from .classify import (
    MODEL_FORMAT,
    NearestReferenceClassifier,
    classify,
    train,
)
from .extract import (
    FEATURE_BANDS,
    FEATURE_NAMES,
    N_FEATURES,
    WaveletFeatureExtractor,
    extract_features,
)
from .stats import STAT_NAMES, energy, feature_row, stats
from .wavelet import BAND_LEVEL, WaveletCoeffs, dwt4, idwt4

__all__ = [
    "BAND_LEVEL",
    "FEATURE_BANDS",
    "FEATURE_NAMES",
    "MODEL_FORMAT",
    "N_FEATURES",
    "NearestReferenceClassifier",
    "STAT_NAMES",
    "WaveletCoeffs",
    "WaveletFeatureExtractor",
    "classify",
    "dwt4",
    "energy",
    "extract_features",
    "feature_row",
    "idwt4",
    "stats",
    "train",
]
