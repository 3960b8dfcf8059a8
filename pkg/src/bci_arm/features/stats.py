"""Per-coefficient-vector features: energy and the six moments/extremes."""
from __future__ import annotations

import numpy as np

STAT_NAMES = ("energy", "mean", "variance", "skewness", "kurtosis", "max", "min")
_DEGENERATE_VAR = 1e-300


def energy(coeffs: np.ndarray) -> float:
    """Sum of squared coefficients; 0 for an empty vector."""
    return float(np.sum(np.square(coeffs)))


def stats(coeffs: np.ndarray) -> dict[str, float]:
    """Mean, population variance, standardized skewness and (non-excess)
    kurtosis, max and min. Zero-variance vectors get skewness = kurtosis = 0
    by convention rather than NaN.
    """
    d = np.asarray(coeffs, dtype=float)
    if d.size == 0:
        raise ValueError("stats of empty coefficient vector")
    mean = float(np.mean(d))
    centered = d - mean
    variance = float(np.mean(centered**2))
    if variance <= _DEGENERATE_VAR:
        skewness = 0.0
        kurtosis = 0.0
    else:
        std = np.sqrt(variance)
        skewness = float(np.mean(centered**3) / std**3)
        kurtosis = float(np.mean(centered**4) / variance**2)
    return {
        "mean": mean,
        "variance": variance,
        "skewness": skewness,
        "kurtosis": kurtosis,
        "max": float(np.max(d)),
        "min": float(np.min(d)),
    }


def feature_row(coeffs: np.ndarray) -> np.ndarray:
    """The 7 statistics in STAT_NAMES order."""
    s = stats(coeffs)
    return np.array([energy(coeffs)] + [s[name] for name in STAT_NAMES[1:]])
