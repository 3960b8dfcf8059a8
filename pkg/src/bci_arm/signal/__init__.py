"""EEG acquisition stand-in: sessions, epochs, filtering, band power."""

from .bands import (
    ALPHA_BAND,
    BETA_BAND,
    CHANNELS,
    EPOCH_SAMPLES,
    EPOCH_SECONDS,
    FS_HZ,
    N_CHANNELS,
    TAXONOMY,
    BandDef,
    classify_band,
)
from .preprocess import bandpass, reject_artifacts, remove_dc
from .session import (
    EegEpoch,
    EegSample,
    LabelInterval,
    load_labels,
    load_session,
    make_epochs,
    quantize_16bit,
    save_labels,
    save_session,
)
from .spectrum import BandPower, psd, spectral_power
from .synth import gen_synthetic, gen_training_session

__all__ = [
    "ALPHA_BAND",
    "BETA_BAND",
    "BandDef",
    "BandPower",
    "CHANNELS",
    "EPOCH_SAMPLES",
    "EPOCH_SECONDS",
    "EegEpoch",
    "EegSample",
    "FS_HZ",
    "LabelInterval",
    "N_CHANNELS",
    "TAXONOMY",
    "bandpass",
    "classify_band",
    "gen_synthetic",
    "gen_training_session",
    "load_labels",
    "load_session",
    "make_epochs",
    "psd",
    "quantize_16bit",
    "reject_artifacts",
    "remove_dc",
    "save_labels",
    "save_session",
    "spectral_power",
]
