"""bci-arm: EEG-driven 6-DOF robotic arm simulator.

Subpackages: signal (sessions, epochs, band power, synthesis), features
(wavelet statistics + classifier), kinematics (DH FK/IK), arm (servo
model), pipeline (decode loop, scripts, logs), plus the CLI and the live
control service.
"""

from . import arm, features, kinematics, pipeline, signal
from .config import Config, load_config
from .labels import BY_CODE, BY_NAME, FACIAL, LABELS, MENTAL, CommandLabel, parse_label

__version__ = "0.1.0"

__all__ = [
    "BY_CODE",
    "BY_NAME",
    "CommandLabel",
    "Config",
    "FACIAL",
    "LABELS",
    "MENTAL",
    "arm",
    "features",
    "kinematics",
    "load_config",
    "parse_label",
    "pipeline",
    "signal",
]
