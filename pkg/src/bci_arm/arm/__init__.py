"""Virtual servo arm: pulse model, joint limits, command bindings."""

from .bindings import CCW, CW, Binding, CommandBinding, default_bindings
from .servo import (
    DEFAULT_MAX_STEP_DEG,
    DEFAULT_STEP_DEG,
    JOINT_NAMES,
    TICK_MS,
    ServoJoint,
    angle_to_pulse,
    pulse_to_angle,
)
from .state import SERVO_CENTER_DEG, ArmState, apply_command, tick

__all__ = [
    "ArmState",
    "Binding",
    "CCW",
    "CW",
    "CommandBinding",
    "DEFAULT_MAX_STEP_DEG",
    "DEFAULT_STEP_DEG",
    "JOINT_NAMES",
    "SERVO_CENTER_DEG",
    "ServoJoint",
    "TICK_MS",
    "angle_to_pulse",
    "apply_command",
    "default_bindings",
    "pulse_to_angle",
    "tick",
]
