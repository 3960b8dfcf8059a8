"""Servo pulse semantics and the joint dataclass.

Standard hobby-servo convention: a 1.0 ms pulse in the 20 ms period is
0 deg, 2.0 ms is 180 deg, linear in between. Out-of-range values raise
instead of clamping; a bad pulse means a command bug upstream.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from ..errors import ServoError

TICK_MS = 20.0
PULSE_MIN_MS = 1.0
PULSE_MAX_MS = 2.0
ANGLE_MIN_DEG = 0.0
ANGLE_MAX_DEG = 180.0

JOINT_NAMES = ("Base", "Shoulder", "Elbow", "WristRot", "WristTrans", "Gripper")
DEFAULT_MAX_STEP_DEG = 3.0  # per 20 ms tick = 150 deg/s
DEFAULT_STEP_DEG = 90.0  # per command activation


def pulse_to_angle(pulse_ms: float) -> float:
    if not PULSE_MIN_MS <= pulse_ms <= PULSE_MAX_MS:
        raise ServoError(f"pulse {pulse_ms} ms outside [1.0, 2.0]")
    return (pulse_ms - PULSE_MIN_MS) / (PULSE_MAX_MS - PULSE_MIN_MS) * ANGLE_MAX_DEG


def angle_to_pulse(deg: float) -> float:
    if not ANGLE_MIN_DEG <= deg <= ANGLE_MAX_DEG:
        raise ServoError(f"angle {deg} deg outside [0, 180]")
    return PULSE_MIN_MS + deg / ANGLE_MAX_DEG * (PULSE_MAX_MS - PULSE_MIN_MS)


@dataclass(frozen=True)
class ServoJoint:
    name: str
    angle: float
    target: float
    min_deg: float = ANGLE_MIN_DEG
    max_deg: float = ANGLE_MAX_DEG
    max_step_deg: float = DEFAULT_MAX_STEP_DEG
    step_deg: float = DEFAULT_STEP_DEG

    def __post_init__(self) -> None:
        if not (0.0 <= self.min_deg < self.max_deg <= 180.0):
            raise ServoError(f"{self.name}: bad limits [{self.min_deg}, {self.max_deg}]")
        for field in ("angle", "target"):
            v = getattr(self, field)
            if not self.min_deg <= v <= self.max_deg:
                raise ServoError(f"{self.name}: {field} {v} outside limits")
        if self.max_step_deg <= 0 or self.step_deg <= 0:
            raise ServoError(f"{self.name}: step sizes must be positive")

    def with_target(self, target: float) -> "ServoJoint":
        clamped = min(max(target, self.min_deg), self.max_deg)
        return replace(self, target=clamped)

    def ticked(self) -> "ServoJoint":
        """Advance toward the target by at most max_step_deg."""
        delta = self.target - self.angle
        if abs(delta) <= self.max_step_deg:
            return replace(self, angle=self.target)
        step = self.max_step_deg if delta > 0 else -self.max_step_deg
        return replace(self, angle=self.angle + step)

    @property
    def settled(self) -> bool:
        return self.angle == self.target
