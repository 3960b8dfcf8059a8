"""Immutable virtual arm state and its transitions.

apply_command moves a joint's target by its configured step (CW = +,
CCW = -), clamped to limits; tick slews every joint toward its target by
at most max_step_deg. Both return new states.

The kinematic pose is derived from the first five servos: Base -> t1,
Shoulder -> t2, Elbow -> t3, WristTrans -> t4, WristRot -> t5, each as
servo angle - 90 so the 90-degree servo midpoint is the DH zero. The
gripper servo does not enter the kinematic chain.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from ..errors import ServoError
from ..kinematics import DhTable, Pose, fk
from ..labels import CommandLabel
from .bindings import CW, CommandBinding
from .servo import JOINT_NAMES, ServoJoint

SERVO_CENTER_DEG = 90.0
# servo name -> index of the DH joint it drives (t1..t5)
_DH_SLOT = {"Base": 0, "Shoulder": 1, "Elbow": 2, "WristTrans": 3, "WristRot": 4}


@dataclass(frozen=True)
class ArmState:
    joints: tuple[ServoJoint, ...]
    table: DhTable
    tick_count: int = 0
    last_command: Optional[tuple[str, float]] = None  # (label name, confidence)

    def __post_init__(self) -> None:
        if tuple(j.name for j in self.joints) != JOINT_NAMES:
            raise ServoError(f"joints must be exactly {JOINT_NAMES}")

    @classmethod
    def home(cls, table: DhTable, **joint_overrides: dict) -> "ArmState":
        """All servos centered at 90 degrees."""
        joints = []
        for name in JOINT_NAMES:
            kwargs = dict(joint_overrides.get(name, {}))
            joints.append(ServoJoint(name=name, angle=90.0, target=90.0, **kwargs))
        return cls(joints=tuple(joints), table=table)

    def joint(self, name: str) -> ServoJoint:
        return self.joints[JOINT_NAMES.index(name)]

    def _replace_joint(self, name: str, joint: ServoJoint) -> "ArmState":
        i = JOINT_NAMES.index(name)
        return replace(self, joints=self.joints[:i] + (joint,) + self.joints[i + 1 :])

    @property
    def joint_angles_deg(self) -> tuple[float, ...]:
        """DH joint angles t1..t6 derived from the servo angles."""
        q = [0.0] * 6
        for name, slot in _DH_SLOT.items():
            q[slot] = self.joint(name).angle - SERVO_CENTER_DEG
        return tuple(q)

    @property
    def pose(self) -> Pose:
        return fk(self.table, self.joint_angles_deg)

    @property
    def settled(self) -> bool:
        return all(j.settled for j in self.joints)


def apply_command(
    state: ArmState,
    binding: CommandBinding,
    cmd: CommandLabel,
    confidence: float = 1.0,
) -> ArmState:
    """Retarget the bound joint by +-step_deg (clamped); motion happens
    across subsequent ticks."""
    b = binding.lookup(cmd)
    joint = state.joint(b.joint)
    sign = 1.0 if b.direction == CW else -1.0
    new = state._replace_joint(b.joint, joint.with_target(joint.target + sign * joint.step_deg))
    return replace(new, last_command=(cmd.name, confidence))


def tick(state: ArmState) -> ArmState:
    """One 20 ms PWM period: every joint slews toward its target."""
    return replace(
        state,
        joints=tuple(j.ticked() for j in state.joints),
        tick_count=state.tick_count + 1,
    )
