"""Closed-form inverse kinematics for the 6-DOF arm.

Geometry, with t234 = t2 + t3 + t4 and the FK conventions of this package:

    p = (c1*A, s1*A, B)
    A = L2 s2 + L3 s23 + L4 c234
    B = L1 + L2 c2 + L3 c23 - L4 s234
    approach column a = (c1*c234, s1*c234, -s234)

Solution order: t1 from atan2(p_y, p_x); (s234, c234) from the approach
vector; the planar elbow pair (t2, t3) from the wrist center; t4 from
t234 - t2 - t3; t5 extracted from the full rotation (the orientation
determines it directly), or taken verbatim from a caller hint.

Sign conventions here are the ones that make the FK round trip close;
where the published formulas' argument order or signs disagree, the
round trip wins.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import KinematicsError
from .dh import DhTable, Pose

REACH_EPS = 1e-9
BASE_SINGULARITY_MM = 1e-9


@dataclass(frozen=True)
class IkSolution:
    elbow_up: tuple[float, float, float, float, float, float] | None
    elbow_down: tuple[float, float, float, float, float, float] | None
    reachable: bool

    def branches(self) -> list[tuple[float, ...]]:
        return [b for b in (self.elbow_up, self.elbow_down) if b is not None]


def _wrap_deg(x: float) -> float:
    """Normalize to (-180, 180]."""
    y = (x + 180.0) % 360.0 - 180.0
    return 180.0 if y == -180.0 else y


def ik(
    table: DhTable,
    target: Pose,
    theta5_hint_deg: float | None = None,
    theta1_fallback_deg: float = 0.0,
) -> IkSolution:
    """Both elbow branches for a target pose, angles in degrees.

    theta5_hint_deg=None derives t5 from the target orientation; a value
    uses it verbatim. theta1_fallback_deg is used only at the base
    singularity p_x = p_y = 0, where t1 is indeterminate.
    """
    target.require_orthonormal(tol=1e-6)
    R = target.rotation
    px, py, pz = (float(v) for v in target.position)
    l1, l2, l3, l4 = table.l1, table.l2, table.l3, table.l4

    if np.hypot(px, py) < BASE_SINGULARITY_MM:
        t1 = np.radians(theta1_fallback_deg)
    else:
        t1 = np.arctan2(py, px)
    c1, s1 = np.cos(t1), np.sin(t1)

    ax, ay, az = R[0, 2], R[1, 2], R[2, 2]
    c234 = c1 * ax + s1 * ay
    s234 = -az
    t234 = np.arctan2(s234, c234)

    # Planar wrist center in the (radial, vertical) frame of joint 2.
    u = c1 * px + s1 * py - l4 * c234
    v = (pz - l1) + l4 * s234

    c3 = (u * u + v * v - l2 * l2 - l3 * l3) / (2.0 * l2 * l3)
    if abs(c3) > 1.0 + REACH_EPS:
        return IkSolution(elbow_up=None, elbow_down=None, reachable=False)
    c3 = float(np.clip(c3, -1.0, 1.0))

    if theta5_hint_deg is None:
        # sin t5 = s1*n_x - c1*n_y ; cos t5 = s1*o_x - c1*o_y
        t5 = np.arctan2(s1 * R[0, 0] - c1 * R[1, 0], s1 * R[0, 1] - c1 * R[1, 1])
    else:
        t5 = np.radians(theta5_hint_deg)

    branches = []
    for s3 in (np.sqrt(1.0 - c3 * c3), -np.sqrt(1.0 - c3 * c3)):
        t3 = np.arctan2(s3, c3)
        k1 = l2 + l3 * c3
        k2 = l3 * s3
        denom = k1 * k1 + k2 * k2
        s2 = (k1 * u - k2 * v) / denom
        c2 = (k1 * v + k2 * u) / denom
        t2 = np.arctan2(s2, c2)
        t4 = t234 - t2 - t3
        branches.append(
            tuple(
                _wrap_deg(np.degrees(a)) for a in (t1, t2, t3, t4, t5, 0.0)
            )
        )
    return IkSolution(elbow_up=branches[0], elbow_down=branches[1], reachable=True)


def select_branch(
    sol: IkSolution, current_deg: tuple[float, ...] | list[float]
) -> tuple[float, ...]:
    """The branch with the least total joint travel from `current_deg`;
    exact ties go to elbow_up."""
    if not sol.reachable:
        raise KinematicsError("target is unreachable")
    cur = np.asarray(current_deg, dtype=float)

    def travel(branch: tuple[float, ...]) -> float:
        return float(np.sum(np.abs(np.asarray(branch) - cur)))

    return sol.elbow_up if travel(sol.elbow_up) <= travel(sol.elbow_down) else sol.elbow_down
