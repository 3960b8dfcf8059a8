"""Forward kinematics: joint angles (degrees) -> end-effector pose."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from ..errors import KinematicsError
from .dh import DhTable, Pose, dh_transform


def fk(table: DhTable, q_deg: Sequence[float]) -> Pose:
    """Compose the six elementary DH transforms.

    q_deg holds the user-facing joint angles t1..t6 (t6 is ignored for
    variable purposes: row 6 is fixed at 0). Constant offsets from the
    table (the -90 in row 2) are added internally.
    """
    q = np.asarray(q_deg, dtype=float)
    if q.shape != (6,):
        raise KinematicsError("expected 6 joint angles")
    T = np.eye(4)
    for row, qi in zip(table.rows, q):
        theta = row.theta_offset_deg + (qi if row.theta_is_variable else 0.0)
        T = T @ dh_transform(row.alpha_prev_deg, row.a_prev_mm, row.d_mm, theta)
    return Pose(rotation=T[:3, :3].copy(), position=T[:3, 3].copy())
