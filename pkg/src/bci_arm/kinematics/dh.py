"""Denavit-Hartenberg table for the 6-DOF arm (modified convention).

The table's symbolic pattern is fixed; only the four link lengths vary:

    i      1     2        3     4     5     6
    alpha  0    -90       0     0    -90    0
    a      0     0        L2    L3    0     0
    d      L1    0        0     0     0     L4
    theta  t1    t2-90    t3    t4    t5    0

Angles at the public interfaces are degrees; radians internally.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import KinematicsError

DEFAULT_LINKS_MM = {"L1": 100.0, "L2": 105.0, "L3": 100.0, "L4": 60.0}


@dataclass(frozen=True)
class DhRow:
    alpha_prev_deg: float
    a_prev_mm: float
    d_mm: float
    theta_offset_deg: float
    theta_is_variable: bool


@dataclass(frozen=True)
class DhTable:
    rows: tuple[DhRow, ...]
    l1: float
    l2: float
    l3: float
    l4: float

    def __post_init__(self) -> None:
        if len(self.rows) != 6:
            raise KinematicsError("DH table must have exactly 6 rows")
        if min(self.l1, self.l2, self.l3, self.l4) <= 0:
            raise KinematicsError("link lengths must be positive")
        if self.rows[5].theta_is_variable:
            raise KinematicsError("row 6 theta is fixed at 0")

    @classmethod
    def from_links(
        cls,
        l1: float = DEFAULT_LINKS_MM["L1"],
        l2: float = DEFAULT_LINKS_MM["L2"],
        l3: float = DEFAULT_LINKS_MM["L3"],
        l4: float = DEFAULT_LINKS_MM["L4"],
    ) -> "DhTable":
        rows = (
            DhRow(0.0, 0.0, l1, 0.0, True),
            DhRow(-90.0, 0.0, 0.0, -90.0, True),
            DhRow(0.0, l2, 0.0, 0.0, True),
            DhRow(0.0, l3, 0.0, 0.0, True),
            DhRow(-90.0, 0.0, 0.0, 0.0, True),
            DhRow(0.0, 0.0, l4, 0.0, False),
        )
        return cls(rows=rows, l1=l1, l2=l2, l3=l3, l4=l4)


@dataclass(frozen=True)
class Pose:
    """End-effector frame: 3x3 rotation (columns n, o, a) + position in mm."""

    rotation: np.ndarray
    position: np.ndarray

    def __post_init__(self) -> None:
        r = np.asarray(self.rotation, dtype=float)
        p = np.asarray(self.position, dtype=float)
        if r.shape != (3, 3) or p.shape != (3,):
            raise KinematicsError("pose needs a 3x3 rotation and length-3 position")
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "position", p)

    def require_orthonormal(self, tol: float = 1e-9) -> None:
        r = self.rotation
        if np.max(np.abs(r.T @ r - np.eye(3))) > tol or abs(np.linalg.det(r) - 1) > tol:
            raise KinematicsError("rotation is not orthonormal / right-handed")


def dh_transform(alpha_prev_deg: float, a_prev_mm: float, d_mm: float, theta_deg: float) -> np.ndarray:
    """One elementary link transform:
    RotX(alpha_{i-1}) . TransX(a_{i-1}) . RotZ(theta_i) . TransZ(d_i).
    """
    al = np.radians(alpha_prev_deg)
    th = np.radians(theta_deg)
    ca, sa = np.cos(al), np.sin(al)
    ct, st = np.cos(th), np.sin(th)
    return np.array(
        [
            [ct, -st, 0.0, a_prev_mm],
            [st * ca, ct * ca, -sa, -sa * d_mm],
            [st * sa, ct * sa, ca, ca * d_mm],
            [0.0, 0.0, 0.0, 1.0],
        ]
    )
