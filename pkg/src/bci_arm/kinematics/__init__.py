"""DH forward/inverse kinematics for the 6-DOF arm."""

from .dh import DEFAULT_LINKS_MM, DhRow, DhTable, Pose, dh_transform
from .fk import fk
from .ik import IkSolution, ik, select_branch

__all__ = [
    "DEFAULT_LINKS_MM",
    "DhRow",
    "DhTable",
    "IkSolution",
    "Pose",
    "dh_transform",
    "fk",
    "ik",
    "select_branch",
]
