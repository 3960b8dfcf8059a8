"""Command-to-joint bindings: 12 labels onto 6 joints x 2 directions.

CW means increasing servo angle. The first label of each pair is CW:
Base move_right/move_left, Shoulder push/pull, Elbow lift/drop,
WristRot raise_brows/furrow_brows, WristTrans wink_left/wink_right,
Gripper smile/clench_teeth (smile = close).
"""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import ServoError
from ..labels import BY_NAME, CommandLabel

CW = "CW"
CCW = "CCW"


@dataclass(frozen=True)
class Binding:
    joint: str
    direction: str  # CW | CCW


@dataclass(frozen=True)
class CommandBinding:
    table: dict[str, Binding]

    def lookup(self, label: CommandLabel | str) -> Binding:
        name = label.name if isinstance(label, CommandLabel) else label
        if name not in self.table:
            raise ServoError(f"no binding for command {name!r}")
        return self.table[name]

    def __contains__(self, label: CommandLabel | str) -> bool:
        name = label.name if isinstance(label, CommandLabel) else label
        return name in self.table


_DEFAULT_PAIRS = [
    ("Base", "move_right", "move_left"),
    ("Shoulder", "push", "pull"),
    ("Elbow", "lift", "drop"),
    ("WristRot", "raise_brows", "furrow_brows"),
    ("WristTrans", "wink_left", "wink_right"),
    ("Gripper", "smile", "clench_teeth"),
]


def default_bindings() -> CommandBinding:
    table: dict[str, Binding] = {}
    for joint, cw_label, ccw_label in _DEFAULT_PAIRS:
        table[BY_NAME[cw_label].name] = Binding(joint, CW)
        table[BY_NAME[ccw_label].name] = Binding(joint, CCW)
    return CommandBinding(table=table)
