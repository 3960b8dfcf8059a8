"""The 12 mental/facial command labels and their integer codes."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CommandLabel:
    name: str
    code: int
    source: str  # "mental" | "facial"


_SPECS = [
    ("push", 1, "mental"),
    ("pull", 2, "mental"),
    ("lift", 3, "mental"),
    ("drop", 4, "mental"),
    ("move_right", 5, "mental"),
    ("move_left", 6, "mental"),
    ("raise_brows", 7, "facial"),
    ("furrow_brows", 8, "facial"),
    ("wink_left", 9, "facial"),
    ("wink_right", 10, "facial"),
    ("smile", 11, "facial"),
    ("clench_teeth", 12, "facial"),
]

LABELS: tuple[CommandLabel, ...] = tuple(CommandLabel(*s) for s in _SPECS)
BY_NAME: dict[str, CommandLabel] = {l.name: l for l in LABELS}
BY_CODE: dict[int, CommandLabel] = {l.code: l for l in LABELS}
MENTAL = tuple(l for l in LABELS if l.source == "mental")
FACIAL = tuple(l for l in LABELS if l.source == "facial")


def parse_label(name: str) -> CommandLabel:
    """Case-insensitive lookup, tolerant of CamelCase and hyphens."""
    key = name.strip().lower().replace("-", "_").replace(" ", "_")
    if key not in BY_NAME:
        # CamelCase like "MoveRight" -> "move_right"
        import re

        key = re.sub(r"(?<!^)(?=[A-Z])", "_", name.strip()).lower()
    if key not in BY_NAME:
        raise KeyError(f"unknown command label: {name!r}")
    return BY_NAME[key]
