"""Scripted command sequences, including the bundled pick-and-place."""
from __future__ import annotations

from dataclasses import dataclass

from ..arm import ArmState, CommandBinding, apply_command, tick
from ..errors import BciArmError
from ..labels import BY_NAME, CommandLabel, parse_label

MAX_TICKS_PER_STEP = 100_000


@dataclass(frozen=True)
class Script:
    name: str
    steps: tuple[tuple[CommandLabel, int], ...]  # (label, repeat count)

    def __post_init__(self) -> None:
        if not self.steps:
            raise BciArmError(f"script {self.name!r} has no steps")

    @classmethod
    def from_names(cls, name: str, steps: list[tuple[str, int]]) -> "Script":
        return cls(name, tuple((parse_label(n), r) for n, r in steps))


# Lower the gripper to the object, close, lift back up, swing the base to
# the drop zone, release. Mixes mental and facial command sources.
PICK_AND_PLACE = Script.from_names(
    "pick_and_place",
    [
        ("drop", 1),
        ("pull", 1),
        ("smile", 1),
        ("lift", 1),
        ("push", 1),
        ("move_right", 1),
        ("clench_teeth", 1),
    ],
)

BUNDLED_SCRIPTS = {PICK_AND_PLACE.name: PICK_AND_PLACE}


def run_script(
    script: Script, arm: ArmState, binding: CommandBinding
) -> list[ArmState]:
    """Apply each step, ticking to rest between activations.

    Returns the full tick-by-tick trajectory, starting with the initial
    state. All labels are validated up front: an unbindable label raises
    before any motion.
    """
    for label, _ in script.steps:
        binding.lookup(label)  # raises ServoError if unbound
    trajectory = [arm]
    for label, repeats in script.steps:
        for _ in range(repeats):
            arm = apply_command(arm, binding, label)
            guard = 0
            while not arm.settled:
                arm = tick(arm)
                trajectory.append(arm)
                guard += 1
                if guard > MAX_TICKS_PER_STEP:
                    raise BciArmError("script step failed to settle")
    return trajectory
