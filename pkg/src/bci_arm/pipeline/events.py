"""Event log: one JSON object per line under a versioned header."""
from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path
from typing import Sequence

from ..errors import SessionFormatError
from .run import PipelineEvent

EVENTS_HEADER = "# bci-arm events v1"


def record_events(events: Sequence[PipelineEvent], path: str | Path) -> None:
    lines = [EVENTS_HEADER]
    for e in events:
        lines.append(json.dumps(asdict(e), sort_keys=True))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_events(path: str | Path) -> list[PipelineEvent]:
    p = Path(path)
    if not p.exists():
        raise SessionFormatError(f"event log not found: {p}")
    lines = p.read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != EVENTS_HEADER:
        raise SessionFormatError(f"missing event log header in {p}")
    events = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError:
            raise SessionFormatError(f"bad event JSON at line {lineno}") from None
        for key in ("alpha_power", "beta_power", "features"):
            if doc.get(key) is not None:
                doc[key] = tuple(doc[key])
        events.append(PipelineEvent(**doc))
    return events
