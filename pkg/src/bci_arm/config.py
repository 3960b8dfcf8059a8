"""Configuration file: versioned JSON with sections, validated on load.

Every tunable named elsewhere in the package has a key and a default
here: band edges, artifact screen, link lengths, per-joint limits/steps/
slew, safety gate, named scripts, service port. Unknown keys are
collected as warnings, not errors.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .arm import DEFAULT_MAX_STEP_DEG, DEFAULT_STEP_DEG, JOINT_NAMES, ServoJoint
from .arm.state import ArmState
from .errors import ConfigError
from .kinematics import DEFAULT_LINKS_MM, DhTable
from .pipeline import BUNDLED_SCRIPTS, SafetyConfig, Script
from .signal import ALPHA_BAND, BETA_BAND, BandDef
from .signal.preprocess import DEFAULT_CLIP_FRACTION, DEFAULT_CLIP_UV

CONFIG_VERSION = 1

DEFAULTS: dict[str, Any] = {
    "version": CONFIG_VERSION,
    "bands": {
        "alpha": [ALPHA_BAND.lo_hz, ALPHA_BAND.hi_hz],
        "beta": [BETA_BAND.lo_hz, BETA_BAND.hi_hz],
    },
    "artifact": {"clip_uv": DEFAULT_CLIP_UV, "max_fraction": DEFAULT_CLIP_FRACTION},
    "kinematics": dict(DEFAULT_LINKS_MM),
    "arm": {
        name: {
            "min_deg": 0.0,
            "max_deg": 180.0,
            "step_deg": DEFAULT_STEP_DEG,
            "max_step_deg": DEFAULT_MAX_STEP_DEG,
        }
        for name in JOINT_NAMES
    },
    "safety": {
        "confidence_threshold": 0.5,
        "cooldown_epochs": 1,
        "gate_mode": "confidence",
        "band_power_threshold": 0.0,
    },
    "scripts": {
        name: [[label.name, reps] for label, reps in script.steps]
        for name, script in BUNDLED_SCRIPTS.items()
    },
    "service": {"port": 8765},
}


@dataclass
class Config:
    alpha_band: BandDef
    beta_band: BandDef
    safety: SafetyConfig
    table: DhTable
    arm_joints: dict[str, dict[str, float]]
    scripts: dict[str, Script]
    port: int
    warnings: list[str] = field(default_factory=list)

    def make_arm(self) -> ArmState:
        overrides = {
            name: {
                "min_deg": spec["min_deg"],
                "max_deg": spec["max_deg"],
                "step_deg": spec["step_deg"],
                "max_step_deg": spec["max_step_deg"],
            }
            for name, spec in self.arm_joints.items()
        }
        return ArmState.home(self.table, **overrides)


# Sections whose keys are user-chosen names, not a fixed schema.
_OPEN_SECTIONS = ("scripts.",)


def _merge(base: dict, override: dict, path: str, warnings: list[str]) -> dict:
    out = dict(base)
    for key, value in override.items():
        if key not in base:
            if path in _OPEN_SECTIONS:
                out[key] = value
            else:
                warnings.append(f"unknown config key: {path}{key}")
            continue
        if isinstance(base[key], dict) and isinstance(value, dict):
            out[key] = _merge(base[key], value, f"{path}{key}.", warnings)
        else:
            out[key] = value
    return out


def _require_range(value: float, lo: float, hi: float, what: str) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{what} must be a number") from None
    if not lo <= v <= hi:
        raise ConfigError(f"{what} = {v} outside [{lo}, {hi}]")
    return v


def load_config(path: Optional[str | Path] = None) -> Config:
    """Parse and validate a config file; None loads pure defaults."""
    warnings: list[str] = []
    doc = DEFAULTS
    if path is not None:
        p = Path(path)
        if not p.exists():
            raise ConfigError(f"config file not found: {p}")
        try:
            user = json.loads(p.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from None
        if not isinstance(user, dict):
            raise ConfigError("config root must be an object")
        if user.get("version", CONFIG_VERSION) != CONFIG_VERSION:
            raise ConfigError(f"unsupported config version {user.get('version')!r}")
        doc = _merge(DEFAULTS, user, "", warnings)

    alpha = doc["bands"]["alpha"]
    beta = doc["bands"]["beta"]
    try:
        alpha_band = BandDef("Alpha", float(alpha[0]), float(alpha[1]))
        beta_band = BandDef("Beta", float(beta[0]), float(beta[1]))
    except (ValueError, TypeError, IndexError) as exc:
        raise ConfigError(f"bad band edges: {exc}") from None
    if alpha_band.hi_hz > 64.0 or beta_band.hi_hz > 64.0:
        raise ConfigError("band edges must stay below the 64 Hz Nyquist")

    safety = SafetyConfig(
        confidence_threshold=_require_range(
            doc["safety"]["confidence_threshold"], 0.0, 1.0, "safety.confidence_threshold"
        ),
        cooldown_epochs=int(
            _require_range(doc["safety"]["cooldown_epochs"], 0, 1e6, "safety.cooldown_epochs")
        ),
        clip_uv=_require_range(doc["artifact"]["clip_uv"], 1e-9, 1e9, "artifact.clip_uv"),
        clip_fraction=_require_range(
            doc["artifact"]["max_fraction"], 0.0, 1.0, "artifact.max_fraction"
        ),
        gate_mode=str(doc["safety"]["gate_mode"]),
        band_power_threshold=_require_range(
            doc["safety"]["band_power_threshold"], 0.0, 1e12, "safety.band_power_threshold"
        ),
        alpha_band=alpha_band,
        beta_band=beta_band,
    )

    k = doc["kinematics"]
    table = DhTable.from_links(
        _require_range(k["L1"], 1e-9, 1e6, "kinematics.L1"),
        _require_range(k["L2"], 1e-9, 1e6, "kinematics.L2"),
        _require_range(k["L3"], 1e-9, 1e6, "kinematics.L3"),
        _require_range(k["L4"], 1e-9, 1e6, "kinematics.L4"),
    )

    arm_joints = {}
    for name in JOINT_NAMES:
        spec = doc["arm"][name]
        arm_joints[name] = {
            "min_deg": _require_range(spec["min_deg"], 0.0, 180.0, f"arm.{name}.min_deg"),
            "max_deg": _require_range(spec["max_deg"], 0.0, 180.0, f"arm.{name}.max_deg"),
            "step_deg": _require_range(spec["step_deg"], 1e-9, 180.0, f"arm.{name}.step_deg"),
            "max_step_deg": _require_range(
                spec["max_step_deg"], 1e-9, 180.0, f"arm.{name}.max_step_deg"
            ),
        }
        if arm_joints[name]["min_deg"] >= arm_joints[name]["max_deg"]:
            raise ConfigError(f"arm.{name}: min_deg must be < max_deg")

    scripts = {}
    for name, steps in doc["scripts"].items():
        try:
            scripts[name] = Script.from_names(name, [(s[0], int(s[1])) for s in steps])
        except (KeyError, IndexError, TypeError) as exc:
            raise ConfigError(f"bad script {name!r}: {exc}") from None

    port = int(_require_range(doc["service"]["port"], 1, 65535, "service.port"))

    return Config(
        alpha_band=alpha_band,
        beta_band=beta_band,
        safety=safety,
        table=table,
        arm_joints=arm_joints,
        scripts=scripts,
        port=port,
        warnings=warnings,
    )
