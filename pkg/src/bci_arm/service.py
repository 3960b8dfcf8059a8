"""Live control service: JSON text frames over WebSocket.

One authoritative `ServiceCore` advances the arm; per-connection tasks
only move messages. Every state broadcast carries a global `seq`, and all
clients receive byte-identical payloads for the same seq.

Wire protocol (all frames JSON objects):
  server -> client
    {"type":"state","seq":n,"tick":n,"joints":[6 deg],
     "pose":{"x":mm,"y":mm,"z":mm},
     "band_power":{ch:{"alpha":v,"beta":v}},
     "last":{"label":str|null,"confidence":num|null,"gate":str|null}}
    {"type":"error","seq_ref":n,"message":str}
  client -> server (optional "seq" integer echoes back in error replies)
    {"type":"command","name":label,"source":"mental"|"facial","strength":0..1}
    {"type":"set_threshold","value":0..1}
    {"type":"set_limits","joint":name,"min":deg,"max":deg}
    {"type":"run_script","name":str}
    {"type":"set_mode","value":"manual"|"synthetic"|"replay","session":path?}

In real-time mode the arm ticks every 20 ms of wall clock (drift
corrected); with realtime=False ticks run only while a command or script
settles, which makes message/broadcast sequences fully deterministic.
"""
from __future__ import annotations

import asyncio
import dataclasses
import json
import logging
from typing import Iterator, Optional

from .arm import ArmState, apply_command, default_bindings, tick
from .arm.servo import JOINT_NAMES
from .config import Config, load_config
from .errors import BciArmError, ServoError
from .features import NearestReferenceClassifier, extract_features
from .features.classify import classify
from .labels import LABELS, parse_label
from .pipeline import (
    GATE_BELOW_THRESHOLD,
    GATE_COOLDOWN,
    GATE_PASSED,
    GATE_REJECTED,
    TICKS_PER_EPOCH,
    preprocess_epoch,
)
from .pipeline.script import MAX_TICKS_PER_STEP
from .signal import CHANNELS, EPOCH_SECONDS, EegEpoch, gen_synthetic, load_session, make_epochs

log = logging.getLogger(__name__)

MODES = ("manual", "synthetic", "replay")


class ServiceCore:
    """Synchronous service state machine; the transport drives it."""

    def __init__(
        self,
        config: Optional[Config] = None,
        model: Optional[NearestReferenceClassifier] = None,
        synth_seed: int = 0,
    ) -> None:
        self.config = config or load_config(None)
        self.model = model
        self.binding = default_bindings()
        self.arm: ArmState = self.config.make_arm()
        self.threshold = self.config.safety.confidence_threshold
        self.cooldown_ticks = self.config.safety.cooldown_epochs * TICKS_PER_EPOCH
        self.cooldown_left = 0
        self.mode = "manual"
        self.seq = 0
        self.synth_seed = synth_seed
        self._epoch_count = 0
        self._epoch_source: Optional[Iterator[EegEpoch]] = None
        self._script_queue: list[str] = []
        self._last: dict = {"label": None, "confidence": None, "gate": None}
        self._band_power = {ch: {"alpha": 0.0, "beta": 0.0} for ch in CHANNELS}

    # -- message handling ------------------------------------------------

    def handle(self, msg: dict) -> tuple[list[dict], bool]:
        """Apply one client message.

        Returns (replies to the sender, motion_pending) where
        motion_pending signals that ticks should run until the arm
        settles (used by the deterministic no-realtime driver).
        """
        seq_ref = msg.get("seq", -1)

        def err(message: str) -> tuple[list[dict], bool]:
            return [{"type": "error", "seq_ref": seq_ref, "message": message}], False

        mtype = msg.get("type")
        if mtype == "command":
            try:
                label = parse_label(str(msg.get("name")))
            except KeyError as exc:
                return err(str(exc))
            try:
                strength = float(msg.get("strength", 1.0))
            except (TypeError, ValueError):
                return err("strength must be a number in [0, 1]")
            if not 0.0 <= strength <= 1.0:
                return err("strength must be in [0, 1]")
            if self.mode != "manual":
                return err(f"commands are decoder-driven in {self.mode} mode")
            return [], self._gate_command(label.name, strength)
        if mtype == "set_threshold":
            try:
                value = float(msg.get("value"))
            except (TypeError, ValueError):
                return err("threshold must be a number")
            if not 0.0 <= value <= 1.0:
                return err("threshold must be in [0, 1]")
            self.threshold = value
            return [], False
        if mtype == "set_limits":
            joint_name = msg.get("joint")
            if joint_name not in JOINT_NAMES:
                return err(f"unknown joint {joint_name!r}")
            try:
                lo, hi = float(msg.get("min")), float(msg.get("max"))
            except (TypeError, ValueError):
                return err("min/max must be numbers")
            joint = self.arm.joint(joint_name)
            try:
                new = dataclasses.replace(joint, min_deg=lo, max_deg=hi)
            except ServoError as exc:
                return err(str(exc))
            self.arm = self.arm._replace_joint(joint_name, new)
            return [], False
        if mtype == "run_script":
            name = msg.get("name")
            script = self.config.scripts.get(name)
            if script is None:
                return err(f"unknown script {name!r}")
            for label, reps in script.steps:
                self._script_queue.extend([label.name] * reps)
            return [], True
        if mtype == "set_mode":
            value = msg.get("value")
            if value not in MODES:
                return err(f"unknown mode {value!r}")
            if value in ("synthetic", "replay") and self.model is None:
                return err(f"{value} mode needs a loaded model (serve --model)")
            if value == "replay":
                try:
                    epochs = make_epochs(load_session(str(msg.get("session"))))
                except BciArmError as exc:
                    return err(str(exc))
                self._epoch_source = iter(epochs)
            elif value == "synthetic":
                self._epoch_source = self._synthetic_epochs()
            else:
                self._epoch_source = None
            self.mode = value
            self._epoch_count = 0
            return [], False
        return err(f"unknown message type {mtype!r}")

    def _gate_command(self, name: str, strength: float) -> bool:
        """The same gate as the offline pipeline: threshold then cooldown."""
        if self.cooldown_left > 0:
            gate = GATE_COOLDOWN
        elif strength < self.threshold:
            gate = GATE_BELOW_THRESHOLD
        else:
            gate = GATE_PASSED
        self._last = {"label": name, "confidence": strength, "gate": gate}
        if gate == GATE_PASSED:
            self.arm = apply_command(self.arm, self.binding, parse_label(name), strength)
            self.cooldown_left = self.cooldown_ticks
            return True
        return False

    # -- time ------------------------------------------------------------

    def step_tick(self) -> None:
        """One 20 ms period: scripts feed, decoders decode, servos slew."""
        if self._script_queue and self.arm.settled:
            name = self._script_queue.pop(0)
            self.arm = apply_command(self.arm, self.binding, parse_label(name))
            self._last = {"label": name, "confidence": 1.0, "gate": GATE_PASSED}
        if (
            self._epoch_source is not None
            and self.arm.settled
            and not self._script_queue
            and self.arm.tick_count % TICKS_PER_EPOCH == 0
        ):
            self._decode_next_epoch()
        self.arm = tick(self.arm)
        self.cooldown_left = max(0, self.cooldown_left - 1)

    def run_until_settled(self) -> int:
        """Tick until no motion or queued script work remains."""
        n = 0
        while not (self.arm.settled and not self._script_queue):
            self.step_tick()
            n += 1
            if n > MAX_TICKS_PER_STEP:
                raise BciArmError("service failed to settle")
        return n

    def _decode_next_epoch(self) -> None:
        try:
            epoch = next(self._epoch_source)
        except StopIteration:
            self.mode = "manual"
            self._epoch_source = None
            return
        limited, rejected, power = preprocess_epoch(epoch, self.config.safety)
        self._band_power = {
            ch: {"alpha": float(power[i, 0]), "beta": float(power[i, 1])}
            for i, ch in enumerate(CHANNELS)
        }
        if rejected:
            self._last = {"label": None, "confidence": None, "gate": GATE_REJECTED}
            return
        label, confidence = classify(self.model, extract_features(limited))
        self._gate_command(label.name, confidence)

    def _synthetic_epochs(self) -> Iterator[EegEpoch]:
        i = 0
        while True:
            label = LABELS[i % len(LABELS)]
            samples = gen_synthetic(label, "quiet", EPOCH_SECONDS, self.synth_seed + i)
            yield make_epochs(samples)[0]
            i += 1

    # -- broadcasting ----------------------------------------------------

    def state_payload(self) -> str:
        self.seq += 1
        pose = self.arm.pose
        doc = {
            "type": "state",
            "seq": self.seq,
            "tick": self.arm.tick_count,
            "joints": [j.angle for j in self.arm.joints],
            "pose": {
                "x": float(pose.position[0]),
                "y": float(pose.position[1]),
                "z": float(pose.position[2]),
            },
            "band_power": self._band_power,
            "last": self._last,
        }
        return json.dumps(doc, sort_keys=True)


async def serve(
    config: Optional[Config] = None,
    model: Optional[NearestReferenceClassifier] = None,
    host: str = "127.0.0.1",
    port: Optional[int] = None,
    realtime: bool = True,
    ready: Optional[asyncio.Event] = None,
) -> None:
    """Run the WebSocket service until cancelled."""
    import websockets

    core = ServiceCore(config=config, model=model)
    port = port if port is not None else core.config.port
    clients: set = set()
    lock = asyncio.Lock()  # serializes message handling and tick advance

    async def broadcast(payload: str) -> None:
        for ws in list(clients):
            try:
                await ws.send(payload)
            except Exception:
                clients.discard(ws)

    async def handler(ws) -> None:
        clients.add(ws)
        try:
            await ws.send(core.state_payload())
            async for raw in ws:
                async with lock:
                    try:
                        msg = json.loads(raw)
                        if not isinstance(msg, dict):
                            raise ValueError("frame must be a JSON object")
                    except ValueError as exc:
                        await ws.send(
                            json.dumps(
                                {"type": "error", "seq_ref": -1, "message": f"bad frame: {exc}"},
                                sort_keys=True,
                            )
                        )
                        continue
                    replies, motion = core.handle(msg)
                    for reply in replies:
                        await ws.send(json.dumps(reply, sort_keys=True))
                    if realtime:
                        if not replies:
                            await broadcast(core.state_payload())
                    else:
                        # Deterministic mode: play motion out synchronously,
                        # broadcasting every tick.
                        await broadcast(core.state_payload())
                        while motion and not (core.arm.settled and not core._script_queue):
                            core.step_tick()
                            await broadcast(core.state_payload())
        finally:
            clients.discard(ws)

    async def tick_loop() -> None:
        period = 0.02
        loop = asyncio.get_running_loop()
        next_t = loop.time() + period
        while True:
            await asyncio.sleep(max(0.0, next_t - loop.time()))
            next_t += period
            async with lock:
                core.step_tick()
                await broadcast(core.state_payload())

    async with websockets.serve(handler, host, port):
        log.info("bci-arm service on ws://%s:%d (realtime=%s)", host, port, realtime)
        if ready is not None:
            ready.set()
        if realtime:
            await tick_loop()
        else:
            await asyncio.Future()
