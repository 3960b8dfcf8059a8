import { describe, expect, it } from "vitest";

import {
  ALL_COMMANDS,
  FACIAL_COMMANDS,
  MENTAL_COMMANDS,
  commandMessage,
  encode,
  parseServerMessage,
  runScriptMessage,
  setLimitsMessage,
  setThresholdMessage,
} from "../src/protocol.js";

const STATE_FRAME = JSON.stringify({
  type: "state",
  seq: 3,
  tick: 40,
  joints: [90, 90, 90, 90, 90, 90],
  pose: { x: 60, y: 0, z: 305 },
  band_power: { AF3: { alpha: 1.5, beta: 0.5 } },
  last: { label: null, confidence: null, gate: null },
});

describe("command palette", () => {
  it("has 12 commands split 6/6 across the two groups", () => {
    expect(MENTAL_COMMANDS).toHaveLength(6);
    expect(FACIAL_COMMANDS).toHaveLength(6);
    expect(new Set(ALL_COMMANDS).size).toBe(12);
  });

  it("builds a well-formed frame for every command", () => {
    for (const name of ALL_COMMANDS) {
      const frame = JSON.parse(encode(commandMessage(name, 0.8)));
      expect(frame).toEqual({ type: "command", name, strength: 0.8 });
    }
  });

  it("rejects out-of-range strength", () => {
    expect(() => commandMessage("push", 1.5)).toThrow(/strength/);
    expect(() => commandMessage("push", -0.1)).toThrow(/strength/);
    expect(() => commandMessage("push", NaN)).toThrow(/strength/);
  });
});

describe("control messages", () => {
  it("threshold frame", () => {
    expect(setThresholdMessage(0.9)).toEqual({ type: "set_threshold", value: 0.9 });
    expect(() => setThresholdMessage(2)).toThrow(/threshold/);
  });

  it("limits frame", () => {
    expect(setLimitsMessage("Base", 30, 150)).toEqual({
      type: "set_limits",
      joint: "Base",
      min: 30,
      max: 150,
    });
  });

  it("script frame", () => {
    expect(runScriptMessage("pick_and_place")).toEqual({
      type: "run_script",
      name: "pick_and_place",
    });
  });
});

describe("server frame parsing", () => {
  it("accepts a state broadcast", () => {
    const msg = parseServerMessage(STATE_FRAME);
    expect(msg?.type).toBe("state");
    if (msg?.type === "state") {
      expect(msg.joints).toHaveLength(6);
      expect(msg.pose.z).toBe(305);
    }
  });

  it("accepts an error reply", () => {
    const msg = parseServerMessage(JSON.stringify({ type: "error", seq_ref: 5, message: "no" }));
    expect(msg).toEqual({ type: "error", seq_ref: 5, message: "no" });
  });

  it("rejects malformed frames", () => {
    expect(parseServerMessage("not json")).toBeNull();
    expect(parseServerMessage("42")).toBeNull();
    expect(parseServerMessage(JSON.stringify({ type: "state", seq: 1 }))).toBeNull();
    expect(
      parseServerMessage(STATE_FRAME.replace('"joints":[90,90,90,90,90,90]', '"joints":[90]')),
    ).toBeNull();
  });
});
