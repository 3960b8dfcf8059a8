/**
 * Wire protocol for the bci-arm control service.
 *
 * All frames are JSON text. The server broadcasts `state` messages with a
 * monotonically increasing `seq` and sends `error` replies referencing the
 * client's optional `seq`. The console never derives arm state locally;
 * everything rendered comes from these messages.
 */

export const MENTAL_COMMANDS = [
  "push",
  "pull",
  "lift",
  "drop",
  "move_right",
  "move_left",
] as const;

export const FACIAL_COMMANDS = [
  "raise_brows",
  "furrow_brows",
  "wink_left",
  "wink_right",
  "smile",
  "clench_teeth",
] as const;

export const ALL_COMMANDS = [...MENTAL_COMMANDS, ...FACIAL_COMMANDS] as const;

export type CommandName = (typeof ALL_COMMANDS)[number];

export const JOINT_NAMES = [
  "Base",
  "Shoulder",
  "Elbow",
  "WristRot",
  "WristTrans",
  "Gripper",
] as const;

export type JointName = (typeof JOINT_NAMES)[number];

export const CHANNELS = ["AF3", "AF4", "T7", "T8", "Pz"] as const;

export interface BandPower {
  alpha: number;
  beta: number;
}

export interface LastDecision {
  label: string | null;
  confidence: number | null;
  gate: string | null;
}

export interface StateMessage {
  type: "state";
  seq: number;
  tick: number;
  joints: number[];
  pose: { x: number; y: number; z: number };
  band_power: Record<string, BandPower>;
  last: LastDecision;
}

export interface ErrorMessage {
  type: "error";
  seq_ref: number;
  message: string;
}

export type ServerMessage = StateMessage | ErrorMessage;

export type ClientMessage =
  | { type: "command"; name: CommandName; strength: number; seq?: number }
  | { type: "set_threshold"; value: number; seq?: number }
  | { type: "set_limits"; joint: JointName; min: number; max: number; seq?: number }
  | { type: "run_script"; name: string; seq?: number }
  | { type: "set_mode"; value: "manual" | "synthetic" | "replay"; session?: string; seq?: number };

function isFiniteNumber(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

export function isStateMessage(doc: unknown): doc is StateMessage {
  if (typeof doc !== "object" || doc === null) return false;
  const d = doc as Record<string, unknown>;
  if (d.type !== "state") return false;
  if (!isFiniteNumber(d.seq) || !isFiniteNumber(d.tick)) return false;
  if (!Array.isArray(d.joints) || d.joints.length !== 6) return false;
  if (!d.joints.every(isFiniteNumber)) return false;
  const pose = d.pose as Record<string, unknown> | null;
  if (typeof pose !== "object" || pose === null) return false;
  if (!isFiniteNumber(pose.x) || !isFiniteNumber(pose.y) || !isFiniteNumber(pose.z)) {
    return false;
  }
  if (typeof d.band_power !== "object" || d.band_power === null) return false;
  if (typeof d.last !== "object" || d.last === null) return false;
  return true;
}

export function isErrorMessage(doc: unknown): doc is ErrorMessage {
  if (typeof doc !== "object" || doc === null) return false;
  const d = doc as Record<string, unknown>;
  return d.type === "error" && typeof d.message === "string";
}

/** Parse one server frame; null for anything malformed. */
export function parseServerMessage(raw: string): ServerMessage | null {
  let doc: unknown;
  try {
    doc = JSON.parse(raw);
  } catch {
    return null;
  }
  if (isStateMessage(doc)) return doc;
  if (isErrorMessage(doc)) return doc;
  return null;
}

export function commandMessage(name: CommandName, strength: number): ClientMessage {
  if (!(ALL_COMMANDS as readonly string[]).includes(name)) {
    throw new Error(`unknown command ${name}`);
  }
  if (!(strength >= 0 && strength <= 1)) {
    throw new Error(`strength ${strength} outside [0, 1]`);
  }
  return { type: "command", name, strength };
}

export function setThresholdMessage(value: number): ClientMessage {
  if (!(value >= 0 && value <= 1)) {
    throw new Error(`threshold ${value} outside [0, 1]`);
  }
  return { type: "set_threshold", value };
}

export function setLimitsMessage(joint: JointName, min: number, max: number): ClientMessage {
  if (!(JOINT_NAMES as readonly string[]).includes(joint)) {
    throw new Error(`unknown joint ${joint}`);
  }
  return { type: "set_limits", joint, min, max };
}

export function runScriptMessage(name: string): ClientMessage {
  return { type: "run_script", name };
}

export function setModeMessage(
  value: "manual" | "synthetic" | "replay",
  session?: string,
): ClientMessage {
  return session === undefined ? { type: "set_mode", value } : { type: "set_mode", value, session };
}

export function encode(msg: ClientMessage): string {
  return JSON.stringify(msg);
}
