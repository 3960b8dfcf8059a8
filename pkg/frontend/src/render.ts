/**
 * Schematic arm rendering: a side-view linkage in the reach/height plane,
 * a top-down inset for the base heading, and band-power bars.
 *
 * Geometry is computed from the server's joint angles and the configured
 * link lengths only for drawing; the numeric pose readout always comes
 * straight from the server message (the console does no kinematics of
 * record).
 */

import { CHANNELS, type BandPower, type StateMessage } from "./protocol.js";

export interface LinkLengths {
  l1: number;
  l2: number;
  l3: number;
  l4: number;
}

export const DEFAULT_LINKS: LinkLengths = { l1: 100, l2: 105, l3: 100, l4: 60 };

const SERVO_CENTER_DEG = 90;

export interface Point {
  r: number; // radial reach, mm
  z: number; // height, mm
}

const rad = (deg: number) => (deg * Math.PI) / 180;

/**
 * Side-view polyline: base, shoulder, elbow, wrist, gripper tip.
 * Joints are the six servo angles; 90 deg is the arm's neutral.
 */
export function sideViewPoints(joints: number[], links: LinkLengths = DEFAULT_LINKS): Point[] {
  const t2 = rad(joints[1] - SERVO_CENTER_DEG);
  const t3 = rad(joints[2] - SERVO_CENTER_DEG);
  const t4 = rad(joints[4] - SERVO_CENTER_DEG);
  const points: Point[] = [{ r: 0, z: 0 }];
  let r = 0;
  let z = links.l1;
  points.push({ r, z });
  r += links.l2 * Math.sin(t2);
  z += links.l2 * Math.cos(t2);
  points.push({ r, z });
  r += links.l3 * Math.sin(t2 + t3);
  z += links.l3 * Math.cos(t2 + t3);
  points.push({ r, z });
  r += links.l4 * Math.cos(t2 + t3 + t4);
  z -= links.l4 * Math.sin(t2 + t3 + t4);
  points.push({ r, z });
  return points;
}

/** Top-down heading of the arm plane, radians from +x. */
export function topDownHeading(joints: number[]): number {
  return rad(joints[0] - SERVO_CENTER_DEG);
}

/** Gripper opening in [0, 1]: servo 90 is closed, 180 fully open. */
export function gripperOpening(joints: number[]): number {
  return Math.min(1, Math.max(0, (joints[5] - SERVO_CENTER_DEG) / SERVO_CENTER_DEG));
}

/** Bar heights in [0, 1] per channel, log-scaled against a soft ceiling. */
export function bandPowerBars(
  bandPower: Record<string, BandPower>,
  ceiling = 100,
): { channel: string; alpha: number; beta: number }[] {
  const scale = (v: number) => Math.min(1, Math.log1p(Math.max(0, v)) / Math.log1p(ceiling));
  return CHANNELS.map((channel) => {
    const bp = bandPower[channel] ?? { alpha: 0, beta: 0 };
    return { channel, alpha: scale(bp.alpha), beta: scale(bp.beta) };
  });
}

// -- canvas drawing ------------------------------------------------------

const REACH_MM = 400; // drawing extent on each axis

export function drawArm(
  ctx: CanvasRenderingContext2D,
  state: StateMessage,
  links: LinkLengths = DEFAULT_LINKS,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);

  // side view fills the canvas; origin at bottom center
  const px = (r: number) => width / 2 + (r / REACH_MM) * (width / 2 - 10);
  const py = (z: number) => height - 14 - (z / REACH_MM) * (height - 28);

  ctx.strokeStyle = "#888";
  ctx.beginPath();
  ctx.moveTo(0, py(0));
  ctx.lineTo(width, py(0));
  ctx.stroke();

  const points = sideViewPoints(state.joints, links);
  ctx.strokeStyle = "#2b6cb0";
  ctx.lineWidth = 4;
  ctx.lineJoin = "round";
  ctx.beginPath();
  points.forEach((p, i) => {
    if (i === 0) ctx.moveTo(px(p.r), py(p.z));
    else ctx.lineTo(px(p.r), py(p.z));
  });
  ctx.stroke();
  ctx.lineWidth = 1;

  ctx.fillStyle = "#1a202c";
  for (const p of points) {
    ctx.beginPath();
    ctx.arc(px(p.r), py(p.z), 4, 0, 2 * Math.PI);
    ctx.fill();
  }

  // top-down inset: a compass needle for the base heading
  const inset = Math.min(width, height) / 4;
  const cx = width - inset / 2 - 6;
  const cy = inset / 2 + 6;
  ctx.strokeStyle = "#888";
  ctx.beginPath();
  ctx.arc(cx, cy, inset / 2 - 2, 0, 2 * Math.PI);
  ctx.stroke();
  const heading = topDownHeading(state.joints);
  ctx.strokeStyle = "#c05621";
  ctx.lineWidth = 3;
  ctx.beginPath();
  ctx.moveTo(cx, cy);
  ctx.lineTo(cx + Math.cos(heading) * (inset / 2 - 6), cy - Math.sin(heading) * (inset / 2 - 6));
  ctx.stroke();
  ctx.lineWidth = 1;
}

export function drawBandPower(
  ctx: CanvasRenderingContext2D,
  bandPower: Record<string, BandPower>,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  const bars = bandPowerBars(bandPower);
  const slot = width / bars.length;
  bars.forEach((bar, i) => {
    const x = i * slot;
    const w = slot / 2 - 6;
    ctx.fillStyle = "#2b6cb0";
    ctx.fillRect(x + 4, height - 14 - bar.alpha * (height - 20), w, bar.alpha * (height - 20));
    ctx.fillStyle = "#c05621";
    ctx.fillRect(x + 8 + w, height - 14 - bar.beta * (height - 20), w, bar.beta * (height - 20));
    ctx.fillStyle = "#333";
    ctx.font = "10px sans-serif";
    ctx.fillText(bar.channel, x + 4, height - 2);
  });
}
