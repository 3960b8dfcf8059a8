/**
 * Browser entry point: wires the command palette, threshold slider, limit
 * editors, event feed, and the schematic canvases to the live service.
 */

import { ConsoleClient } from "./client.js";
import {
  ALL_COMMANDS,
  FACIAL_COMMANDS,
  JOINT_NAMES,
  MENTAL_COMMANDS,
  commandMessage,
  runScriptMessage,
  setLimitsMessage,
  setThresholdMessage,
  type CommandName,
  type JointName,
} from "./protocol.js";
import { drawArm, drawBandPower } from "./render.js";
import { ConsoleStore } from "./state.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing element #${id}`);
  return node as T;
}

function setup(): void {
  const store = new ConsoleStore();
  const banner = el<HTMLDivElement>("banner");
  const feedList = el<HTMLUListElement>("feed");
  const armCanvas = el<HTMLCanvasElement>("arm-canvas");
  const bandCanvas = el<HTMLCanvasElement>("band-canvas");
  const poseOut = el<HTMLSpanElement>("pose");
  const jointsOut = el<HTMLSpanElement>("joints");
  const slider = el<HTMLInputElement>("threshold");
  const sliderOut = el<HTMLSpanElement>("threshold-value");
  const strength = el<HTMLInputElement>("strength");
  const strengthOut = el<HTMLSpanElement>("strength-value");

  const url = `ws://${location.hostname || "127.0.0.1"}:8765`;
  const client = new ConsoleClient(
    url,
    {
      onMessage: (msg) => {
        store.apply(msg);
        render();
      },
      onStatus: (status) => {
        store.setStatus(status);
        render();
      },
    },
    (u) => new WebSocket(u),
  );

  function render(): void {
    banner.textContent = store.status === "connected" ? "" : `service ${store.status}, retrying`;
    banner.style.display = store.status === "connected" ? "none" : "block";

    feedList.replaceChildren(
      ...store.feed
        .slice()
        .reverse()
        .map((entry) => {
          const li = document.createElement("li");
          li.className = `feed-${entry.kind}`;
          li.textContent = entry.seq === null ? entry.text : `#${entry.seq} ${entry.text}`;
          return li;
        }),
    );

    const state = store.latest;
    if (state !== null) {
      // server-authoritative readouts: no client-side kinematics
      poseOut.textContent = `x ${state.pose.x.toFixed(1)}  y ${state.pose.y.toFixed(1)}  z ${state.pose.z.toFixed(1)} mm`;
      jointsOut.textContent = state.joints.map((j) => j.toFixed(0)).join(" / ");
      const arm = armCanvas.getContext("2d");
      if (arm !== null) drawArm(arm, state);
      const bands = bandCanvas.getContext("2d");
      if (bands !== null) drawBandPower(bands, state.band_power);
    }
  }

  function palette(containerId: string, names: readonly CommandName[]): void {
    const container = el<HTMLDivElement>(containerId);
    for (const name of names) {
      const button = document.createElement("button");
      button.textContent = name.replace("_", " ");
      button.onclick = () => {
        client.send(commandMessage(name, Number(strength.value)));
      };
      container.appendChild(button);
    }
  }
  palette("mental-commands", MENTAL_COMMANDS);
  palette("facial-commands", FACIAL_COMMANDS);

  slider.oninput = () => {
    // optimistic UI for the slider position only
    store.thresholdSlider = Number(slider.value);
    sliderOut.textContent = slider.value;
    client.send(setThresholdMessage(Number(slider.value)));
  };
  strength.oninput = () => {
    strengthOut.textContent = strength.value;
  };

  const limitsBody = el<HTMLTableSectionElement>("limits");
  for (const joint of JOINT_NAMES) {
    const row = document.createElement("tr");
    const name = document.createElement("td");
    name.textContent = joint;
    const minCell = document.createElement("td");
    const maxCell = document.createElement("td");
    const minInput = document.createElement("input");
    const maxInput = document.createElement("input");
    for (const input of [minInput, maxInput]) {
      input.type = "number";
      input.min = "0";
      input.max = "180";
    }
    minInput.value = "0";
    maxInput.value = "180";
    const push = () => {
      client.send(setLimitsMessage(joint as JointName, Number(minInput.value), Number(maxInput.value)));
    };
    minInput.onchange = push;
    maxInput.onchange = push;
    minCell.appendChild(minInput);
    maxCell.appendChild(maxInput);
    row.append(name, minCell, maxCell);
    limitsBody.appendChild(row);
  }

  el<HTMLButtonElement>("pick-and-place").onclick = () => {
    client.send(runScriptMessage("pick_and_place"));
  };

  client.connect();
  render();
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", setup);
}
