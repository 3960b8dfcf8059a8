/**
 * Console state store: latest-seq-wins over the server's state broadcasts.
 *
 * The arm widgets always render the highest seq seen; stale or duplicate
 * messages are dropped. Gate decisions and errors land in a bounded event
 * feed, and seq discontinuities (reconnects, dropped frames) are surfaced
 * there too.
 */

import type { ErrorMessage, ServerMessage, StateMessage } from "./protocol.js";

export type ConnectionStatus = "disconnected" | "connecting" | "connected";

export interface FeedEntry {
  kind: "gate" | "error" | "gap" | "status";
  text: string;
  seq: number | null;
}

const FEED_LIMIT = 50;

export class ConsoleStore {
  status: ConnectionStatus = "disconnected";
  latest: StateMessage | null = null;
  feed: FeedEntry[] = [];
  thresholdSlider = 0.5;

  private lastGateSeq = -1;

  /** Returns true when the message changed the rendered state. */
  apply(msg: ServerMessage): boolean {
    if (msg.type === "error") {
      this.pushFeed({ kind: "error", text: msg.message, seq: msg.seq_ref >= 0 ? msg.seq_ref : null });
      return false;
    }
    return this.applyState(msg);
  }

  private applyState(msg: StateMessage): boolean {
    const prev = this.latest;
    if (prev !== null && msg.seq <= prev.seq) {
      return false; // stale
    }
    if (prev !== null && msg.seq > prev.seq + 1) {
      this.pushFeed({
        kind: "gap",
        text: `seq gap: ${prev.seq} -> ${msg.seq}`,
        seq: msg.seq,
      });
    }
    this.latest = msg;
    if (msg.last.gate !== null && msg.seq > this.lastGateSeq) {
      const prevGate = prev?.last ?? null;
      const changed =
        prevGate === null ||
        prevGate.gate !== msg.last.gate ||
        prevGate.label !== msg.last.label ||
        prevGate.confidence !== msg.last.confidence;
      if (changed) {
        const conf = msg.last.confidence === null ? "" : ` (${msg.last.confidence.toFixed(2)})`;
        this.pushFeed({
          kind: "gate",
          text: `${msg.last.label ?? "?"}: ${msg.last.gate}${conf}`,
          seq: msg.seq,
        });
        this.lastGateSeq = msg.seq;
      }
    }
    return true;
  }

  setStatus(status: ConnectionStatus): void {
    if (status !== this.status) {
      this.status = status;
      this.pushFeed({ kind: "status", text: status, seq: null });
    }
  }

  noteError(err: ErrorMessage): void {
    this.apply(err);
  }

  private pushFeed(entry: FeedEntry): void {
    this.feed.push(entry);
    if (this.feed.length > FEED_LIMIT) {
      this.feed.splice(0, this.feed.length - FEED_LIMIT);
    }
  }
}
