/**
 * WebSocket client with exponential-backoff reconnect.
 *
 * The socket constructor is injectable so tests can run against the `ws`
 * package under node while the browser build uses the native WebSocket.
 */

import { encode, parseServerMessage, type ClientMessage, type ServerMessage } from "./protocol.js";
import type { ConnectionStatus } from "./state.js";

export interface SocketLike {
  send(data: string): void;
  close(): void;
  onopen: ((ev?: unknown) => void) | null;
  onclose: ((ev?: unknown) => void) | null;
  onerror: ((ev?: unknown) => void) | null;
  onmessage: ((ev: { data: unknown }) => void) | null;
}

export type SocketFactory = (url: string) => SocketLike;

export interface ClientHandlers {
  onMessage: (msg: ServerMessage) => void;
  onStatus: (status: ConnectionStatus) => void;
}

const BACKOFF_BASE_MS = 500;
const BACKOFF_MAX_MS = 15000;

export class ConsoleClient {
  private socket: SocketLike | null = null;
  private attempts = 0;
  private closed = false;
  private retryTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly url: string,
    private readonly handlers: ClientHandlers,
    private readonly makeSocket: SocketFactory,
  ) {}

  connect(): void {
    this.closed = false;
    this.open();
  }

  close(): void {
    this.closed = true;
    if (this.retryTimer !== null) {
      clearTimeout(this.retryTimer);
      this.retryTimer = null;
    }
    this.socket?.close();
    this.socket = null;
    this.handlers.onStatus("disconnected");
  }

  send(msg: ClientMessage): boolean {
    if (this.socket === null) return false;
    try {
      this.socket.send(encode(msg));
      return true;
    } catch {
      return false;
    }
  }

  private open(): void {
    this.handlers.onStatus("connecting");
    const socket = this.makeSocket(this.url);
    this.socket = socket;
    socket.onopen = () => {
      this.attempts = 0;
      this.handlers.onStatus("connected");
    };
    socket.onmessage = (ev) => {
      const msg = parseServerMessage(String(ev.data));
      if (msg !== null) {
        this.handlers.onMessage(msg);
      }
    };
    socket.onerror = () => {
      // onclose follows; nothing to do beyond letting the retry loop run
    };
    socket.onclose = () => {
      if (this.socket === socket) {
        this.socket = null;
      }
      if (!this.closed) {
        this.scheduleRetry();
      }
    };
  }

  private scheduleRetry(): void {
    this.handlers.onStatus("disconnected");
    const delay = Math.min(BACKOFF_BASE_MS * 2 ** this.attempts, BACKOFF_MAX_MS);
    this.attempts += 1;
    this.retryTimer = setTimeout(() => {
      this.retryTimer = null;
      if (!this.closed) this.open();
    }, delay);
  }
}
