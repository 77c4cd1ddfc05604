// Websocket wrapper.  Frames are newline-terminated JSON documents; parsed
// messages pile up in a queue that the render loop drains once per frame,
// so the picture never updates mid-draw.

import { parseServerMessage, serializeClientMessage } from "./protocol.js";
import type { ClientMsg, ServerMsg } from "./protocol.js";

// The sliver of the browser WebSocket we touch; tests inject a fake.  The
// handler params are any so the browser type and plain fakes both fit.
export interface SocketLike {
  readonly readyState: number;
  send(data: string): void;
  close(): void;
  onopen: ((ev: any) => void) | null;
  onmessage: ((ev: any) => void) | null;
  onclose: ((ev: any) => void) | null;
  onerror: ((ev: any) => void) | null;
}

const OPEN = 1; // WebSocket.OPEN

export type ConnectionState = "connecting" | "open" | "closed";

export class SessionClient {
  private queue: ServerMsg[] = [];
  private state: ConnectionState = "connecting";
  droppedFrames = 0;
  onStateChange: ((state: ConnectionState) => void) | null = null;

  constructor(private socket: SocketLike) {
    socket.onopen = () => this.setState("open");
    socket.onclose = () => this.setState("closed");
    socket.onerror = () => this.setState("closed");
    socket.onmessage = (ev) => this.receive(ev.data);
  }

  get connectionState(): ConnectionState {
    return this.state;
  }

  // All messages received since the last drain, oldest first.
  drain(): ServerMsg[] {
    if (this.queue.length === 0) return [];
    const out = this.queue;
    this.queue = [];
    return out;
  }

  send(msg: ClientMsg): boolean {
    if (this.socket.readyState !== OPEN) return false;
    this.socket.send(serializeClientMessage(msg));
    return true;
  }

  close(): void {
    this.socket.close();
  }

  private receive(data: unknown): void {
    if (typeof data !== "string") {
      this.droppedFrames += 1;
      return;
    }
    // a frame normally carries one document, but tolerate several
    for (const line of data.split("\n")) {
      if (line.trim() === "") continue;
      const msg = parseServerMessage(line);
      if (msg === null) {
        this.droppedFrames += 1;
      } else {
        this.queue.push(msg);
      }
    }
  }

  private setState(state: ConnectionState): void {
    if (this.state === state) return;
    this.state = state;
    this.onStateChange?.(state);
  }
}
