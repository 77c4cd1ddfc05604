// Pointer-as-gaze feed.  The mouse stands in for an eye tracker: the latest
// position is sampled on a fixed 60 Hz clock and shipped as pointer
// messages, whatever the mousemove event rate happens to be.  Off-canvas
// positions are held back entirely.

import type { PointerMsg } from "./protocol.js";
import { insideKeyboard } from "./geometry.js";
import type { Point } from "./geometry.js";

export const PUMP_HZ = 60;

export class PointerFeed {
  private pos: Point | null = null;
  private lastT = -Infinity;
  private timer: ReturnType<typeof setInterval> | null = null;
  sent = 0;

  constructor(
    private send: (msg: PointerMsg) => void,
    private now: () => number = () => performance.now(),
  ) {}

  // Latest pointer position in keyboard coords; outside [-1, 1]^2 counts
  // as off-canvas and stops the stream.
  move(x: number, y: number): void {
    const p = { x, y };
    this.pos = insideKeyboard(p) ? p : null;
  }

  leave(): void {
    this.pos = null;
  }

  // One pump beat: ship the held position, if any.  Timestamps must grow
  // strictly, so a beat that would repeat the clock is skipped.
  tick(): void {
    if (this.pos === null) return;
    const t = this.now();
    if (t <= this.lastT) return;
    this.lastT = t;
    this.sent += 1;
    this.send({ type: "pointer", t_ms: t, x: this.pos.x, y: this.pos.y });
  }

  start(): void {
    if (this.timer !== null) return;
    this.timer = setInterval(() => this.tick(), 1000 / PUMP_HZ);
  }

  stop(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }
}
