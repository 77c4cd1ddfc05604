// View model and canvas renderer.  The model is a pure function of the
// server message stream plus the clock values passed in: replaying the same
// messages with the same timestamps reproduces the same picture.  No typing
// logic lives here; the server decides everything.

import type {
  CornerShape,
  DwellPhase,
  ErrorMsg,
  LayoutMsg,
  SectorSpan,
  ServerMsg,
} from "./protocol.js";
import { fillRadius, lerpSpan, toCanvas } from "./geometry.js";

export const TWEEN_MS = 200;

export type ActiveDwell = {
  letter: string; // key letter, or a corner id
  phase: DwellPhase;
  fraction: number;
  word: string | null;
};

type SpanTween = { from: SectorSpan[]; startMs: number };

// -- view model ---------------------------------------------------------------

export class ViewModel {
  layout: LayoutMsg | null = null;
  buffer = "";
  dwell: ActiveDwell | null = null;
  lastError: ErrorMsg | null = null;
  private tweens = new Map<string, SpanTween>();

  apply(msg: ServerMsg, nowMs: number): void {
    switch (msg.type) {
      case "layout":
        this.beginLayout(msg, nowMs);
        break;
      case "dwell":
        this.dwell = {
          letter: msg.letter,
          phase: msg.phase,
          fraction: msg.fraction,
          word: msg.word,
        };
        break;
      case "commit":
        // the dwell that produced the commit is over
        this.dwell = null;
        break;
      case "buffer":
        this.buffer = msg.text;
        break;
      case "error":
        this.lastError = msg;
        break;
    }
  }

  // Spans to draw for a key right now: mid-tween they are interpolated
  // between the previous rendered shape and the latest layout.
  spansFor(letter: string, nowMs: number): SectorSpan[] {
    const key = this.layout?.keys.find((k) => k.letter === letter);
    if (!key) return [];
    const tween = this.tweens.get(letter);
    if (!tween) return key.sectors;
    const t = (nowMs - tween.startMs) / TWEEN_MS;
    if (t >= 1) {
      this.tweens.delete(letter);
      return key.sectors;
    }
    const eased = t <= 0 ? 0 : t;
    return key.sectors.map((to, i) => lerpSpan(tween.from[i], to, eased));
  }

  private beginLayout(msg: LayoutMsg, nowMs: number): void {
    // capture what is on screen at this instant, tweens included, so a
    // layout arriving mid-animation retargets from the interpolated shape
    const prev = new Map<string, SectorSpan[]>();
    if (this.layout) {
      for (const key of this.layout.keys) {
        prev.set(key.letter, this.spansFor(key.letter, nowMs));
      }
    }
    this.tweens.clear();
    for (const key of msg.keys) {
      const from = prev.get(key.letter);
      if (!from || from.length !== key.sectors.length) continue; // snap
      if (spansEqual(from, key.sectors)) continue;
      this.tweens.set(key.letter, { from, startMs: nowMs });
    }
    this.layout = msg;
  }
}

function spansEqual(a: SectorSpan[], b: SectorSpan[]): boolean {
  for (let i = 0; i < a.length; i++) {
    const p = a[i];
    const q = b[i];
    if (p.r_in !== q.r_in || p.r_out !== q.r_out) return false;
    if (p.a_start !== q.a_start || p.a_end !== q.a_end) return false;
  }
  return true;
}

// -- colors -------------------------------------------------------------------

const INK = "#212121";
const FAINT_INK = "#757575";
const KEY_FILL = "#ffffff";
const KEY_EDGE = "#9e9e9e";
const CORNER_FILL = "#ececec";
// light tint on the whole dwelt key; saturated fill that grows with the
// dwell fraction; orange for the first phase, green for the second
export const TINT = { first: "#ffe0b2", second: "#c8e6c9" } as const;
export const FILL = { first: "#ef6c00", second: "#43a047" } as const;

// -- canvas rendering ---------------------------------------------------------

export function render(
  view: ViewModel,
  ctx: CanvasRenderingContext2D,
  size: number,
  nowMs: number,
): void {
  ctx.clearRect(0, 0, size, size);
  ctx.fillStyle = "#fafafa";
  ctx.fillRect(0, 0, size, size);
  const layout = view.layout;
  if (!layout) return;

  const dwell = view.dwell;
  for (const key of layout.keys) {
    const spans = view.spansFor(key.letter, nowMs);
    const dwelt = dwell !== null && dwell.letter === key.letter;
    for (const span of spans) {
      tracePath(ctx, span, size);
      ctx.fillStyle = dwelt ? TINT[dwell.phase] : KEY_FILL;
      ctx.fill();
      ctx.strokeStyle = KEY_EDGE;
      ctx.lineWidth = 1;
      ctx.stroke();
      if (dwelt && dwell.fraction > 0) {
        tracePath(ctx, { ...span, r_out: fillRadius(span, dwell.fraction) }, size);
        ctx.fillStyle = FILL[dwell.phase];
        ctx.fill();
      }
    }
    drawKeyLabels(ctx, key.letter, key.absorbed, spans, size, dwelt ? dwell : null);
  }

  for (const corner of layout.corners) {
    drawCorner(ctx, corner, size, view, dwell);
  }
}

// Annular sector outline.  Keyboard angles are y-up; canvas angles are
// y-down, so every angle flips sign and the sweep directions flip with it.
function tracePath(ctx: CanvasRenderingContext2D, span: SectorSpan, size: number): void {
  const c = toCanvas(0, 0, size);
  const half = size / 2;
  const rOut = span.r_out * half;
  const rIn = span.r_in * half;
  ctx.beginPath();
  ctx.arc(c.x, c.y, rOut, -span.a_start, -span.a_end, true);
  if (rIn > 0) {
    ctx.arc(c.x, c.y, rIn, -span.a_end, -span.a_start, false);
  } else {
    ctx.lineTo(c.x, c.y);
  }
  ctx.closePath();
}

function drawKeyLabels(
  ctx: CanvasRenderingContext2D,
  letter: string,
  absorbed: string[],
  spans: SectorSpan[],
  size: number,
  dwell: ActiveDwell | null,
): void {
  if (spans.length === 0) return;
  const span = widestSpan(spans);
  const a = (span.a_start + span.a_end) / 2;
  const r = (span.r_in + span.r_out) / 2;
  const p = toCanvas(r * Math.cos(a), r * Math.sin(a), size);
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  ctx.fillStyle = INK;
  ctx.font = `${Math.round(size * 0.042)}px system-ui, sans-serif`;
  ctx.fillText(letter, p.x, p.y);
  if (absorbed.length > 0) {
    ctx.fillStyle = FAINT_INK;
    ctx.font = `${Math.round(size * 0.022)}px system-ui, sans-serif`;
    ctx.fillText(absorbed.join(" "), p.x, p.y + size * 0.032);
  }
  // the server's suggested completion, shown only inside the dwelt key
  if (dwell !== null && dwell.word !== null) {
    ctx.fillStyle = FILL[dwell.phase];
    ctx.font = `italic ${Math.round(size * 0.026)}px system-ui, sans-serif`;
    ctx.fillText(dwell.word, p.x, p.y - size * 0.036);
  }
}

function widestSpan(spans: SectorSpan[]): SectorSpan {
  let best = spans[0];
  let bestArea = 0;
  for (const s of spans) {
    const area = (s.a_end - s.a_start) * (s.r_out * s.r_out - s.r_in * s.r_in);
    if (area > bestArea) {
      best = s;
      bestArea = area;
    }
  }
  return best;
}

function drawCorner(
  ctx: CanvasRenderingContext2D,
  corner: CornerShape,
  size: number,
  view: ViewModel,
  dwell: ActiveDwell | null,
): void {
  const [x0, y0, x1, y1] = corner.rect;
  const tl = toCanvas(x0, y1, size); // y flips: top edge is the larger y
  const br = toCanvas(x1, y0, size);
  const w = br.x - tl.x;
  const h = br.y - tl.y;
  const dwelt = dwell !== null && dwell.letter === corner.id;

  ctx.fillStyle = dwelt ? TINT[dwell.phase] : CORNER_FILL;
  ctx.fillRect(tl.x, tl.y, w, h);
  if (dwelt && dwell.fraction > 0) {
    // rect keys fill bottom-up, mirroring the radial fill on sectors
    const fh = h * Math.min(1, Math.max(0, dwell.fraction));
    ctx.fillStyle = FILL[dwell.phase];
    ctx.fillRect(tl.x, tl.y + h - fh, w, fh);
  }
  ctx.strokeStyle = KEY_EDGE;
  ctx.lineWidth = 1;
  ctx.strokeRect(tl.x, tl.y, w, h);

  if (corner.id === "status") {
    drawBuffer(ctx, view.buffer, tl.x, tl.y, w, h, size);
    return;
  }
  ctx.fillStyle = corner.selectable ? INK : FAINT_INK;
  ctx.font = `${Math.round(size * 0.028)}px system-ui, sans-serif`;
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  ctx.fillText(corner.id, tl.x + w / 2, tl.y + h / 2);
}

// The transcribed text lives in the top-left corner region.  Long text keeps
// its tail: the freshest characters are the ones being typed.
function drawBuffer(
  ctx: CanvasRenderingContext2D,
  text: string,
  x: number,
  y: number,
  w: number,
  h: number,
  size: number,
): void {
  const pad = size * 0.012;
  ctx.font = `${Math.round(size * 0.026)}px ui-monospace, monospace`;
  ctx.textAlign = "left";
  ctx.textBaseline = "top";
  ctx.fillStyle = INK;
  let shown = text.length > 0 ? text : "|";
  while (shown.length > 1 && ctx.measureText(shown).width > w - 2 * pad) {
    shown = shown.slice(1);
  }
  ctx.fillText(shown, x + pad, y + pad, w - 2 * pad);
}
