// Pure geometry for rendering the circular keyboard.  Keyboard coordinates
// are the server's: the layout circle has radius 1 around the origin, x
// grows rightward, y grows upward.  Canvas pixels are y-down, so every
// conversion flips the vertical axis.

import type { SectorSpan } from "./protocol.js";

export const TWO_PI = Math.PI * 2;

export type Point = { x: number; y: number };

// -- coordinate mapping ------------------------------------------------------

// Canvas pixel -> keyboard coords for a square canvas of side `size`.
export function toKeyboard(px: number, py: number, size: number): Point {
  return { x: (2 * px) / size - 1, y: 1 - (2 * py) / size };
}

// Keyboard coords -> canvas pixel.
export function toCanvas(x: number, y: number, size: number): Point {
  return { x: ((x + 1) / 2) * size, y: ((1 - y) / 2) * size };
}

// The keyboard square is [-1, 1] in both axes; samples outside it are
// suppressed rather than sent.
export function insideKeyboard(p: Point): boolean {
  return p.x >= -1 && p.x <= 1 && p.y >= -1 && p.y <= 1;
}

// -- angles ------------------------------------------------------------------

// Shortest signed distance from angle a to angle b, in (-pi, pi].
export function angleDelta(a: number, b: number): number {
  let d = (b - a) % TWO_PI;
  if (d > Math.PI) d -= TWO_PI;
  if (d <= -Math.PI) d += TWO_PI;
  return d;
}

// Interpolate a sector span: the start angle travels the short way around
// the seam, the width interpolates linearly, and the radii follow suit.
// Tweening start+width (instead of both endpoints) keeps the span from
// turning inside out when one endpoint crosses the seam.
export function lerpSpan(from: SectorSpan, to: SectorSpan, t: number): SectorSpan {
  const start = from.a_start + angleDelta(from.a_start, to.a_start) * t;
  const widthFrom = from.a_end - from.a_start;
  const widthTo = to.a_end - to.a_start;
  const width = widthFrom + (widthTo - widthFrom) * t;
  return {
    r_in: from.r_in + (to.r_in - from.r_in) * t,
    r_out: from.r_out + (to.r_out - from.r_out) * t,
    a_start: start,
    a_end: start + width,
  };
}

// -- span sampling (for tests and hit highlighting) ---------------------------

// Points along the outline of an annular sector, in keyboard coords.
// Used by unit tests to pin the rendered shape without a canvas.
export function spanOutline(span: SectorSpan, steps = 16): Point[] {
  const pts: Point[] = [];
  for (let i = 0; i <= steps; i++) {
    const a = span.a_start + ((span.a_end - span.a_start) * i) / steps;
    pts.push({ x: span.r_out * Math.cos(a), y: span.r_out * Math.sin(a) });
  }
  for (let i = steps; i >= 0; i--) {
    const a = span.a_start + ((span.a_end - span.a_start) * i) / steps;
    pts.push({ x: span.r_in * Math.cos(a), y: span.r_in * Math.sin(a) });
  }
  return pts;
}

// Whether a keyboard point lies inside a span (test helper; the server is
// the authority on hits, the client never routes input by this).
export function spanContains(span: SectorSpan, p: Point): boolean {
  const r = Math.hypot(p.x, p.y);
  if (r < span.r_in || r >= span.r_out) return false;
  const width = span.a_end - span.a_start;
  if (width >= TWO_PI - 1e-9) return true;
  const theta = ((Math.atan2(p.y, p.x) % TWO_PI) + TWO_PI) % TWO_PI;
  const off = (((theta - span.a_start) % TWO_PI) + TWO_PI) % TWO_PI;
  return off < width;
}

// Radius reached by a dwell fill at the given fraction: the fill grows
// outward from the inner edge and reaches the rim at fraction 1.
export function fillRadius(span: SectorSpan, fraction: number): number {
  const f = Math.max(0, Math.min(1, fraction));
  return span.r_in + (span.r_out - span.r_in) * f;
}
