import { describe, expect, test } from "vitest";
import {
  TWO_PI,
  angleDelta,
  fillRadius,
  insideKeyboard,
  lerpSpan,
  spanContains,
  spanOutline,
  toCanvas,
  toKeyboard,
} from "../../src/geometry.js";
import type { SectorSpan } from "../../src/protocol.js";

const PI = Math.PI;

function span(r_in: number, r_out: number, a_start: number, a_end: number): SectorSpan {
  return { r_in, r_out, a_start, a_end };
}

describe("coordinate mapping", () => {
  test("canvas and keyboard coords are inverses", () => {
    for (const size of [100, 480, 777]) {
      for (const [x, y] of [[0, 0], [1, 1], [-1, -1], [0.3, -0.72]] as const) {
        const c = toCanvas(x, y, size);
        const back = toKeyboard(c.x, c.y, size);
        expect(back.x).toBeCloseTo(x, 12);
        expect(back.y).toBeCloseTo(y, 12);
      }
    }
  });

  test("y axis flips: keyboard up is canvas up the screen", () => {
    // keyboard (0, 1) is the top of the circle, canvas y 0
    expect(toCanvas(0, 1, 400)).toEqual({ x: 200, y: 0 });
    expect(toCanvas(0, -1, 400)).toEqual({ x: 200, y: 400 });
    expect(toCanvas(-1, 0, 400)).toEqual({ x: 0, y: 200 });
    expect(toKeyboard(400, 400, 400)).toEqual({ x: 1, y: -1 });
  });

  test("keyboard square membership", () => {
    expect(insideKeyboard({ x: 0, y: 0 })).toBe(true);
    expect(insideKeyboard({ x: 1, y: -1 })).toBe(true);
    expect(insideKeyboard({ x: 1.01, y: 0 })).toBe(false);
    expect(insideKeyboard({ x: 0, y: -1.2 })).toBe(false);
  });
});

describe("angleDelta", () => {
  test("takes the short way around the seam", () => {
    expect(angleDelta(0, PI / 6)).toBeCloseTo(PI / 6, 12);
    expect(angleDelta((11 * PI) / 6, 0)).toBeCloseTo(PI / 6, 12);
    expect(angleDelta(0, (11 * PI) / 6)).toBeCloseTo(-PI / 6, 12);
    expect(angleDelta(PI / 2, PI / 2)).toBe(0);
  });

  test("half-turn lands on +pi from either side", () => {
    expect(Math.abs(angleDelta(0, PI))).toBeCloseTo(PI, 12);
    expect(Math.abs(angleDelta(PI, 0))).toBeCloseTo(PI, 12);
  });
});

describe("lerpSpan", () => {
  test("endpoints reproduce the inputs", () => {
    const a = span(0.3, 0.65, 0, PI / 6);
    const b = span(0.3, 0.65, PI / 6, PI / 2);
    expect(lerpSpan(a, b, 0)).toEqual(a);
    const at1 = lerpSpan(a, b, 1);
    expect(at1.a_start).toBeCloseTo(b.a_start, 12);
    expect(at1.a_end).toBeCloseTo(b.a_end, 12);
  });

  test("midpoint averages start and width", () => {
    const a = span(0.3, 0.65, 0, PI / 6);
    const b = span(0.3, 0.65, PI / 6, PI / 2);
    const mid = lerpSpan(a, b, 0.5);
    expect(mid.a_start).toBeCloseTo(PI / 12, 12);
    // widths pi/6 -> pi/3, so pi/4 at the midpoint
    expect(mid.a_end - mid.a_start).toBeCloseTo(PI / 4, 12);
  });

  test("start angle crosses the seam the short way", () => {
    // 330 degrees to 0 degrees must pass through 345, not 165
    const a = span(0.65, 1.0, (11 * PI) / 6, TWO_PI);
    const b = span(0.65, 1.0, 0, PI / 6);
    const mid = lerpSpan(a, b, 0.5);
    expect(mid.a_start).toBeCloseTo((23 * PI) / 12, 12);
    expect(mid.a_end - mid.a_start).toBeCloseTo(PI / 6, 12);
  });

  test("radii interpolate linearly", () => {
    const a = span(0.3, 0.65, 0, PI / 6);
    const b = span(0.0, 1.0, 0, PI / 6);
    const mid = lerpSpan(a, b, 0.5);
    expect(mid.r_in).toBeCloseTo(0.15, 12);
    expect(mid.r_out).toBeCloseTo(0.825, 12);
  });
});

describe("span sampling", () => {
  test("outline points sit on the two radii", () => {
    const s = span(0.3, 0.65, PI / 6, PI / 2);
    const pts = spanOutline(s, 8);
    expect(pts).toHaveLength(2 * 9);
    for (const p of pts.slice(0, 9)) {
      expect(Math.hypot(p.x, p.y)).toBeCloseTo(0.65, 12);
    }
    for (const p of pts.slice(9)) {
      expect(Math.hypot(p.x, p.y)).toBeCloseTo(0.3, 12);
    }
  });

  test("containment respects radius and angle", () => {
    const s = span(0.65, 1.0, PI / 6, PI / 2);
    expect(spanContains(s, { x: 0.8 * Math.cos(PI / 3), y: 0.8 * Math.sin(PI / 3) })).toBe(true);
    expect(spanContains(s, { x: 0.5 * Math.cos(PI / 3), y: 0.5 * Math.sin(PI / 3) })).toBe(false);
    expect(spanContains(s, { x: 0.8, y: -0.01 })).toBe(false);
  });

  test("containment handles spans that wrap the seam", () => {
    const s = span(0.65, 1.0, (11 * PI) / 6, (13 * PI) / 6);
    expect(spanContains(s, { x: 0.8, y: 0.05 })).toBe(true);
    expect(spanContains(s, { x: 0.8, y: -0.05 })).toBe(true);
    expect(spanContains(s, { x: 0.05, y: 0.8 })).toBe(false);
  });
});

describe("fillRadius", () => {
  test("grows from the inner edge to the rim", () => {
    const s = span(0.3, 0.65, 0, PI / 6);
    expect(fillRadius(s, 0)).toBeCloseTo(0.3, 12);
    expect(fillRadius(s, 0.5)).toBeCloseTo(0.475, 12);
    expect(fillRadius(s, 1)).toBeCloseTo(0.65, 12);
  });

  test("clamps out-of-range fractions", () => {
    const s = span(0.3, 0.65, 0, PI / 6);
    expect(fillRadius(s, -0.5)).toBeCloseTo(0.3, 12);
    expect(fillRadius(s, 1.7)).toBeCloseTo(0.65, 12);
  });
});
