"""Pure numpy implementation of the classification kernels.

Region tables are packed arrays:
  sec_geom   float64 (S, 7): r_in_sq, r_out_sq, sx, sy, ex, ey, flag
  sec_owner  int32   (S,):   region index owning each sector
  rect_geom  float64 (R, 4): x0, x1, y0, y1
  rect_owner int32   (R,):   region index owning each rectangle

A sector row stores squared radii plus the unit vectors s = (sx, sy) and
e = (ex, ey) of its start and end rays.  No square roots and no inverse
trig appear anywhere: every step is a single IEEE multiply, add, or
compare, so all backends produce the same bits as long as fused
multiply-add contraction stays off.

Membership conventions (identical in the compiled backend):
  radial:  r_in_sq <= x*x + y*y < r_out_sq
  angular, against each bounding ray:
      after_start = cross_s > 0 or (cross_s == 0 and dot_s > 0)
      before_end  = cross_e < 0 or (cross_e == 0 and dot_e < 0)
    where cross_u = ux*y - uy*x and dot_u = ux*x + uy*y.  The sector
    holds the point when both are true for narrow spans (width <= pi,
    flag 0), when either is true for wide spans (width > pi, flag 1),
    and unconditionally for full rings (flag 2).  The start ray is
    inside and the end ray outside, i.e. spans are half-open.  The
    origin is classified as if it lay on the positive x axis.
  rectangles are half-open: x0 <= x < x1 and y0 <= y < y1
  sectors are tested before rectangles, in table order; first match wins.
"""

import numpy as np


def classify_point(
    x: float,
    y: float,
    sec_geom: np.ndarray,
    sec_owner: np.ndarray,
    rect_geom: np.ndarray,
    rect_owner: np.ndarray,
) -> int:
    """Classify one point; returns the owning region index or -1."""
    r_sq = x * x + y * y
    px, py = x, y
    if px == 0.0 and py == 0.0:
        px, py = 1.0, 0.0
    for i in range(sec_geom.shape[0]):
        if r_sq < sec_geom[i, 0] or r_sq >= sec_geom[i, 1]:
            continue
        flag = sec_geom[i, 6]
        if flag == 2.0:
            return int(sec_owner[i])
        cross_s = sec_geom[i, 2] * py - sec_geom[i, 3] * px
        dot_s = sec_geom[i, 2] * px + sec_geom[i, 3] * py
        cross_e = sec_geom[i, 4] * py - sec_geom[i, 5] * px
        dot_e = sec_geom[i, 4] * px + sec_geom[i, 5] * py
        after_start = cross_s > 0.0 or (cross_s == 0.0 and dot_s > 0.0)
        before_end = cross_e < 0.0 or (cross_e == 0.0 and dot_e < 0.0)
        if flag == 1.0:
            if after_start or before_end:
                return int(sec_owner[i])
        elif after_start and before_end:
            return int(sec_owner[i])
    for i in range(rect_geom.shape[0]):
        if (
            x >= rect_geom[i, 0]
            and x < rect_geom[i, 1]
            and y >= rect_geom[i, 2]
            and y < rect_geom[i, 3]
        ):
            return int(rect_owner[i])
    return -1


def classify_batch(
    xs: np.ndarray,
    ys: np.ndarray,
    sec_geom: np.ndarray,
    sec_owner: np.ndarray,
    rect_geom: np.ndarray,
    rect_owner: np.ndarray,
) -> np.ndarray:
    """Classify many points; returns int32 region indices, -1 for none."""
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    out = np.full(xs.shape[0], -1, dtype=np.int32)
    r_sq = xs * xs + ys * ys
    origin = (xs == 0.0) & (ys == 0.0)
    px = np.where(origin, 1.0, xs)
    py = np.where(origin, 0.0, ys)
    unclaimed = np.ones(xs.shape[0], dtype=bool)
    for i in range(sec_geom.shape[0]):
        radial = (r_sq >= sec_geom[i, 0]) & (r_sq < sec_geom[i, 1])
        flag = sec_geom[i, 6]
        if flag == 2.0:
            angular = np.ones(xs.shape[0], dtype=bool)
        else:
            cross_s = sec_geom[i, 2] * py - sec_geom[i, 3] * px
            dot_s = sec_geom[i, 2] * px + sec_geom[i, 3] * py
            cross_e = sec_geom[i, 4] * py - sec_geom[i, 5] * px
            dot_e = sec_geom[i, 4] * px + sec_geom[i, 5] * py
            after_start = (cross_s > 0.0) | ((cross_s == 0.0) & (dot_s > 0.0))
            before_end = (cross_e < 0.0) | ((cross_e == 0.0) & (dot_e < 0.0))
            if flag == 1.0:
                angular = after_start | before_end
            else:
                angular = after_start & before_end
        hit = unclaimed & radial & angular
        out[hit] = sec_owner[i]
        unclaimed &= ~hit
    for i in range(rect_geom.shape[0]):
        hit = (
            unclaimed
            & (xs >= rect_geom[i, 0])
            & (xs < rect_geom[i, 1])
            & (ys >= rect_geom[i, 2])
            & (ys < rect_geom[i, 3])
        )
        out[hit] = rect_owner[i]
        unclaimed &= ~hit
    return out
