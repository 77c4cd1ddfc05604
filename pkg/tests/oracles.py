"""Independent reference implementations the tests compare against.

Each oracle recomputes a result from first principles with a different
algorithm and data layout than the production code: predictions by binary
search over a sorted word list, effective widths by marching the aim line
and bisecting the membership boundaries, region membership by direct
evaluation of the documented half-open conventions."""

from __future__ import annotations

import math
from bisect import bisect_left

import numpy as np

from slicetype.geometry import KeyRegion, LayoutState

TWO_PI = 2.0 * math.pi


# -- prediction oracle --------------------------------------------------------


class PredictionOracle:
    """Sorted-list completion lookup mirroring the bigram-first policy:
    best = highest count, ties broken by lexicographic order."""

    def __init__(self, model) -> None:
        self.words = sorted(model.words())  # [(word, count)] word-sorted
        self.word_keys = [word for word, _ in self.words]
        self.successors: dict[str, list[tuple[str, int]]] = {}
        for prev, nxt, count in model.bigram_pairs():
            self.successors.setdefault(prev, []).append((nxt, count))

    def _unigram_range(self, prefix: str) -> list[tuple[str, int]]:
        lo = bisect_left(self.word_keys, prefix)
        hi = bisect_left(self.word_keys, prefix + "\x7f")
        return self.words[lo:hi]

    def best(self, prev_word: str | None, prefix: str) -> tuple[str, int, str] | None:
        if prev_word:
            candidates = [
                (word, count)
                for word, count in self.successors.get(prev_word.lower(), [])
                if word.startswith(prefix)
            ]
            if candidates:
                word, count = min(candidates, key=lambda wc: (-wc[1], wc[0]))
                return word, count, "bigram"
        candidates = self._unigram_range(prefix)
        if candidates:
            word, count = min(candidates, key=lambda wc: (-wc[1], wc[0]))
            return word, count, "unigram"
        return None

    def extendable(self, prev_word: str | None, prefix: str) -> set[str]:
        letters = {
            word[len(prefix)] for word, _ in self._unigram_range(prefix)
            if len(word) > len(prefix)
        }
        if prev_word:
            letters |= {
                word[len(prefix)]
                for word, _ in self.successors.get(prev_word.lower(), [])
                if word.startswith(prefix) and len(word) > len(prefix)
            }
        return letters


# -- region membership from the documented conventions ------------------------


def sector_mask(xs: np.ndarray, ys: np.ndarray, sector) -> np.ndarray:
    r = np.hypot(xs, ys)
    theta = np.mod(np.arctan2(ys, xs), TWO_PI)
    width = sector.a_end - sector.a_start
    rel = np.mod(theta - sector.a_start, TWO_PI)
    return (sector.r_in <= r) & (r < sector.r_out) & (rel < width)


def rect_mask(xs: np.ndarray, ys: np.ndarray, rect) -> np.ndarray:
    x0, y0, x1, y1 = rect
    return (x0 <= xs) & (xs < x1) & (y0 <= ys) & (ys < y1)


def region_mask(xs: np.ndarray, ys: np.ndarray, region: KeyRegion) -> np.ndarray:
    mask = np.zeros(xs.shape, dtype=bool)
    for sector in region.sectors:
        mask |= sector_mask(xs, ys, sector)
    return mask


def point_in_region(region: KeyRegion, x: float, y: float) -> bool:
    r = math.hypot(x, y)
    theta = math.atan2(y, x) % TWO_PI
    for sector in region.sectors:
        width = sector.a_end - sector.a_start
        if sector.r_in <= r < sector.r_out and (theta - sector.a_start) % TWO_PI < width:
            return True
    return False


# -- effective width by ray marching ------------------------------------------


def effective_width_oracle(
    region: KeyRegion,
    origin: tuple[float, float],
    samples: int = 8001,
    refine_iters: int = 60,
) -> float:
    """Width of the contiguous region-line intersection containing the key
    center: march the aim line, then bisect the two membership boundaries."""
    cx, cy = region.center
    ox, oy = origin
    dist = math.hypot(cx - ox, cy - oy)
    if dist == 0.0:
        raise ValueError("origin coincides with the key center")
    ux, uy = (cx - ox) / dist, (cy - oy) / dist

    ts = np.linspace(-3.5, dist + 3.5, samples)
    mask = region_mask(ox + ts * ux, oy + ts * uy, region)

    at = int(np.argmin(np.abs(ts - dist)))
    if not mask[at]:
        raise AssertionError("key center not on the marched line segment")

    def member(t: float) -> bool:
        return point_in_region(region, ox + t * ux, oy + t * uy)

    def bisect_edge(inside_t: float, outside_t: float) -> float:
        for _ in range(refine_iters):
            mid = 0.5 * (inside_t + outside_t)
            if member(mid):
                inside_t = mid
            else:
                outside_t = mid
        return 0.5 * (inside_t + outside_t)

    lo_idx = at
    while lo_idx > 0 and mask[lo_idx - 1]:
        lo_idx -= 1
    hi_idx = at
    while hi_idx < samples - 1 and mask[hi_idx + 1]:
        hi_idx += 1

    if lo_idx == 0:
        left = ts[0]
    else:
        left = bisect_edge(ts[lo_idx], ts[lo_idx - 1])
    if hi_idx == samples - 1:
        right = ts[-1]
    else:
        right = bisect_edge(ts[hi_idx], ts[hi_idx + 1])
    return right - left


# -- layout partition helpers --------------------------------------------------


def owners_per_point(layout: LayoutState, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """How many regions (keys and corners) claim each point."""
    count = np.zeros(xs.shape, dtype=np.int64)
    for key in layout.keys:
        count += region_mask(xs, ys, key).astype(np.int64)
    for corner in layout.corners:
        count += rect_mask(xs, ys, corner.rect).astype(np.int64)
    return count
