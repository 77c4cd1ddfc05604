"""Circular keyboard geometry.

The keyboard is a unit circle inside the square [-1, 1] x [-1, 1] drawn at
1:1 aspect.  The inner disc is split into two half-disc keys for the two
most frequent letters; two rings of twelve 30-degree sectors hold the
remaining 24.  The four corners of the square hold square auxiliary keys:
top-left status/transcript (not selectable), top-right delete, bottom-left
layout-mode toggle, bottom-right space.

Angles are radians, measured counterclockwise from +x, normalized so a
sector spans [a_start, a_end) with a_start in [0, 2*pi) and a_end possibly
past 2*pi when the span wraps.  Radial membership is half-open
[r_in, r_out).  The same conventions drive the classification kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from slicetype import kernels

TWO_PI = 2.0 * math.pi

DEFAULT_RADII = (0.30, 0.65, 1.00)

# letter ranking of the bundled corpus, most frequent first
DEFAULT_LETTER_ORDER = "etohanisrdfwlmucbygpvkjqxz"

SLOT_COUNT = 12
SLOT_WIDTH = TWO_PI / SLOT_COUNT

# slot taken by the k-th most frequent letter of each ring; the patterns
# are tuned to shorten travel between keys that commonly follow each other
INNER_SLOT_ORDER = (10, 3, 2, 0, 1, 9, 6, 5, 11, 4, 7, 8)
OUTER_SLOT_ORDER = (8, 11, 1, 4, 6, 9, 3, 0, 7, 10, 5, 2)

CORNER_SIDE = 1.0 - 1.0 / math.sqrt(2.0)

CORNER_STATUS = "status"
CORNER_DELETE = "delete"
CORNER_MODE = "mode"
CORNER_SPACE = "space"

RING_HALF = 0
RING_INNER = 1
RING_OUTER = 2

_EDGE_EPS = 1e-12
_GLUE_EPS = 1e-9


# ---------------------------------------------------------------------------
# shapes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AnnularSector:
    """Annulus slice r_in <= r < r_out, a_start <= angle < a_end."""

    r_in: float
    r_out: float
    a_start: float
    a_end: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.r_in < self.r_out:
            raise ValueError(f"need 0 <= r_in < r_out, got {self.r_in}, {self.r_out}")
        width = self.a_end - self.a_start
        if not 0.0 < width <= TWO_PI + _EDGE_EPS:
            raise ValueError(f"sector width out of range: {width}")
        a0 = self.a_start % TWO_PI
        object.__setattr__(self, "a_start", a0)
        object.__setattr__(self, "a_end", a0 + width)

    @property
    def width(self) -> float:
        return self.a_end - self.a_start

    @property
    def mid_angle(self) -> float:
        return (self.a_start + 0.5 * self.width) % TWO_PI

    @property
    def mid_radius(self) -> float:
        return 0.5 * (self.r_in + self.r_out)

    def area(self) -> float:
        return 0.5 * (self.r_out**2 - self.r_in**2) * self.width

    def contains(self, x: float, y: float) -> bool:
        r = math.sqrt(x * x + y * y)
        if r < self.r_in or r >= self.r_out:
            return False
        theta = math.atan2(y, x)
        if theta < 0.0:
            theta += TWO_PI
        d = theta - self.a_start
        if d < 0.0:
            d += TWO_PI
        return d < self.width


@dataclass(frozen=True)
class KeyRegion:
    """A letter key: the host letter, any absorbed letters, and the sector
    union forming its active area.  The first sector is the host's own and
    defines the selection target point."""

    letter: str
    absorbed: frozenset[str]
    sectors: tuple[AnnularSector, ...]
    center: tuple[float, float]
    ring: int
    slot: int | None

    @property
    def key_id(self) -> str:
        return self.letter

    @property
    def selectable(self) -> bool:
        return True

    def area(self) -> float:
        return sum(sector.area() for sector in self.sectors)

    def contains(self, x: float, y: float) -> bool:
        return any(sector.contains(x, y) for sector in self.sectors)


@dataclass(frozen=True)
class CornerKey:
    """A square auxiliary key in a corner of the keyboard square."""

    corner_id: str
    rect: tuple[float, float, float, float]  # x0, y0, x1, y1
    center: tuple[float, float]
    selectable: bool

    @property
    def key_id(self) -> str:
        return self.corner_id

    def area(self) -> float:
        x0, y0, x1, y1 = self.rect
        return (x1 - x0) * (y1 - y0)

    def contains(self, x: float, y: float) -> bool:
        x0, y0, x1, y1 = self.rect
        return x0 <= x < x1 and y0 <= y < y1


@dataclass(eq=True)
class LayoutState:
    """Current keyboard arrangement: letter keys, corner keys, and the
    in-progress word prefix the arrangement was computed for."""

    keys: tuple[KeyRegion, ...]
    corners: tuple[CornerKey, ...]
    prefix: str
    radii: tuple[float, float, float]
    letter_order: str
    _packed: tuple | None = field(default=None, repr=False, compare=False)

    def key_for(self, letter: str) -> KeyRegion | None:
        for key in self.keys:
            if key.letter == letter:
                return key
        return None

    def corner_for(self, corner_id: str) -> CornerKey:
        for corner in self.corners:
            if corner.corner_id == corner_id:
                return corner
        raise KeyError(corner_id)

    def regions(self) -> tuple[KeyRegion | CornerKey, ...]:
        return self.keys + self.corners

    def packed(self) -> tuple:
        """Packed tables for the classification kernels, cached.

        Sector rows carry squared radii and the unit vectors of the two
        bounding rays instead of angles, so the kernels need no
        trigonometry: membership reduces to sign tests on cross and dot
        products, which round identically in every backend.  The last
        column classifies the span width (0 narrow, 1 wide, 2 full ring);
        see slicetype.kernels._purepy for the membership rules.
        """
        if self._packed is None:
            sec_rows: list[tuple[float, ...]] = []
            sec_owner: list[int] = []
            rect_rows: list[tuple[float, float, float, float]] = []
            rect_owner: list[int] = []
            regions = self.regions()
            for idx, region in enumerate(regions):
                if isinstance(region, KeyRegion):
                    for sector in region.sectors:
                        a_end = sector.a_start + sector.width
                        if sector.width > TWO_PI - 1e-9:
                            flag = 2.0  # full ring: radial test only
                        elif sector.width > math.pi:
                            flag = 1.0  # wide: union of the two half planes
                        else:
                            flag = 0.0  # narrow: intersection
                        sec_rows.append(
                            (
                                sector.r_in * sector.r_in,
                                sector.r_out * sector.r_out,
                                math.cos(sector.a_start),
                                math.sin(sector.a_start),
                                math.cos(a_end),
                                math.sin(a_end),
                                flag,
                            )
                        )
                        sec_owner.append(idx)
                else:
                    x0, y0, x1, y1 = region.rect
                    rect_rows.append((x0, x1, y0, y1))
                    rect_owner.append(idx)
            self._packed = (
                np.array(sec_rows, dtype=np.float64).reshape(-1, 7),
                np.array(sec_owner, dtype=np.int32),
                np.array(rect_rows, dtype=np.float64).reshape(-1, 4),
                np.array(rect_owner, dtype=np.int32),
            )
        return self._packed


# ---------------------------------------------------------------------------
# layout construction
# ---------------------------------------------------------------------------


def target_center(sector: AnnularSector) -> tuple[float, float]:
    """Selection target of a sector: on its angular bisector, halfway
    between its radii."""
    r = sector.mid_radius
    a = sector.a_start + 0.5 * sector.width
    return (r * math.cos(a), r * math.sin(a))


def _corner_rect(corner_id: str) -> tuple[float, float, float, float]:
    s = CORNER_SIDE
    if corner_id == CORNER_STATUS:
        return (-1.0, 1.0 - s, -1.0 + s, 1.0)
    if corner_id == CORNER_DELETE:
        return (1.0 - s, 1.0 - s, 1.0, 1.0)
    if corner_id == CORNER_MODE:
        return (-1.0, -1.0, -1.0 + s, -1.0 + s)
    if corner_id == CORNER_SPACE:
        return (1.0 - s, -1.0, 1.0, -1.0 + s)
    raise ValueError(f"unknown corner id {corner_id!r}")


def _make_corner(corner_id: str) -> CornerKey:
    x0, y0, x1, y1 = _corner_rect(corner_id)
    return CornerKey(
        corner_id=corner_id,
        rect=(x0, y0, x1, y1),
        center=(0.5 * (x0 + x1), 0.5 * (y0 + y1)),
        selectable=corner_id != CORNER_STATUS,
    )


def slot_span(slot: int) -> tuple[float, float]:
    return (slot * SLOT_WIDTH, (slot + 1) * SLOT_WIDTH)


def ring_slot_letters(letter_order: str) -> tuple[dict[int, str], dict[int, str]]:
    """Slot -> letter maps for the inner and outer rings.  Ring letters are
    ranks 2..13 (inner) and 14..25 (outer) of the frequency order; within
    each ring the k-th most frequent letter takes the slot given by the
    ring's slot-order pattern."""
    inner_letters = letter_order[2:14]
    outer_letters = letter_order[14:26]
    inner = {INNER_SLOT_ORDER[i]: inner_letters[i] for i in range(SLOT_COUNT)}
    outer = {OUTER_SLOT_ORDER[i]: outer_letters[i] for i in range(SLOT_COUNT)}
    return inner, outer


def half_slots(side: str) -> tuple[int, ...]:
    """Inner-ring slots bordering the left or right half-disc key."""
    if side == "left":
        return (3, 4, 5, 6, 7, 8)
    if side == "right":
        return (9, 10, 11, 0, 1, 2)
    raise ValueError(f"unknown side {side!r}")


def default_layout(
    radii: tuple[float, float, float] = DEFAULT_RADII,
    letter_order: str = DEFAULT_LETTER_ORDER,
) -> LayoutState:
    """Unmerged layout: 26 single-sector keys plus the four corners."""
    r1, r2, r3 = radii
    if not 0.0 < r1 < r2 < r3 <= 1.0:
        raise ValueError(f"radii must satisfy 0 < r1 < r2 < r3 <= 1, got {radii}")
    if len(letter_order) != 26 or set(letter_order) != set(
        "abcdefghijklmnopqrstuvwxyz"
    ):
        raise ValueError("letter_order must be a permutation of a-z")

    keys: list[KeyRegion] = []

    half_specs = (
        (letter_order[0], 0.5 * math.pi, 1.5 * math.pi),  # left half
        (letter_order[1], 1.5 * math.pi, 2.5 * math.pi),  # right half
    )
    for letter, a0, a1 in half_specs:
        sector = AnnularSector(0.0, r1, a0, a1)
        keys.append(
            KeyRegion(
                letter=letter,
                absorbed=frozenset(),
                sectors=(sector,),
                center=target_center(sector),
                ring=RING_HALF,
                slot=None,
            )
        )

    inner, outer = ring_slot_letters(letter_order)
    for ring, slot_map, r_in, r_out in (
        (RING_INNER, inner, r1, r2),
        (RING_OUTER, outer, r2, r3),
    ):
        for slot in range(SLOT_COUNT):
            a0, a1 = slot_span(slot)
            sector = AnnularSector(r_in, r_out, a0, a1)
            keys.append(
                KeyRegion(
                    letter=slot_map[slot],
                    absorbed=frozenset(),
                    sectors=(sector,),
                    center=target_center(sector),
                    ring=ring,
                    slot=slot,
                )
            )

    corners = tuple(
        _make_corner(cid) for cid in (CORNER_STATUS, CORNER_DELETE, CORNER_MODE, CORNER_SPACE)
    )
    return LayoutState(
        keys=tuple(keys),
        corners=corners,
        prefix="",
        radii=(r1, r2, r3),
        letter_order=letter_order,
    )


def with_prefix(layout: LayoutState, prefix: str) -> LayoutState:
    return replace(layout, prefix=prefix, _packed=layout._packed)


# ---------------------------------------------------------------------------
# hit testing
# ---------------------------------------------------------------------------


def hit_test(layout: LayoutState, point: tuple[float, float]) -> KeyRegion | CornerKey | None:
    """Region containing the point, or None for blank/background space."""
    sec_geom, sec_owner, rect_geom, rect_owner = layout.packed()
    idx = kernels.classify_point(
        point[0], point[1], sec_geom, sec_owner, rect_geom, rect_owner
    )
    if idx < 0:
        return None
    return layout.regions()[idx]


def hit_test_batch(layout: LayoutState, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Region indices (into layout.regions()) for many points, -1 for none."""
    sec_geom, sec_owner, rect_geom, rect_owner = layout.packed()
    return kernels.classify_batch(xs, ys, sec_geom, sec_owner, rect_geom, rect_owner)


def distance(origin: tuple[float, float], region: KeyRegion | CornerKey) -> float:
    cx, cy = region.center
    return math.hypot(cx - origin[0], cy - origin[1])


# ---------------------------------------------------------------------------
# directional effective width
# ---------------------------------------------------------------------------
#
# The movement analyzer measures a target's width along the approach line:
# parameterize P(s) = origin + s * u with u the unit vector toward the
# target center, intersect the line with the region, and take the length of
# the contiguous intersection interval containing the center.


def effective_width(region: KeyRegion | CornerKey, origin: tuple[float, float]) -> float:
    cx, cy = region.center
    ox, oy = origin
    dx, dy = cx - ox, cy - oy
    length = math.hypot(dx, dy)
    if length < _EDGE_EPS:
        raise ValueError("origin coincides with the target center")
    ux, uy = dx / length, dy / length

    intervals: list[tuple[float, float]] = []
    if isinstance(region, KeyRegion):
        for sector in region.sectors:
            intervals.extend(_sector_line_intervals(sector, ox, oy, ux, uy))
    else:
        intervals.extend(_rect_line_intervals(region.rect, ox, oy, ux, uy))

    merged = _merge_intervals(intervals)
    for lo, hi in merged:
        if lo - _GLUE_EPS <= length <= hi + _GLUE_EPS:
            return hi - lo
    raise RuntimeError("target center not on the approach line intersection")


def _sector_line_intervals(
    sector: AnnularSector, ox: float, oy: float, ux: float, uy: float
) -> list[tuple[float, float]]:
    """Parameter intervals where origin + s*u lies inside the sector."""
    b = ox * ux + oy * uy
    c = ox * ox + oy * oy

    disc_out = b * b - c + sector.r_out**2
    if disc_out <= 0.0:
        return []
    root_out = math.sqrt(disc_out)
    pieces: list[tuple[float, float]] = [(-b - root_out, -b + root_out)]

    if sector.r_in > 0.0:
        disc_in = b * b - c + sector.r_in**2
        if disc_in > 0.0:
            root_in = math.sqrt(disc_in)
            pieces = _subtract(pieces, -b - root_in, -b + root_in)

    width = sector.width
    if width < TWO_PI - _EDGE_EPS:
        if width <= math.pi + _EDGE_EPS:
            # convex wedge: intersection of two half-planes through origin
            pieces = _clip_halfplane(pieces, sector.a_start, +1.0, ox, oy, ux, uy)
            pieces = _clip_halfplane(pieces, sector.a_end, -1.0, ox, oy, ux, uy)
        else:
            # reflex wedge: complement of the convex wedge a_end..a_start
            sliver: list[tuple[float, float]] = [(-math.inf, math.inf)]
            sliver = _clip_halfplane(sliver, sector.a_end, +1.0, ox, oy, ux, uy)
            sliver = _clip_halfplane(sliver, sector.a_start, -1.0, ox, oy, ux, uy)
            for lo, hi in sliver:
                pieces = _subtract(pieces, lo, hi)
    return [(lo, hi) for lo, hi in pieces if hi > lo]


def _clip_halfplane(
    pieces: list[tuple[float, float]],
    angle: float,
    sign: float,
    ox: float,
    oy: float,
    ux: float,
    uy: float,
) -> list[tuple[float, float]]:
    """Keep the part of each interval with sign * cross(v(angle), P(s)) >= 0."""
    vx, vy = math.cos(angle), math.sin(angle)
    h0 = sign * (vx * oy - vy * ox)
    hs = sign * (vx * uy - vy * ux)
    if abs(hs) < _EDGE_EPS:
        return list(pieces) if h0 >= 0.0 else []
    root = -h0 / hs
    out: list[tuple[float, float]] = []
    for lo, hi in pieces:
        if hs > 0.0:
            lo = max(lo, root)
        else:
            hi = min(hi, root)
        if hi > lo:
            out.append((lo, hi))
    return out


def _subtract(
    pieces: list[tuple[float, float]], cut_lo: float, cut_hi: float
) -> list[tuple[float, float]]:
    out: list[tuple[float, float]] = []
    for lo, hi in pieces:
        if cut_hi <= lo or cut_lo >= hi:
            out.append((lo, hi))
            continue
        if lo < cut_lo:
            out.append((lo, cut_lo))
        if cut_hi < hi:
            out.append((cut_hi, hi))
    return out


def _rect_line_intervals(
    rect: tuple[float, float, float, float], ox: float, oy: float, ux: float, uy: float
) -> list[tuple[float, float]]:
    x0, y0, x1, y1 = rect
    lo, hi = -math.inf, math.inf
    for pos, vel, lo_edge, hi_edge in ((ox, ux, x0, x1), (oy, uy, y0, y1)):
        if abs(vel) < _EDGE_EPS:
            if not lo_edge <= pos <= hi_edge:
                return []
            continue
        s0 = (lo_edge - pos) / vel
        s1 = (hi_edge - pos) / vel
        if s0 > s1:
            s0, s1 = s1, s0
        lo = max(lo, s0)
        hi = min(hi, s1)
    return [(lo, hi)] if hi > lo else []


def _merge_intervals(intervals: list[tuple[float, float]]) -> list[tuple[float, float]]:
    live = sorted((lo, hi) for lo, hi in intervals if hi > lo)
    out: list[tuple[float, float]] = []
    for lo, hi in live:
        if out and lo <= out[-1][1] + _GLUE_EPS:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def layout_to_dict(layout: LayoutState) -> dict:
    return {
        "prefix": layout.prefix,
        "radii": list(layout.radii),
        "keys": [
            {
                "letter": key.letter,
                "absorbed": sorted(key.absorbed),
                "sectors": [
                    {
                        "r_in": sector.r_in,
                        "r_out": sector.r_out,
                        "a_start": sector.a_start,
                        "a_end": sector.a_end,
                    }
                    for sector in key.sectors
                ],
                "center": [key.center[0], key.center[1]],
            }
            for key in layout.keys
        ],
        "corners": [
            {
                "id": corner.corner_id,
                "rect": list(corner.rect),
                "center": [corner.center[0], corner.center[1]],
                "selectable": corner.selectable,
            }
            for corner in layout.corners
        ],
    }


def layout_from_dict(data: dict) -> LayoutState:
    keys: list[KeyRegion] = []
    for entry in data["keys"]:
        sectors = tuple(
            AnnularSector(s["r_in"], s["r_out"], s["a_start"], s["a_end"])
            for s in entry["sectors"]
        )
        keys.append(
            KeyRegion(
                letter=entry["letter"],
                absorbed=frozenset(entry["absorbed"]),
                sectors=sectors,
                center=(entry["center"][0], entry["center"][1]),
                ring=-1,
                slot=None,
            )
        )
    corners = tuple(
        CornerKey(
            corner_id=entry["id"],
            rect=tuple(entry["rect"]),
            center=(entry["center"][0], entry["center"][1]),
            selectable=entry["selectable"],
        )
        for entry in data["corners"]
    )
    radii = tuple(data["radii"])
    return LayoutState(
        keys=tuple(keys),
        corners=corners,
        prefix=data["prefix"],
        radii=radii,
        letter_order=DEFAULT_LETTER_ORDER,
    )
