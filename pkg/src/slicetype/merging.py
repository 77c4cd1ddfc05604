"""Key merging: drop letters that cannot extend the current prefix and
grow a neighboring surviving key over each dropped key's area.

Absorption rule: a removed letter is absorbed by the first surviving key
in its neighbor list; neighbor lists put radially adjacent keys first,
then the counterclockwise and clockwise same-ring neighbors.  For an
inner-ring key the outward neighbor is preferred over the half key so
that a surviving rare letter grows toward the keyboard center, which is
where approaches come from.  Absorption never chains: if every neighbor
of a removed key is itself removed, its area goes blank.  Surviving keys
keep their original selection target point."""

from __future__ import annotations

from dataclasses import dataclass, replace

from slicetype.corpus import ALPHABET, NgramModel
from slicetype.geometry import (
    SLOT_COUNT,
    SLOT_WIDTH,
    RING_HALF,
    RING_INNER,
    RING_OUTER,
    AnnularSector,
    KeyRegion,
    LayoutState,
    half_slots,
)


@dataclass(frozen=True)
class MergePlan:
    """Outcome of planning a merge for one (prev_word, prefix) state."""

    prefix: str
    removed: frozenset[str]
    absorptions: dict[str, str | None]  # removed letter -> host letter or None
    layout: LayoutState


def adjacency(layout: LayoutState) -> dict[str, list[str]]:
    """Neighbor lists over the unmerged layout, in absorption preference
    order: radial inward, radial outward, counterclockwise, clockwise."""
    if any(key.absorbed for key in layout.keys):
        raise ValueError("adjacency is defined over the unmerged layout")
    halves: dict[str, str] = {
        "left": layout.letter_order[0],
        "right": layout.letter_order[1],
    }
    inner: dict[int, str] = {}
    outer: dict[int, str] = {}
    for key in layout.keys:
        if key.ring == RING_HALF:
            pass
        elif key.ring == RING_INNER:
            inner[key.slot] = key.letter
        elif key.ring == RING_OUTER:
            outer[key.slot] = key.letter

    def half_for_slot(slot: int) -> str:
        return halves["left"] if slot in half_slots("left") else halves["right"]

    neighbors: dict[str, list[str]] = {}
    for side in ("left", "right"):
        neighbors[halves[side]] = [inner[slot] for slot in half_slots(side)]
    for slot in range(SLOT_COUNT):
        neighbors[inner[slot]] = [
            outer[slot],
            half_for_slot(slot),
            inner[(slot + 1) % SLOT_COUNT],
            inner[(slot - 1) % SLOT_COUNT],
        ]
        neighbors[outer[slot]] = [
            inner[slot],
            outer[(slot + 1) % SLOT_COUNT],
            outer[(slot - 1) % SLOT_COUNT],
        ]
    return neighbors


def plan_merge(
    model: NgramModel,
    base_layout: LayoutState,
    prev_word: str | None,
    prefix: str,
    *,
    enabled: bool = True,
    keep: str | None = None,
) -> MergePlan:
    """Plan the merged layout for a prefix.  With enabled=False the plan is
    the identity (non-merging mode).  keep forces one letter to survive
    regardless of the model (used to hold the key just committed under a
    continuing dwell)."""
    if not enabled:
        return MergePlan(
            prefix=prefix,
            removed=frozenset(),
            absorptions={},
            layout=replace(base_layout, prefix=prefix, _packed=base_layout._packed),
        )
    extendable = model.extendable_letters(prev_word, prefix)
    if keep is not None:
        extendable = extendable | {keep}
    removed = frozenset(set(ALPHABET) - extendable)
    neighbor = adjacency(base_layout)
    absorptions: dict[str, str | None] = {}
    for letter in sorted(removed):
        host = next((n for n in neighbor[letter] if n not in removed), None)
        absorptions[letter] = host
    layout = _build_merged(base_layout, prefix, removed, absorptions)
    return MergePlan(
        prefix=prefix, removed=removed, absorptions=absorptions, layout=layout
    )


def apply_plan(plan: MergePlan) -> LayoutState:
    return plan.layout


def _build_merged(
    base: LayoutState,
    prefix: str,
    removed: frozenset[str],
    absorptions: dict[str, str | None],
) -> LayoutState:
    base_key = {key.letter: key for key in base.keys}
    gains: dict[str, list[str]] = {}
    for letter, host in absorptions.items():
        if host is not None:
            gains.setdefault(host, []).append(letter)

    keys: list[KeyRegion] = []
    for key in base.keys:
        if key.letter in removed:
            continue
        absorbed = sorted(gains.get(key.letter, ()))
        if not absorbed:
            keys.append(key)
            continue
        merged_sectors = _coalesce(
            [key] + [base_key[a] for a in absorbed], host=key, radii=base.radii
        )
        keys.append(
            KeyRegion(
                letter=key.letter,
                absorbed=frozenset(absorbed),
                sectors=merged_sectors,
                center=key.center,
                ring=key.ring,
                slot=key.slot,
            )
        )
    return LayoutState(
        keys=tuple(keys),
        corners=base.corners,
        prefix=prefix,
        radii=base.radii,
        letter_order=base.letter_order,
    )


def _coalesce(
    members: list[KeyRegion], host: KeyRegion, radii: tuple[float, float, float]
) -> tuple[AnnularSector, ...]:
    """Sector union of the host and its absorbed keys.  Angularly adjacent
    slots in one ring fuse into a single wider sector; radially stacked
    arcs with the same angular span fuse across rings."""
    r1, r2, r3 = radii
    ring_slots: dict[int, set[int]] = {RING_INNER: set(), RING_OUTER: set()}
    half_member: KeyRegion | None = None
    for member in members:
        if member.ring == RING_HALF:
            half_member = member
        else:
            ring_slots[member.ring].add(member.slot)

    arcs: list[tuple[float, float, float, float]] = []  # r_in, r_out, a_start, a_end
    for ring, (r_in, r_out) in ((RING_INNER, (r1, r2)), (RING_OUTER, (r2, r3))):
        for start, end in _slot_runs(ring_slots[ring]):
            arcs.append((r_in, r_out, start * SLOT_WIDTH, (end + 1) * SLOT_WIDTH))
    if half_member is not None:
        half = half_member.sectors[0]
        arcs.append((half.r_in, half.r_out, half.a_start, half.a_end))

    # fuse radially stacked arcs sharing an angular span
    arcs.sort(key=lambda a: (round(a[2], 12), round(a[3], 12), a[0]))
    fused: list[tuple[float, float, float, float]] = []
    for arc in arcs:
        if (
            fused
            and abs(fused[-1][2] - arc[2]) < 1e-12
            and abs(fused[-1][3] - arc[3]) < 1e-12
            and abs(fused[-1][1] - arc[0]) < 1e-12
        ):
            fused[-1] = (fused[-1][0], arc[1], arc[2], arc[3])
        else:
            fused.append(arc)

    host_sector = host.sectors[0]
    sectors = [AnnularSector(*arc) for arc in fused]
    # the host's own sector leads; it defines the selection target
    sectors.sort(key=lambda s: 0 if s.contains(*host.center) else 1)
    return tuple(sectors)


def _slot_runs(slots: set[int]) -> list[tuple[int, int]]:
    """Maximal runs of circularly consecutive slots as (start, end) with
    end >= start; a run crossing slot 0 keeps counting past SLOT_COUNT."""
    if not slots:
        return []
    if len(slots) == SLOT_COUNT:
        return [(0, SLOT_COUNT - 1)]
    runs: list[tuple[int, int]] = []
    for start in sorted(slots):
        if (start - 1) % SLOT_COUNT in slots:
            continue  # interior of a run, not its start
        end = start
        while (end + 1) % SLOT_COUNT in slots:
            end += 1
        runs.append((start, end))
    return runs
