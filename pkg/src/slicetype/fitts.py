"""Movement-difficulty analysis of typing a text under five entry
conditions.

Every selection is modeled as one aimed movement from the previous
selection point to the next key's target point.  Movement difficulty is
the Fitts index log2(A / W + 1) with A the distance between the points
and W the target's extent measured along the approach line, so a key
grown by merging is easier to hit while its target point stays put.

Conditions:
  no_pred_no_merge   every letter dwelt, static layout
  pred_no_merge      word completion by a held dwell, static layout
  no_pred_merge      every letter dwelt, layout re-merged per prefix
  pred_merge         completion and merging together
  dedicated_area     completion shown only in a status area far from the
                     keys: after every committed letter the gaze makes a
                     round trip to that area; a completed word is selected
                     there (no return trip for it)

Word boundaries between words are handled per space_policy: "free" models
an entry scheme where boundaries cost no movement (completion commits
imply their own boundary); "corner" charges an aimed movement to the
space corner key.  The policy is recorded in the report header."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from enum import Enum

from slicetype.corpus import ALPHABET, NgramModel
from slicetype.geometry import (
    CORNER_SPACE,
    CORNER_STATUS,
    DEFAULT_RADII,
    CornerKey,
    KeyRegion,
    LayoutState,
    default_layout,
    distance,
    effective_width,
)
from slicetype.merging import adjacency, plan_merge


class Condition(Enum):
    NO_PRED_NO_MERGE = "no_pred_no_merge"
    PRED_NO_MERGE = "pred_no_merge"
    NO_PRED_MERGE = "no_pred_merge"
    PRED_MERGE = "pred_merge"
    DEDICATED_AREA = "dedicated_area"

    @property
    def uses_prediction(self) -> bool:
        return self in (Condition.PRED_NO_MERGE, Condition.PRED_MERGE, Condition.DEDICATED_AREA)

    @property
    def uses_merging(self) -> bool:
        return self in (Condition.NO_PRED_MERGE, Condition.PRED_MERGE)


class ActionKind(Enum):
    LETTER = "letter"  # dwell a letter key, committing one letter
    COMPLETE = "complete"  # dwell a letter key and hold: letter + word
    SPACE = "space"  # dwell the space corner
    NUDGE = "nudge"  # leave a key to re-arm it for a repeated letter
    CHECK = "check"  # dedicated area: glance at the status corner
    SELECT = "select"  # dedicated area: take the shown word (no movement)


@dataclass(frozen=True)
class Action:
    kind: ActionKind
    letter: str | None = None
    word: str | None = None  # the word this action helps enter
    prefix: str = ""
    prev_word: str | None = None


@dataclass(frozen=True)
class MovementStep:
    condition: str
    kind: str
    word: str | None
    prefix: str
    target: str
    origin: tuple[float, float]
    amplitude: float
    width: float
    difficulty: float


def index_of_difficulty(amplitude: float, width: float) -> float:
    """Fitts index log2(A / W + 1); zero amplitude is zero difficulty."""
    if width <= 0.0:
        raise ValueError(f"width must be positive, got {width}")
    if amplitude < 0.0:
        raise ValueError(f"amplitude must be non-negative, got {amplitude}")
    return math.log2(amplitude / width + 1.0)


# ---------------------------------------------------------------------------
# action planning (shared with the simulator)
# ---------------------------------------------------------------------------


def plan_word_actions(
    model: NgramModel,
    word: str,
    prev_word: str | None,
    *,
    prediction: bool,
    start_prefix: str = "",
    last_letter: str | None = None,
) -> tuple[list[Action], bool]:
    """Dwell actions that enter one word from start_prefix onward.
    Returns (actions, completed_by_prediction).  last_letter is the most
    recently dwelt letter key, used to insert a re-arming nudge before a
    repeated letter."""
    actions: list[Action] = []
    prefix = start_prefix
    last = last_letter
    while prefix != word:
        nxt = word[len(prefix)]
        if last == nxt:
            actions.append(
                Action(ActionKind.NUDGE, letter=nxt, word=word, prefix=prefix, prev_word=prev_word)
            )
        if prediction:
            proposed = model.predict(prev_word, prefix + nxt)
            if proposed is not None and proposed.word == word:
                actions.append(
                    Action(
                        ActionKind.COMPLETE,
                        letter=nxt,
                        word=word,
                        prefix=prefix,
                        prev_word=prev_word,
                    )
                )
                return actions, True
        actions.append(
            Action(ActionKind.LETTER, letter=nxt, word=word, prefix=prefix, prev_word=prev_word)
        )
        prefix += nxt
        last = nxt
    return actions, False


def _plan_word_dedicated(
    model: NgramModel, word: str, prev_word: str | None
) -> list[Action]:
    """Dedicated-area flow for one word: type a letter, glance at the
    status area, select the word there once it appears."""
    actions: list[Action] = []
    prefix = ""
    while True:
        nxt = word[len(prefix)]
        actions.append(
            Action(ActionKind.LETTER, letter=nxt, word=word, prefix=prefix, prev_word=prev_word)
        )
        prefix += nxt
        actions.append(Action(ActionKind.CHECK, word=word, prefix=prefix, prev_word=prev_word))
        if prefix == word:
            actions.append(Action(ActionKind.SPACE, word=word, prefix=prefix, prev_word=prev_word))
            return actions
        proposed = model.predict(prev_word, prefix + word[len(prefix)])
        if proposed is not None and proposed.word == word:
            actions.append(
                Action(ActionKind.SELECT, word=word, prefix=prefix, prev_word=prev_word)
            )
            return actions


def plan_actions(
    model: NgramModel,
    text: str,
    condition: Condition,
    *,
    prev_word: str | None = None,
) -> list[Action]:
    """Full dwell-action sequence for transcribing a text."""
    words = _split_text(text)
    actions: list[Action] = []
    prev = prev_word
    last_letter: str | None = None
    for word in words:
        if condition is Condition.DEDICATED_AREA:
            actions += _plan_word_dedicated(model, word, prev)
            last_letter = None  # every letter approach starts at the corner
        else:
            word_actions, completed = plan_word_actions(
                model,
                word,
                prev,
                prediction=condition.uses_prediction,
                last_letter=last_letter,
            )
            actions += word_actions
            if not completed:
                actions.append(
                    Action(ActionKind.SPACE, word=word, prefix=word, prev_word=prev)
                )
                last_letter = None  # the space corner breaks key contact
            else:
                last_letter = word_actions[-1].letter
        prev = word
    return actions


def _split_text(text: str) -> list[str]:
    # Empty text is a valid zero-step plan; malformed words are not.
    words = text.lower().split()
    for word in words:
        if any(ch not in ALPHABET for ch in word):
            raise ValueError(f"text words must be a-z only, got {word!r}")
    return words


# ---------------------------------------------------------------------------
# movement path
# ---------------------------------------------------------------------------


def plan_path(
    model: NgramModel,
    text: str,
    condition: Condition,
    *,
    base_layout: LayoutState | None = None,
    space_policy: str = "free",
    start: tuple[float, float] = (0.0, 0.0),
    prev_word: str | None = None,
) -> tuple[list[MovementStep], list[str]]:
    """Movement steps for a text under one condition.  Returns the steps
    and a list of per-word flags (words absent from the model fall back to
    the unmerged layout under merging conditions)."""
    if space_policy not in ("free", "corner"):
        raise ValueError(f"space_policy must be 'free' or 'corner', got {space_policy}")
    if base_layout is None:
        base_layout = default_layout()
    actions = plan_actions(model, text, condition, prev_word=prev_word)
    neighbor = adjacency(base_layout)

    flags: list[str] = []
    oov: set[str] = set()
    if condition.uses_merging:
        for word in _split_text(text):
            if not model.contains(word) and word not in oov:
                oov.add(word)
                flags.append(
                    f"word {word!r} not in the model: unmerged layout used for it"
                )

    layout_cache: dict[tuple[str | None, str], LayoutState] = {}

    def layout_for(action: Action) -> LayoutState:
        if not condition.uses_merging:
            return base_layout
        word = _action_word(action)
        if word is not None and word in oov:
            return base_layout
        key = (action.prev_word, action.prefix)
        if key not in layout_cache:
            layout_cache[key] = plan_merge(
                model, base_layout, action.prev_word, action.prefix
            ).layout
        return layout_cache[key]

    steps: list[MovementStep] = []
    origin = start
    for action in actions:
        if action.kind is ActionKind.SELECT:
            continue  # selected in place at the status corner
        if action.kind is ActionKind.SPACE and space_policy == "free":
            continue
        layout = layout_for(action)
        target: KeyRegion | CornerKey
        if action.kind in (ActionKind.LETTER, ActionKind.COMPLETE):
            found = layout.key_for(action.letter)
            if found is None:
                raise RuntimeError(
                    f"letter {action.letter!r} missing from layout for prefix {action.prefix!r}"
                )
            target = found
        elif action.kind is ActionKind.NUDGE:
            target = _nudge_target(layout, neighbor, action.letter)
        elif action.kind is ActionKind.SPACE:
            target = layout.corner_for(CORNER_SPACE)
        elif action.kind is ActionKind.CHECK:
            target = layout.corner_for(CORNER_STATUS)
        else:
            raise AssertionError(action.kind)
        amplitude = distance(origin, target)
        width = effective_width(target, origin)
        steps.append(
            MovementStep(
                condition=condition.value,
                kind=action.kind.value,
                word=_action_word(action),
                prefix=action.prefix,
                target=target.key_id,
                origin=origin,
                amplitude=amplitude,
                width=width,
                difficulty=index_of_difficulty(amplitude, width),
            )
        )
        origin = target.center
    return steps, flags


def _action_word(action: Action) -> str | None:
    return action.word


def _nudge_target(
    layout: LayoutState, neighbor: dict[str, list[str]], letter: str
) -> KeyRegion | CornerKey:
    """Somewhere adjacent to step out to before re-entering a key: the
    first surviving neighbor, else any other letter key, else the space
    corner."""
    for candidate in neighbor[letter]:
        found = layout.key_for(candidate)
        if found is not None:
            return found
    for key in layout.keys:
        if key.letter != letter:
            return key
    return layout.corner_for(CORNER_SPACE)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

_CONDITION_ORDER = (
    Condition.NO_PRED_NO_MERGE,
    Condition.PRED_NO_MERGE,
    Condition.NO_PRED_MERGE,
    Condition.PRED_MERGE,
    Condition.DEDICATED_AREA,
)


@dataclass
class FittsReport:
    text: str
    space_policy: str
    radii: tuple[float, float, float]
    flags: list[str]
    steps: dict[str, list[MovementStep]]

    def total(self, condition: Condition | str) -> float:
        name = condition.value if isinstance(condition, Condition) else condition
        return sum(step.difficulty for step in self.steps[name])

    def totals(self) -> dict[str, float]:
        return {name: self.total(name) for name in self.steps}

    def prediction_saving_over_dedicated(self) -> float:
        """Fractional drop in total difficulty from the dedicated-area
        scheme to in-key completion (pred_no_merge)."""
        dedicated = self.total(Condition.DEDICATED_AREA)
        in_key = self.total(Condition.PRED_NO_MERGE)
        if dedicated == 0:
            return 0.0
        return (dedicated - in_key) / dedicated

    def movement_time_totals(self, intercept_ms: float, slope_ms: float) -> dict[str, float]:
        """Linear movement-time model: per step intercept + slope * ID."""
        return {
            name: sum(intercept_ms + slope_ms * step.difficulty for step in steps)
            for name, steps in self.steps.items()
        }

    def to_dict(self) -> dict:
        return {
            "text": self.text,
            "space_policy": self.space_policy,
            "radii": list(self.radii),
            "flags": list(self.flags),
            "totals": {name: self.total(name) for name in self.steps},
            "prediction_saving_over_dedicated": (
                self.prediction_saving_over_dedicated()
                if Condition.DEDICATED_AREA.value in self.steps
                and Condition.PRED_NO_MERGE.value in self.steps
                else None
            ),
            "steps": {
                name: [
                    {
                        "kind": step.kind,
                        "word": step.word,
                        "prefix": step.prefix,
                        "target": step.target,
                        "origin": [step.origin[0], step.origin[1]],
                        "amplitude": step.amplitude,
                        "width": step.width,
                        "difficulty": step.difficulty,
                    }
                    for step in steps
                ]
                for name, steps in self.steps.items()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(
            ["condition", "index", "kind", "word", "prefix", "target",
             "origin_x", "origin_y", "amplitude", "width", "difficulty"]
        )
        for name in self.steps:
            for i, step in enumerate(self.steps[name]):
                writer.writerow(
                    [
                        name,
                        i,
                        step.kind,
                        step.word or "",
                        step.prefix,
                        step.target,
                        f"{step.origin[0]:.9f}",
                        f"{step.origin[1]:.9f}",
                        f"{step.amplitude:.9f}",
                        f"{step.width:.9f}",
                        f"{step.difficulty:.9f}",
                    ]
                )
        return out.getvalue()

    def to_svg(self) -> str:
        """Bar chart of total difficulty per condition."""
        totals = [(name, self.total(name)) for name in self.steps]
        width, height, margin = 640, 360, 50
        chart_w = width - 2 * margin
        chart_h = height - 2 * margin
        peak = max(total for _, total in totals) or 1.0
        bar_w = chart_w / max(len(totals), 1)
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            f'<rect width="{width}" height="{height}" fill="white"/>',
            f'<text x="{width / 2:.0f}" y="24" text-anchor="middle" font-size="15" '
            f'font-family="sans-serif">total movement difficulty (bits)</text>',
        ]
        for i, (name, total) in enumerate(totals):
            bar_h = chart_h * total / peak
            x = margin + i * bar_w + bar_w * 0.15
            y = margin + chart_h - bar_h
            parts.append(
                f'<rect x="{x:.1f}" y="{y:.1f}" width="{bar_w * 0.7:.1f}" '
                f'height="{bar_h:.1f}" fill="#4878a8"/>'
            )
            parts.append(
                f'<text x="{x + bar_w * 0.35:.1f}" y="{y - 6:.1f}" text-anchor="middle" '
                f'font-size="12" font-family="sans-serif">{total:.1f}</text>'
            )
            parts.append(
                f'<text x="{x + bar_w * 0.35:.1f}" y="{margin + chart_h + 16:.1f}" '
                f'text-anchor="middle" font-size="10" font-family="sans-serif">{name}</text>'
            )
        parts.append("</svg>")
        return "\n".join(parts)


def analyze(
    text: str,
    model: NgramModel | None = None,
    *,
    radii: tuple[float, float, float] = DEFAULT_RADII,
    letter_order: str | None = None,
    space_policy: str = "free",
    conditions: tuple[Condition, ...] = _CONDITION_ORDER,
) -> FittsReport:
    """Analyze a text under the given conditions and collect a report."""
    if model is None:
        from slicetype.corpus import default_model

        model = default_model()
    if letter_order is None:
        letter_order = model.letter_ranking()
    base_layout = default_layout(radii, letter_order)
    flags = [
        f"space_policy={space_policy}: word boundaries "
        + ("excluded from" if space_policy == "free" else "charged as movements in")
        + " the path"
    ]
    steps: dict[str, list[MovementStep]] = {}
    seen_flags: set[str] = set()
    for condition in conditions:
        condition_steps, condition_flags = plan_path(
            model,
            text,
            condition,
            base_layout=base_layout,
            space_policy=space_policy,
        )
        steps[condition.value] = condition_steps
        for flag in condition_flags:
            if flag not in seen_flags:
                seen_flags.add(flag)
                flags.append(flag)
    return FittsReport(
        text=text.lower(),
        space_policy=space_policy,
        radii=radii,
        flags=flags,
        steps=steps,
    )
