"""Closed-loop typing simulation with a jittered pointer.

A simulated user transcribes a text through a real TypingSession: aim at
the key the next pending action needs, emit fixed-rate samples around that
point with isotropic Gaussian jitter, react to the session's commits, and
replan when jitter knocks a dwell out (a lost word-completion hold falls
back to finishing the word letter by letter).  Saccades are instantaneous:
the aim point moves between two consecutive samples.

Jitter amplitude is given as a visual angle and converted to keyboard
units through a simple screen model: the keyboard square spans half the
screen width and is viewed from a fixed distance."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from slicetype.corpus import NgramModel
from slicetype.engine import EventKind, Mode, Phase, TypingSession
from slicetype.fitts import Action, ActionKind, Condition, plan_actions, plan_word_actions
from slicetype.geometry import (
    CORNER_SPACE,
    DEFAULT_RADII,
    CornerKey,
    KeyRegion,
)
from slicetype.merging import adjacency


@dataclass(frozen=True)
class JitterModel:
    """Pointer noise as a visual angle, plus the screen scale that maps it
    to keyboard units (keyboard half-width = a quarter of the screen)."""

    sigma_deg: float = 0.45
    viewing_distance_cm: float = 50.0
    screen_width_cm: float = 46.5
    sample_rate_hz: float = 60.0
    seed: int = 0

    @property
    def keyboard_halfwidth_cm(self) -> float:
        return self.screen_width_cm / 4.0

    @property
    def sigma_norm(self) -> float:
        """Jitter standard deviation in keyboard units ([-1, 1] square)."""
        span_cm = math.tan(math.radians(self.sigma_deg)) * self.viewing_distance_cm
        return span_cm / self.keyboard_halfwidth_cm

    @property
    def frame_ms(self) -> float:
        return 1000.0 / self.sample_rate_hz


@dataclass(frozen=True)
class SimResult:
    transcript: str
    chars: int
    words: int
    elapsed_ms: float
    samples: int
    dwell_resets: int
    wpm: float


@dataclass
class _Pending:
    """The action being executed and how completion is recognized."""

    action: Action
    committed_char: bool = False  # for COMPLETE: letter already committed


def generate_trace(
    segments: list[tuple[float, float, float]],
    jitter: JitterModel,
) -> list[tuple[float, float, float]]:
    """Open-loop trace: hold each (duration_ms, x, y) aim point in turn,
    sampling at the model's rate with Gaussian jitter.  Returns (t_ms, x, y)
    samples with t_ms starting at one frame."""
    rng = np.random.default_rng(jitter.seed)
    sigma = jitter.sigma_norm
    frame = jitter.frame_ms
    samples: list[tuple[float, float, float]] = []
    t = 0.0
    for duration_ms, x, y in segments:
        end = t + duration_ms
        while t + frame <= end + 1e-9:
            t += frame
            dx, dy = rng.normal(0.0, sigma, 2) if sigma > 0.0 else (0.0, 0.0)
            samples.append((t, x + dx, y + dy))
    return samples


def trace_to_csv(samples: list[tuple[float, float, float]]) -> str:
    lines = ["t_ms,x,y"]
    lines += [f"{t:.6f},{x:.9f},{y:.9f}" for t, x, y in samples]
    return "\n".join(lines) + "\n"


def trace_from_csv(text: str) -> list[tuple[float, float, float]]:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0].strip() != "t_ms,x,y":
        raise ValueError("trace CSV must start with header t_ms,x,y")
    out: list[tuple[float, float, float]] = []
    for line in lines[1:]:
        t, x, y = line.split(",")
        out.append((float(t), float(x), float(y)))
    return out


# ---------------------------------------------------------------------------
# closed loop
# ---------------------------------------------------------------------------


class _SimUser:
    """Action cursor over a planned text with jitter-aware replanning."""

    def __init__(self, model: NgramModel, text: str, condition: Condition) -> None:
        if condition is Condition.DEDICATED_AREA:
            raise ValueError(
                "the dedicated-area condition is an analysis model only; "
                "the session has no dedicated selection area to simulate"
            )
        self.model = model
        self.condition = condition
        self.words = text.lower().split()
        self.queue: list[Action] = plan_actions(model, text, condition)
        self.index = 0

    def current(self) -> Action | None:
        return self.queue[self.index] if self.index < len(self.queue) else None

    def advance(self) -> None:
        self.index += 1

    def replan_word_tail(self, word: str, prefix: str, prev_word: str | None, last_letter: str) -> None:
        """Replace the rest of the current word's actions after a lost
        completion hold: the letter is already committed, finish from the
        session's actual prefix."""
        while self.index < len(self.queue):
            action = self.queue[self.index]
            boundary = action.prefix == "" and action.kind in (
                ActionKind.LETTER,
                ActionKind.COMPLETE,
                ActionKind.NUDGE,
            )
            if boundary and action.prev_word == word:
                break  # next word's actions start here
            if action.kind is ActionKind.SPACE and action.prev_word != prev_word:
                break
            self.queue.pop(self.index)
        if prefix == word:
            tail: list[Action] = [
                Action(ActionKind.SPACE, prefix=word, prev_word=prev_word)
            ]
        else:
            tail, completed = plan_word_actions(
                self.model,
                word,
                prev_word,
                prediction=self.condition.uses_prediction,
                start_prefix=prefix,
                last_letter=last_letter,
            )
            if not completed:
                tail = tail + [Action(ActionKind.SPACE, prefix=word, prev_word=prev_word)]
        self.queue[self.index : self.index] = tail


def simulate_typing(
    text: str,
    model: NgramModel | None = None,
    *,
    condition: Condition = Condition.PRED_MERGE,
    jitter: JitterModel = JitterModel(),
    dwell_ms: float = 1000.0,
    radii: tuple[float, float, float] = DEFAULT_RADII,
    timeout_s_per_char: float = 30.0,
) -> SimResult:
    """Transcribe a text through a TypingSession with jittered pointing and
    return timing and accuracy figures.  Deterministic for a given seed."""
    if model is None:
        from slicetype.corpus import default_model

        model = default_model()
    mode = Mode.MERGING if condition.uses_merging else Mode.NON_MERGING
    session = TypingSession(
        model,
        dwell_ms=dwell_ms,
        radii=radii,
        mode=mode,
        learn=False,  # a simulated transcription must not retrain the model
    )
    user = _SimUser(model, text, condition)
    if not user.words:
        return SimResult("", 0, 0, 0.0, 0, 0, 0.0)
    neighbor = adjacency(session._base)
    rng = np.random.default_rng(jitter.seed)
    sigma = jitter.sigma_norm
    frame = jitter.frame_ms

    target_text = " ".join(user.words) + " "
    deadline_ms = timeout_s_per_char * 1000.0 * max(len(target_text), 1)

    t = 0.0
    samples = 0
    resets = 0
    elapsed_ms = 0.0
    pending: _Pending | None = None
    last_committed_letter: str | None = None

    while True:
        action = user.current()
        if action is None:
            break
        if pending is None or pending.action is not action:
            pending = _Pending(action)
        aim = _aim_point(session, neighbor, action)

        t += frame
        samples += 1
        if t > deadline_ms:
            raise TimeoutError(
                f"simulation stalled: {t:.0f} ms for {len(session.buffer)} chars "
                f"(condition {user.condition.value}, sigma {jitter.sigma_deg} deg)"
            )
        if sigma > 0.0:
            noise = rng.normal(0.0, sigma, 2)
            x, y = aim[0] + noise[0], aim[1] + noise[1]
        else:
            x, y = aim

        phase_before = session.phase
        key_before = session.dwell_key
        events = session.feed_sample(t, x, y)

        commit_kinds = {
            event.kind
            for event in events
            if event.kind
            in (
                EventKind.CHAR_COMMITTED,
                EventKind.WORD_COMMITTED,
                EventKind.SPACE_COMMITTED,
            )
        }
        if commit_kinds:
            elapsed_ms = t

        # a dwell the user was actively holding fell apart
        aimed_key = _aimed_key_id(action)
        if (
            not commit_kinds
            and aimed_key is not None
            and phase_before in (Phase.FIRST_DWELL, Phase.SECOND_DWELL)
            and key_before == aimed_key
            and session.phase in (Phase.IDLE, Phase.FIRST_DWELL)
            and session.dwell_key != key_before
        ):
            resets += 1
            if pending.action.kind is ActionKind.COMPLETE and pending.committed_char:
                # the completion hold is gone; finish the word letter by letter
                word = pending.action.word
                user.replan_word_tail(
                    word, session.prefix, pending.action.prev_word, last_committed_letter
                )
                pending = None
                continue

        for event in events:
            if event.kind is EventKind.CHAR_COMMITTED:
                last_committed_letter = event.text
                if action.kind is ActionKind.LETTER:
                    user.advance()
                    pending = None
                elif action.kind is ActionKind.COMPLETE:
                    pending.committed_char = True
            elif event.kind is EventKind.WORD_COMMITTED:
                if action.kind is ActionKind.COMPLETE:
                    user.advance()
                    pending = None
                    last_committed_letter = None
            elif event.kind is EventKind.SPACE_COMMITTED:
                if action.kind is ActionKind.SPACE:
                    user.advance()
                    pending = None
                    last_committed_letter = None

        if action.kind is ActionKind.NUDGE and session.dwell_key != action.letter:
            # contact with the repeated key is broken; re-enter it next
            user.advance()
            pending = None

    transcript = session.transcribe()
    if transcript != target_text:
        raise RuntimeError(
            f"simulated transcript diverged: {transcript!r} != {target_text!r}"
        )
    minutes = elapsed_ms / 60000.0
    chars = len(transcript)
    return SimResult(
        transcript=transcript,
        chars=chars,
        words=len(user.words),
        elapsed_ms=elapsed_ms,
        samples=samples,
        dwell_resets=resets,
        wpm=(chars / 5.0) / minutes if minutes > 0.0 else 0.0,
    )


def _aimed_key_id(action: Action) -> str | None:
    if action.kind in (ActionKind.LETTER, ActionKind.COMPLETE):
        return action.letter
    if action.kind is ActionKind.SPACE:
        return CORNER_SPACE
    return None


def _aim_point(
    session: TypingSession, neighbor: dict[str, list[str]], action: Action
) -> tuple[float, float]:
    layout = session.layout
    if action.kind in (ActionKind.LETTER, ActionKind.COMPLETE):
        key = layout.key_for(action.letter)
        if key is None:
            raise RuntimeError(
                f"letter {action.letter!r} has no key in the current layout "
                f"(prefix {session.prefix!r})"
            )
        return key.center
    if action.kind is ActionKind.SPACE:
        return layout.corner_for(CORNER_SPACE).center
    if action.kind is ActionKind.NUDGE:
        for candidate in neighbor[action.letter]:
            found = layout.key_for(candidate)
            if found is not None:
                return found.center
        for key in layout.keys:
            if key.letter != action.letter:
                return key.center
        return layout.corner_for(CORNER_SPACE).center
    raise AssertionError(action.kind)
