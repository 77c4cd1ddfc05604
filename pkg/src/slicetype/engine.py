"""Dwell-driven typing session.

Selection is a two-phase dwell.  Holding a letter key for the dwell period
commits the letter; if a completion is proposed for the grown prefix,
continuing to hold for one more period commits the whole proposed word
(with a trailing space).  Leaving a key at any point before a period
elapses resets that dwell with no effect.  Corner keys commit their action
after a single period and then stay inert until the pointer exits.

Dwell time is integrated sample-and-hold: the span between two samples is
attributed to the key the earlier sample landed in, so a period that
elapses between samples commits at its credited time (entry + period),
not at the observing sample's time.

After a commit the layout is recomputed immediately, but the committed
letter is forced to survive the recomputed merge so its key stays under
the pointer; that pin drops as soon as the pointer leaves the key.  A
continuing dwell is contained by its key's shape in the live layout, so
area the key loses in the recompute (a neighbor reborn by the new prefix)
stops counting as holding the dwell."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from slicetype.corpus import NgramModel, Prediction
from slicetype.geometry import (
    DEFAULT_RADII,
    CORNER_DELETE,
    CORNER_MODE,
    CORNER_SPACE,
    CornerKey,
    KeyRegion,
    LayoutState,
    default_layout,
    hit_test,
)
from slicetype.merging import plan_merge

_EPS = 1e-9


class Mode(Enum):
    MERGING = "merging"
    NON_MERGING = "non_merging"


class Phase(Enum):
    IDLE = "idle"
    FIRST_DWELL = "first_dwell"
    SECOND_DWELL = "second_dwell"
    MUST_EXIT = "must_exit"


class EventKind(Enum):
    KEY_ENTER = "key_enter"
    DWELL_PROGRESS = "dwell_progress"
    CHAR_COMMITTED = "char_committed"
    WORD_COMMITTED = "word_committed"
    SPACE_COMMITTED = "space_committed"
    DELETE_COMMITTED = "delete_committed"
    LAYOUT_CHANGED = "layout_changed"
    BUFFER_CHANGED = "buffer_changed"


@dataclass(frozen=True)
class SessionEvent:
    kind: EventKind
    key: str | None = None
    phase: str | None = None  # "first" or "second" for dwell events
    fraction: float | None = None
    text: str | None = None
    word: str | None = None
    layout: LayoutState | None = None


class TypingSession:
    """One user's typing state: transcript buffer, current layout, and the
    dwell state machine.  feed_sample() is the only clock input."""

    def __init__(
        self,
        model: NgramModel,
        *,
        dwell_ms: float = 1000.0,
        radii: tuple[float, float, float] = DEFAULT_RADII,
        letter_order: str | None = None,
        mode: Mode = Mode.MERGING,
        learn: bool = True,
    ) -> None:
        if dwell_ms <= 0.0:
            raise ValueError(f"dwell_ms must be positive, got {dwell_ms}")
        self._model = model
        self._dwell_ms = float(dwell_ms)
        self._mode = mode
        self._learn = learn
        self._buffer = ""
        if letter_order is None:
            letter_order = model.letter_ranking()
        self._base = default_layout(radii, letter_order)
        self._layout = self._merged_layout(keep=None)
        self._phase = Phase.IDLE
        self._dwell_region: KeyRegion | CornerKey | None = None
        self._enter_t: float | None = None
        self._proposal: Prediction | None = None
        self._pinned = False
        self._last_t: float | None = None

    # -- read access ----------------------------------------------------

    @property
    def buffer(self) -> str:
        return self._buffer

    @property
    def prefix(self) -> str:
        """The word in progress: everything after the last space."""
        return self._buffer.rsplit(" ", 1)[-1]

    @property
    def prev_word(self) -> str | None:
        """The committed word preceding the word in progress."""
        tokens = self._buffer.split()
        if self.prefix:
            return tokens[-2] if len(tokens) >= 2 else None
        return tokens[-1] if tokens else None

    @property
    def layout(self) -> LayoutState:
        return self._layout

    @property
    def mode(self) -> Mode:
        return self._mode

    @property
    def phase(self) -> Phase:
        return self._phase

    @property
    def dwell_key(self) -> str | None:
        return None if self._dwell_region is None else self._dwell_region.key_id

    @property
    def dwell_ms(self) -> float:
        return self._dwell_ms

    @property
    def proposal(self) -> Prediction | None:
        return self._proposal

    def transcribe(self) -> str:
        return self._buffer

    # -- configuration ----------------------------------------------------

    def set_dwell_ms(self, dwell_ms: float) -> None:
        if dwell_ms <= 0.0:
            raise ValueError(f"dwell_ms must be positive, got {dwell_ms}")
        self._dwell_ms = float(dwell_ms)

    def set_mode(self, mode: Mode) -> list[SessionEvent]:
        if mode is self._mode:
            return []
        self._mode = mode
        # always announce: the layout event carries the mode flag, and the
        # geometry can be identical across modes (e.g. with an empty prefix)
        return self._relayout(keep=None, force_event=True)

    def reset(self) -> list[SessionEvent]:
        self._buffer = ""
        self._phase = Phase.IDLE
        self._dwell_region = None
        self._enter_t = None
        self._proposal = None
        self._pinned = False
        events = [SessionEvent(EventKind.BUFFER_CHANGED, text=self._buffer)]
        events += self._relayout(keep=None, force_event=True)
        return events

    def set_buffer(self, text: str) -> list[SessionEvent]:
        """Replace the transcript (restores a session, e.g. across a model
        swap) and rebuild the layout for the new prefix.  Idle only."""
        if self._phase is not Phase.IDLE:
            raise RuntimeError("buffer can only be replaced while idle")
        if not set(text) <= set("abcdefghijklmnopqrstuvwxyz "):
            raise ValueError("buffer may contain only a-z and spaces")
        self._buffer = text
        events = [SessionEvent(EventKind.BUFFER_CHANGED, text=self._buffer)]
        events += self._relayout(keep=None, force_event=True)
        return events

    # -- the clock input --------------------------------------------------

    def feed_sample(self, t_ms: float, x: float, y: float) -> list[SessionEvent]:
        """Advance the session to time t_ms with the pointer at (x, y) and
        return the events this sample produced.  Timestamps must be
        strictly increasing."""
        if self._last_t is not None and t_ms <= self._last_t:
            raise ValueError(
                f"non-monotonic sample time {t_ms} after {self._last_t}"
            )
        self._last_t = t_ms

        events: list[SessionEvent] = []
        committed = False

        # dwell periods completed since the previous sample (the pointer is
        # held on the key for the whole inter-sample span); a letter commit
        # can chain straight into a completed word commit
        while (
            self._phase in (Phase.FIRST_DWELL, Phase.SECOND_DWELL)
            and t_ms - self._enter_t >= self._dwell_ms - _EPS
        ):
            committed = True
            if self._phase is Phase.FIRST_DWELL:
                events += self._complete_first_dwell()
            else:
                events += self._complete_second_dwell()
            if self._phase is Phase.MUST_EXIT:
                break

        # Containment tracks the dwell key's shape in the live layout: after
        # a commit recomputes the merge, area the key lost (a neighbor key
        # reborn by the longer prefix) must stop holding the dwell.
        inside = False
        if self._dwell_region is not None:
            live = hit_test(self._layout, (x, y))
            if live is not None and live.key_id == self._dwell_region.key_id:
                self._dwell_region = live
                inside = True

        if self._phase in (Phase.FIRST_DWELL, Phase.SECOND_DWELL):
            if inside:
                if not committed:
                    phase = "first" if self._phase is Phase.FIRST_DWELL else "second"
                    events.append(
                        SessionEvent(
                            EventKind.DWELL_PROGRESS,
                            key=self._dwell_region.key_id,
                            phase=phase,
                            fraction=(t_ms - self._enter_t) / self._dwell_ms,
                            word=None if self._proposal is None else self._proposal.word,
                        )
                    )
            else:
                events += self._abandon_dwell()
        elif self._phase is Phase.MUST_EXIT and not inside:
            events += self._abandon_dwell()

        if self._phase is Phase.IDLE:
            events += self._maybe_enter(t_ms, x, y)
        return events

    # -- state transitions ------------------------------------------------

    def _maybe_enter(self, t_ms: float, x: float, y: float) -> list[SessionEvent]:
        region = hit_test(self._layout, (x, y))
        if region is None or not region.selectable:
            return []
        self._dwell_region = region
        self._enter_t = t_ms
        self._phase = Phase.FIRST_DWELL
        if isinstance(region, KeyRegion):
            self._proposal = self._model.predict(
                self.prev_word, self.prefix + region.letter
            )
        else:
            self._proposal = None
        return [
            SessionEvent(
                EventKind.KEY_ENTER,
                key=region.key_id,
                phase="first",
                fraction=0.0,
                word=None if self._proposal is None else self._proposal.word,
            )
        ]

    def _complete_first_dwell(self) -> list[SessionEvent]:
        credited = self._enter_t + self._dwell_ms
        region = self._dwell_region
        if isinstance(region, CornerKey):
            events = self._corner_action(region)
            self._phase = Phase.MUST_EXIT
            self._proposal = None
            return events

        letter = region.letter
        self._buffer += letter
        events = [
            SessionEvent(EventKind.CHAR_COMMITTED, key=letter, text=letter),
            SessionEvent(EventKind.BUFFER_CHANGED, text=self._buffer),
        ]
        # keep the dwelt key visible in the recomputed layout
        events += self._relayout(keep=letter, force_event=True)
        self._pinned = True
        self._proposal = self._model.predict(self.prev_word, self.prefix)
        if self._proposal is not None:
            self._phase = Phase.SECOND_DWELL
            self._enter_t = credited
        else:
            self._phase = Phase.MUST_EXIT
        return events

    def _complete_second_dwell(self) -> list[SessionEvent]:
        word = self._proposal.word
        suffix = word[len(self.prefix) :]
        self._buffer += suffix + " "
        events = [
            SessionEvent(EventKind.WORD_COMMITTED, key=self._dwell_region.key_id, word=word, text=word),
            SessionEvent(EventKind.BUFFER_CHANGED, text=self._buffer),
        ]
        if self._mode is Mode.NON_MERGING and self._learn:
            self._model.learn_word(word)
        self._pinned = False
        events += self._relayout(keep=None, force_event=True)
        self._phase = Phase.MUST_EXIT
        self._proposal = None
        return events

    def _corner_action(self, corner: CornerKey) -> list[SessionEvent]:
        if corner.corner_id == CORNER_SPACE:
            closed = self.prefix
            self._buffer += " "
            events = [
                SessionEvent(EventKind.SPACE_COMMITTED, key=corner.corner_id, text=" "),
                SessionEvent(EventKind.BUFFER_CHANGED, text=self._buffer),
            ]
            if closed and self._mode is Mode.NON_MERGING and self._learn:
                self._model.learn_word(closed)
            events += self._relayout(keep=None, force_event=True)
            return events
        if corner.corner_id == CORNER_DELETE:
            if not self._buffer:
                return [SessionEvent(EventKind.DELETE_COMMITTED, key=corner.corner_id, text="")]
            removed = self._buffer[-1]
            self._buffer = self._buffer[:-1]
            events = [
                SessionEvent(EventKind.DELETE_COMMITTED, key=corner.corner_id, text=removed),
                SessionEvent(EventKind.BUFFER_CHANGED, text=self._buffer),
            ]
            events += self._relayout(keep=None, force_event=True)
            return events
        if corner.corner_id == CORNER_MODE:
            self._mode = (
                Mode.NON_MERGING if self._mode is Mode.MERGING else Mode.MERGING
            )
            return self._relayout(keep=None, force_event=True)
        raise AssertionError(f"unexpected corner {corner.corner_id!r}")

    def _abandon_dwell(self) -> list[SessionEvent]:
        self._phase = Phase.IDLE
        self._dwell_region = None
        self._enter_t = None
        self._proposal = None
        events: list[SessionEvent] = []
        if self._pinned:
            self._pinned = False
            events += self._relayout(keep=None)
        return events

    # -- layout management --------------------------------------------------

    def _merged_layout(self, keep: str | None) -> LayoutState:
        plan = plan_merge(
            self._model,
            self._base,
            self.prev_word,
            self.prefix,
            enabled=self._mode is Mode.MERGING,
            keep=keep,
        )
        return plan.layout

    def _relayout(self, keep: str | None, force_event: bool = False) -> list[SessionEvent]:
        new_layout = self._merged_layout(keep)
        if not force_event and new_layout == self._layout:
            self._layout = new_layout
            return []
        self._layout = new_layout
        return [SessionEvent(EventKind.LAYOUT_CHANGED, layout=new_layout)]
