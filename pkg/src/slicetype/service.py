"""Live typing sessions behind a JSON message protocol.

SessionHandler is transport-agnostic: feed it decoded JSON objects and it
returns the JSON objects to send back, in engine-event order.  run_server
wraps one handler per websocket connection (one JSON object per message,
newline-terminated) and can also serve a directory of static files so a
browser client and its socket share a port.

Client to server:  {"type": "pointer", "t_ms": .., "x": .., "y": ..}
                   {"type": "config", "dwell_ms"?, "mode"?, "corpus_id"?}
                   {"type": "reset"}
Server to client:  {"type": "layout", "mode", "prefix", "radii", "keys", "corners"}
                   {"type": "dwell", "letter", "phase", "fraction", "word"}
                   {"type": "commit", "kind", "text"}
                   {"type": "buffer", "text"}
                   {"type": "error", "code", "detail"}

A malformed message yields an error message and leaves the session alive.
Config changes wait until the session is idle so they never interrupt a
dwell in progress."""

from __future__ import annotations

import asyncio
import functools
import json
import math
from http import HTTPStatus
from pathlib import Path
from typing import Mapping

from slicetype.corpus import NgramModel, default_model
from slicetype.engine import EventKind, Mode, SessionEvent, TypingSession
from slicetype.geometry import DEFAULT_RADII, layout_to_dict

# Dwell-progress messages are throttled to this many per second per key
# (measured in sample time); enter and phase-change messages always pass.
DWELL_RATE_LIMIT_HZ = 30.0

_COMMIT_KINDS = {
    EventKind.CHAR_COMMITTED: "char",
    EventKind.WORD_COMMITTED: "word",
    EventKind.SPACE_COMMITTED: "space",
    EventKind.DELETE_COMMITTED: "delete",
}

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
}


# -- one session, transport-agnostic ---------------------------------------


class SessionHandler:
    """Owns one TypingSession and translates between wire messages and
    engine calls.  handle() never raises on bad input: it answers with an
    error message instead."""

    def __init__(
        self,
        corpora: Mapping[str, NgramModel] | None = None,
        *,
        corpus_id: str = "default",
        dwell_ms: float = 1000.0,
        mode: Mode = Mode.MERGING,
        learn: bool = True,
        radii: tuple[float, float, float] = DEFAULT_RADII,
    ) -> None:
        self._corpora = dict(corpora) if corpora is not None else {"default": default_model()}
        if corpus_id not in self._corpora:
            raise ValueError(f"unknown corpus_id {corpus_id!r}")
        self._corpus_id = corpus_id
        self._radii = radii
        self._learn = learn
        self._session = TypingSession(
            self._corpora[corpus_id], dwell_ms=dwell_ms, radii=radii, mode=mode, learn=learn
        )
        self._pending_config: dict = {}
        self._last_dwell_sent: dict[str, tuple[float, str]] = {}
        self._now_ms: float = 0.0

    # -- introspection ----------------------------------------------------

    @property
    def session(self) -> TypingSession:
        return self._session

    @property
    def corpus_id(self) -> str:
        return self._corpus_id

    def hello(self) -> list[dict]:
        """Messages a client needs to render from scratch."""
        return [self._layout_message(self._session.layout), self._buffer_message()]

    # -- message handling --------------------------------------------------

    def handle_raw(self, raw: str) -> list[dict]:
        try:
            message = json.loads(raw)
        except ValueError:
            return [_error("bad_json", "message is not valid JSON")]
        if not isinstance(message, dict):
            return [_error("bad_json", "message must be a JSON object")]
        return self.handle(message)

    def handle(self, message: dict) -> list[dict]:
        kind = message.get("type")
        if kind == "pointer":
            return self._handle_pointer(message)
        if kind == "config":
            return self._handle_config(message)
        if kind == "reset":
            return self._handle_reset()
        return [_error("bad_type", f"unknown message type {kind!r}")]

    def _handle_pointer(self, message: dict) -> list[dict]:
        try:
            t_ms = _finite_number(message, "t_ms")
            x = _finite_number(message, "x")
            y = _finite_number(message, "y")
        except ValueError as exc:
            return [_error("bad_field", str(exc))]
        try:
            events = self._session.feed_sample(t_ms, x, y)
        except ValueError as exc:
            return [_error("non_monotonic", str(exc))]
        self._now_ms = t_ms
        out = self._messages(events)
        out += self._apply_pending_config()
        return out

    def _handle_config(self, message: dict) -> list[dict]:
        unknown = set(message) - {"type", "dwell_ms", "mode", "corpus_id"}
        if unknown:
            return [_error("bad_field", f"unknown config field {sorted(unknown)[0]!r}")]
        staged: dict = {}
        if "dwell_ms" in message:
            value = message["dwell_ms"]
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                return [_error("bad_field", "dwell_ms must be a number")]
            if not math.isfinite(value) or value <= 0:
                return [_error("bad_field", f"dwell_ms must be positive, got {value}")]
            staged["dwell_ms"] = float(value)
        if "mode" in message:
            try:
                staged["mode"] = Mode(message["mode"])
            except ValueError:
                return [_error("bad_field", f"mode must be one of {[m.value for m in Mode]}")]
        if "corpus_id" in message:
            value = message["corpus_id"]
            if value not in self._corpora:
                return [_error("bad_field", f"unknown corpus_id {value!r}")]
            staged["corpus_id"] = value
        self._pending_config.update(staged)
        return self._apply_pending_config()

    def _handle_reset(self) -> list[dict]:
        events = self._session.reset()
        self._last_dwell_sent.clear()
        out = self._messages(events)
        out += self._apply_pending_config()
        return out

    # -- config application (idle only) -------------------------------------

    def _apply_pending_config(self) -> list[dict]:
        if not self._pending_config or self._session.phase.value != "idle":
            return []
        staged, self._pending_config = self._pending_config, {}
        events: list[SessionEvent] = []
        if "corpus_id" in staged and staged["corpus_id"] != self._corpus_id:
            events += self._swap_corpus(staged["corpus_id"])
        if "mode" in staged:
            events += self._session.set_mode(staged["mode"])
        if "dwell_ms" in staged:
            self._session.set_dwell_ms(staged["dwell_ms"])
        return self._messages(events)

    def _swap_corpus(self, corpus_id: str) -> list[SessionEvent]:
        old = self._session
        replacement = TypingSession(
            self._corpora[corpus_id],
            dwell_ms=old.dwell_ms,
            radii=self._radii,
            mode=old.mode,
            learn=self._learn,
        )
        events = replacement.set_buffer(old.buffer)
        self._session = replacement
        self._corpus_id = corpus_id
        self._last_dwell_sent.clear()
        return events

    # -- event serialization -------------------------------------------------

    def _messages(self, events: list[SessionEvent]) -> list[dict]:
        out: list[dict] = []
        for event in events:
            if event.kind is EventKind.KEY_ENTER:
                self._last_dwell_sent[event.key] = (self._now_ms, event.phase)
                out.append(self._dwell_message(event))
            elif event.kind is EventKind.DWELL_PROGRESS:
                if self._dwell_send_allowed(event):
                    self._last_dwell_sent[event.key] = (self._now_ms, event.phase)
                    out.append(self._dwell_message(event))
            elif event.kind in _COMMIT_KINDS:
                out.append(
                    {"type": "commit", "kind": _COMMIT_KINDS[event.kind], "text": event.text}
                )
            elif event.kind is EventKind.LAYOUT_CHANGED:
                out.append(self._layout_message(event.layout))
            elif event.kind is EventKind.BUFFER_CHANGED:
                out.append({"type": "buffer", "text": event.text})
        return out

    def _dwell_send_allowed(self, event: SessionEvent) -> bool:
        last = self._last_dwell_sent.get(event.key)
        if last is None or last[1] != event.phase:
            return True
        return self._now_ms - last[0] >= 1000.0 / DWELL_RATE_LIMIT_HZ - 1e-9

    def _dwell_message(self, event: SessionEvent) -> dict:
        return {
            "type": "dwell",
            "letter": event.key,
            "phase": event.phase,
            "fraction": event.fraction,
            "word": event.word,
        }

    def _layout_message(self, layout) -> dict:
        message = {"type": "layout", "mode": self._session.mode.value}
        message.update(layout_to_dict(layout))
        return message

    def _buffer_message(self) -> dict:
        return {"type": "buffer", "text": self._session.buffer}


def _error(code: str, detail: str) -> dict:
    return {"type": "error", "code": code, "detail": detail}


def _finite_number(message: dict, field: str):
    value = message.get(field)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"{field} must be a number")
    if not math.isfinite(value):
        raise ValueError(f"{field} must be finite")
    return float(value)


# -- websocket server --------------------------------------------------------


async def _serve_connection(websocket, *, corpora, dwell_ms, mode) -> None:
    handler = SessionHandler(corpora, dwell_ms=dwell_ms, mode=mode)
    for message in handler.hello():
        await websocket.send(json.dumps(message) + "\n")
    async for raw in websocket:
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8", errors="replace")
        for message in handler.handle_raw(raw):
            await websocket.send(json.dumps(message) + "\n")


def _static_response(connection, request, static_dir: Path):
    # Let websocket handshakes through; answer plain GETs with files.
    if "upgrade" in request.headers.get("Connection", "").lower():
        return None
    path = request.path.split("?", 1)[0]
    if path == "/":
        path = "/index.html"
    root = static_dir.resolve()
    target = (root / path.lstrip("/")).resolve()
    if not target.is_relative_to(root) or not target.is_file():
        return connection.respond(HTTPStatus.NOT_FOUND, "not found\n")
    body = target.read_bytes()
    response = connection.respond(HTTPStatus.OK, "")
    response.body = body
    # Headers is a multidict: drop the respond() defaults before setting.
    del response.headers["Content-Type"]
    del response.headers["Content-Length"]
    response.headers["Content-Type"] = _CONTENT_TYPES.get(
        target.suffix, "application/octet-stream"
    )
    response.headers["Content-Length"] = str(len(body))
    return response


async def run_server(
    host: str = "127.0.0.1",
    port: int = 8080,
    *,
    corpora: Mapping[str, NgramModel] | None = None,
    static_dir: str | Path | None = None,
    dwell_ms: float = 1000.0,
    mode: Mode = Mode.MERGING,
    ready: "asyncio.Event | None" = None,
) -> None:
    """Serve one typing session per websocket connection until cancelled.
    With static_dir, plain HTTP GETs on the same port serve that directory."""
    from websockets.asyncio.server import serve

    if corpora is None:
        corpora = {"default": default_model()}
    process_request = None
    if static_dir is not None:
        process_request = functools.partial(_static_response, static_dir=Path(static_dir))
    connection = functools.partial(
        _serve_connection, corpora=corpora, dwell_ms=dwell_ms, mode=mode
    )
    async with serve(connection, host, port, process_request=process_request) as server:
        if ready is not None:
            ready.set()
        await server.serve_forever()


def serve_forever(host: str = "127.0.0.1", port: int = 8080, **kwargs) -> None:
    """Blocking wrapper around run_server."""
    try:
        asyncio.run(run_server(host, port, **kwargs))
    except KeyboardInterrupt:
        pass
