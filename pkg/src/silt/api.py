"""HTTP JSON service for interactive mutation sessions.

Endpoints (all under /api/v1, JSON only, errors as {code, message}):

* POST /sessions {quiver, m, start?} -> new session state
* POST /sessions/{id}/mutate {index, dir} -> updated state + triangle
* POST /sessions/{id}/undo -> previous state
* GET  /sessions/{id} -> state, history, predicted moves
* GET  /instances -> available quiver labels

Sessions live in memory.  Each session serializes its own mutations with a
lock; sessions do not share library objects, so cross-session requests are
independent.
"""

from __future__ import annotations

import threading
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .checks import has_directed_cycle
from .derived import DerivedCategory, StalkSum
from .endo import EndoAlgebra
from .quiver import parse_quiver
from .silting import is_rigid, is_silting_in_window, mutate

_fmt = StalkSum.format_entry

INSTANCES = [
    {"label": "A2", "vertices": 2},
    {"label": "A3:>>", "vertices": 3},
    {"label": "A3:><", "vertices": 3},
    {"label": "A4", "vertices": 4},
    {"label": "D4", "vertices": 4},
]


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class CreateSessionBody(BaseModel):
    quiver: str
    m: int
    start: Optional[str] = None


class MutateBody(BaseModel):
    index: int
    dir: str = "left"


class Session:
    """One interactive exploration: instance, current object, history."""

    def __init__(self, sid: str, d: DerivedCategory, m: int, start: StalkSum):
        self.id = sid
        self.d = d
        self.m = m
        self.start = start
        self.current = start
        self.history: list = []
        self.lock = threading.Lock()

    def validate(self) -> None:
        x = self.current
        if len(x) != self.d.n or not x.is_basic() or not is_rigid(self.d, x):
            raise ApiError(500, "invariant", "session state is not silting")

    def endo_summary(self) -> dict:
        alg = EndoAlgebra.of_sum(self.d, self.current)
        rad = alg.radical_data()
        arrows = [list(row) for row in rad.arrow_counts]
        return {
            "summands": [_fmt(p) for p in alg.summands],
            "dim": alg.dim,
            "cartan": [list(row) for row in alg.cartan()],
            "arrows": arrows,
            "acyclic": not has_directed_cycle(arrows),
        }

    def state_doc(self) -> dict:
        self.validate()
        return {
            "id": self.id,
            "quiver": self.d.quiver.label,
            "m": self.m,
            "object": self.current.pretty(),
            "summands": [{"id": p[0], "shift": p[1], "name": _fmt(p)}
                         for p in self.current],
            "in_window": is_silting_in_window(self.d, self.current, self.m),
            "endo": self.endo_summary(),
            "history_length": len(self.history),
        }

    def history_doc(self) -> list:
        return [{"index": h["index"], "dir": h["dir"],
                 "removed": _fmt(h["removed"]), "added": _fmt(h["added"])}
                for h in self.history]

    def predicted_moves(self) -> list:
        moves = []
        for idx in range(len(self.current)):
            for direction in ("left", "right"):
                entry = {"index": idx, "dir": direction,
                         "summand": _fmt(self.current.entries[idx])}
                try:
                    target, tri = mutate(self.d, self.current, idx, direction)
                except Exception:
                    entry.update(target=None, error="mutation undefined")
                else:
                    entry.update(
                        target=[_fmt(p) for p in target],
                        added=_fmt(tri.added),
                        in_window=is_silting_in_window(self.d, target, self.m))
                moves.append(entry)
        return moves

    def apply(self, index: int, direction: str) -> dict:
        if direction not in ("left", "right"):
            raise ApiError(422, "bad-direction", "dir must be 'left' or 'right'")
        if not 0 <= index < len(self.current):
            raise ApiError(422, "bad-index",
                           f"summand index {index} out of range")
        try:
            target, tri = mutate(self.d, self.current, index, direction)
        except RuntimeError as exc:
            raise ApiError(422, "mutation-failed", str(exc)) from exc
        self.history.append({
            "index": index, "dir": direction, "removed": tri.removed,
            "added": tri.added, "before": self.current,
        })
        self.current = target
        return {
            "direction": tri.direction,
            "left": _fmt(tri.left),
            "mid": [_fmt(p) for p in tri.mid],
            "right": _fmt(tri.right),
            "removed": _fmt(tri.removed),
            "added": _fmt(tri.added),
        }

    def undo(self) -> None:
        if not self.history:
            raise ApiError(422, "empty-history", "nothing to undo")
        self.current = self.history.pop()["before"]


class SessionStore:
    def __init__(self):
        self._lock = threading.Lock()
        self._sessions: dict = {}
        self._next = 1

    def create(self, body: CreateSessionBody) -> Session:
        if body.m < 1:
            raise ApiError(422, "bad-m", "m must be at least 1")
        try:
            q = parse_quiver(body.quiver)
        except ValueError as exc:
            raise ApiError(422, "bad-quiver", str(exc)) from exc
        d = DerivedCategory(q)
        if body.start is None:
            start = StalkSum([(e.id, 0) for e in d.table.projectives()])
        else:
            try:
                start = d.parse_stalk_sum(body.start)
            except (ValueError, KeyError) as exc:
                raise ApiError(422, "bad-start", str(exc)) from exc
            if not is_silting_in_window(d, start, body.m):
                raise ApiError(422, "bad-start",
                               f"{start.pretty()} is not silting in the window")
        with self._lock:
            sid = f"s{self._next}"
            self._next += 1
            session = Session(sid, d, body.m, start)
            self._sessions[sid] = session
        return session

    def get(self, sid: str) -> Session:
        with self._lock:
            session = self._sessions.get(sid)
        if session is None:
            raise ApiError(404, "unknown-session", f"no session {sid!r}")
        return session


def create_app() -> FastAPI:
    app = FastAPI(title="silt explorer api", version="1")
    store = SessionStore()
    app.state.store = store

    @app.exception_handler(ApiError)
    async def on_api_error(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status,
                            content={"code": exc.code, "message": exc.message})

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc):
        return JSONResponse(status_code=422,
                            content={"code": "validation", "message": str(exc)})

    @app.get("/api/v1/instances")
    def instances():
        return {"instances": INSTANCES}

    @app.post("/api/v1/sessions")
    def create_session(body: CreateSessionBody):
        session = store.create(body)
        with session.lock:
            return session.state_doc()

    @app.post("/api/v1/sessions/{sid}/mutate")
    def mutate_session(sid: str, body: MutateBody):
        session = store.get(sid)
        with session.lock:
            triangle = session.apply(body.index, body.dir)
            doc = session.state_doc()
            doc["triangle"] = triangle
            return doc

    @app.post("/api/v1/sessions/{sid}/undo")
    def undo_session(sid: str):
        session = store.get(sid)
        with session.lock:
            session.undo()
            return session.state_doc()

    @app.get("/api/v1/sessions/{sid}")
    def get_session(sid: str):
        session = store.get(sid)
        with session.lock:
            doc = session.state_doc()
            doc["history"] = session.history_doc()
            doc["moves"] = session.predicted_moves()
            return doc

    return app
