"""HTTP/JSON game service: human-vs-engine sessions over the solve table.

Sessions are in-memory with idle expiry. The engine answers every human
ply with the head of the ranked move list, so from a drawn root it never
loses; a third occurrence of the same canonical position with the same
player to move adjudicates a draw (live play has to terminate even though
the solver itself needs no repetition rule). An optional append-only log
file records every session event as one JSON line for replay/debugging.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from collections import Counter
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from .board import BoardSpec, grid_mapping
from .errors import ParameterError
from .position import (
    Move,
    Position,
    apply_move,
    canonicalize,
    initial_position,
    legal_moves,
    to_notation,
    winner,
    phase,
)
from .solver import GameValue, SolveTable, best_moves
from .tableio import load_or_solve

ONGOING = "ongoing"
DRAWN_BY_REPETITION = "drawn-by-repetition"
REPETITION_LIMIT = 3
DEFAULT_SESSION_TTL = 3600.0


def won_by(player: str) -> str:
    return f"won-by-{player}"


# ---------------------------------------------------------------------------
# Request / response models
# ---------------------------------------------------------------------------

class CreateSessionRequest(BaseModel):
    k: int = 3
    s: int = 4
    human: str = Field("x", pattern="^[xo]$")


class MoveBody(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    type: str = Field(pattern="^(place|slide)$")
    from_: int | None = Field(None, alias="from")
    to: int


class PlayMoveRequest(BaseModel):
    move: MoveBody


class MoveDoc(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    type: str
    from_: int | None = Field(None, alias="from")
    to: int
    from_grid: tuple[int, int] | None = None
    to_grid: tuple[int, int] | None = None


class ValueDoc(BaseModel):
    kind: str
    depth: int | None = None


class AnnotatedMove(BaseModel):
    move: MoveDoc
    value: ValueDoc


class PlyDoc(BaseModel):
    player: str
    move: MoveDoc
    notation_after: str


class StateDoc(BaseModel):
    id: str
    k: int
    s: int
    human: str
    engine: str
    notation: str
    phase: str
    mover: str
    status: str
    winner: str | None
    history: list[PlyDoc]
    grid: list[tuple[int, int]] | None = None


class PlayResponse(BaseModel):
    plies: list[PlyDoc]
    state: StateDoc


class MovesResponse(BaseModel):
    moves: list[AnnotatedMove]


# ---------------------------------------------------------------------------
# Sessions
# ---------------------------------------------------------------------------

@dataclass
class Session:
    id: str
    spec: BoardSpec
    table: SolveTable
    human: str
    position: Position
    history: list[PlyDoc] = field(default_factory=list)
    repetitions: Counter = field(default_factory=Counter)
    status: str = ONGOING
    lock: threading.Lock = field(default_factory=threading.Lock)
    touched: float = field(default_factory=time.monotonic)

    @property
    def engine(self) -> str:
        return "o" if self.human == "x" else "x"

    def record_occurrence(self) -> None:
        canonical, _ = canonicalize(self.spec, self.position)
        key = to_notation(canonical)
        self.repetitions[key] += 1
        if self.status == ONGOING and self.repetitions[key] >= REPETITION_LIMIT:
            self.status = DRAWN_BY_REPETITION

    def refresh_status(self) -> None:
        champion = winner(self.spec, self.position)
        if champion is not None:
            self.status = won_by(champion)


class TableCache:
    """Process-wide (k, s) -> SolveTable cache, solved on first use.

    With a cache directory, tables round-trip through the solve-table
    files so restarts skip the solve.
    """

    def __init__(self, cache_dir: str | None = None):
        self.cache_dir = cache_dir
        self._tables: dict[tuple[int, int], SolveTable] = {}
        self._lock = threading.Lock()

    def get(self, k: int, s: int) -> tuple[BoardSpec, SolveTable]:
        with self._lock:
            if (k, s) not in self._tables:
                self._tables[(k, s)] = load_or_solve(k, s, self.cache_dir)
            table = self._tables[(k, s)]
            return table.spec, table


class SessionStore:
    def __init__(self, ttl: float):
        self.ttl = ttl
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def add(self, session: Session) -> None:
        with self._lock:
            self._purge()
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        with self._lock:
            self._purge()
            session = self._sessions.get(session_id)
            if session is None:
                raise HTTPException(status_code=404, detail=f"unknown session {session_id}")
            session.touched = time.monotonic()
            return session

    def _purge(self) -> None:
        now = time.monotonic()
        stale = [sid for sid, s in self._sessions.items() if now - s.touched > self.ttl]
        for sid in stale:
            del self._sessions[sid]


# ---------------------------------------------------------------------------
# Documents
# ---------------------------------------------------------------------------

def _move_doc(spec: BoardSpec, move: Move) -> MoveDoc:
    grid = grid_mapping(spec) if spec.s == 4 else None
    return MoveDoc(
        type="place" if move.is_place else "slide",
        from_=move.src,
        to=move.dst,
        from_grid=None if (grid is None or move.src is None) else grid[move.src],
        to_grid=None if grid is None else grid[move.dst],
    )


def _value_doc(value: GameValue) -> ValueDoc:
    return ValueDoc(kind=value.kind, depth=value.depth)


def _state_doc(session: Session) -> StateDoc:
    spec = session.spec
    grid = None
    if spec.s == 4:
        mapping = grid_mapping(spec)
        grid = [mapping[i] for i in range(spec.node_count)]
    return StateDoc(
        id=session.id,
        k=spec.k,
        s=spec.s,
        human=session.human,
        engine=session.engine,
        notation=to_notation(session.position),
        phase=phase(spec, session.position),
        mover=session.position.to_move,
        status=session.status,
        winner=winner(spec, session.position),
        history=list(session.history),
        grid=grid,
    )


def _parse_move(session: Session, body: MoveBody) -> Move:
    n = session.spec.node_count
    if not 0 <= body.to < n:
        raise HTTPException(status_code=400, detail=f"node {body.to} out of range")
    if body.type == "place":
        if body.from_ is not None:
            raise HTTPException(status_code=400, detail="a placement has no source node")
        return Move.place(body.to)
    if body.from_ is None or not 0 <= body.from_ < n:
        raise HTTPException(status_code=400, detail="a slide needs a source node in range")
    return Move.slide(body.from_, body.to)


def _play_ply(session: Session, move: Move) -> PlyDoc:
    """Apply one legal ply, update history, repetitions, and status."""
    player = session.position.to_move
    session.position = apply_move(session.spec, session.position, move)
    session.refresh_status()
    session.record_occurrence()
    ply = PlyDoc(
        player=player,
        move=_move_doc(session.spec, move),
        notation_after=to_notation(session.position),
    )
    session.history.append(ply)
    return ply


def _engine_reply(session: Session) -> PlyDoc | None:
    if session.status != ONGOING or session.position.to_move != session.engine:
        return None
    ranked = best_moves(session.spec, session.table, session.position)
    move, _ = ranked[0]
    return _play_ply(session, move)


# ---------------------------------------------------------------------------
# Application
# ---------------------------------------------------------------------------

def create_app(
    session_ttl: float = DEFAULT_SESSION_TTL,
    session_log: str | None = None,
    cache_dir: str | None = None,
    ui_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="picaria", version="1.0")
    store = SessionStore(ttl=session_ttl)
    tables = TableCache(cache_dir)
    log_lock = threading.Lock()

    def log_event(event: str, payload: dict) -> None:
        if session_log is None:
            return
        record = {"time": time.time(), "event": event, **payload}
        with log_lock:
            with open(session_log, "a", encoding="utf-8") as handle:
                handle.write(json.dumps(record) + "\n")

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/sessions", response_model=StateDoc)
    def create_session(request: CreateSessionRequest) -> StateDoc:
        try:
            spec, table = tables.get(request.k, request.s)
        except ParameterError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        session = Session(
            id=uuid.uuid4().hex,
            spec=spec,
            table=table,
            human=request.human,
            position=initial_position(spec),
        )
        session.record_occurrence()
        store.add(session)
        with session.lock:
            _engine_reply(session)
        log_event("create", {"session": session.id, "k": request.k, "s": request.s,
                             "human": request.human})
        return _state_doc(session)

    @app.get("/sessions/{session_id}", response_model=StateDoc)
    def get_state(session_id: str) -> StateDoc:
        session = store.get(session_id)
        with session.lock:
            return _state_doc(session)

    @app.get("/sessions/{session_id}/moves", response_model=MovesResponse)
    def list_moves(session_id: str) -> MovesResponse:
        session = store.get(session_id)
        with session.lock:
            if session.status != ONGOING:
                return MovesResponse(moves=[])
            ranked = best_moves(session.spec, session.table, session.position)
            annotated = [
                AnnotatedMove(move=_move_doc(session.spec, m), value=_value_doc(v))
                for m, v in sorted(ranked, key=lambda mv: mv[0].sort_key())
            ]
            return MovesResponse(moves=annotated)

    @app.post("/sessions/{session_id}/moves", response_model=PlayResponse)
    def play_move(session_id: str, request: PlayMoveRequest) -> PlayResponse:
        session = store.get(session_id)
        with session.lock:
            if session.status != ONGOING:
                raise HTTPException(
                    status_code=409, detail=f"session is over ({session.status})"
                )
            if session.position.to_move != session.human:
                raise HTTPException(status_code=409, detail="not the human's turn")
            move = _parse_move(session, request.move)
            if move not in legal_moves(session.spec, session.position):
                raise HTTPException(status_code=400, detail=f"illegal move: {move}")
            plies = [_play_ply(session, move)]
            reply = _engine_reply(session)
            if reply is not None:
                plies.append(reply)
            log_event("move", {"session": session.id,
                               "plies": [p.model_dump(by_alias=True) for p in plies],
                               "status": session.status})
            return PlayResponse(plies=plies, state=_state_doc(session))

    @app.post("/sessions/{session_id}/reset", response_model=StateDoc)
    def reset_session(session_id: str) -> StateDoc:
        session = store.get(session_id)
        with session.lock:
            session.position = initial_position(session.spec)
            session.history.clear()
            session.repetitions.clear()
            session.status = ONGOING
            session.record_occurrence()
            _engine_reply(session)
            log_event("reset", {"session": session.id})
            return _state_doc(session)

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def default_app() -> FastAPI:
    """App factory for `uvicorn picaria.service:default_app`."""
    return create_app()
