"""HTTP+JSON service for interactive circuit design.

A session starts at the origin square with a chosen piece inventory.  The
first move picks the initial heading; every later move is a turn code,
optionally flagged ``close`` to place the final piece and seal the
circuit back into the base square.  Legality is checked incrementally
with the same anchor-sharing and same-square-pair rules as the batch
validator, and a closed session's export always passes it.

Sessions live in memory; requests to one session are serialized by a
per-session lock while distinct sessions proceed in parallel.
"""

from __future__ import annotations

import secrets
import threading
from collections import Counter
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from .assembly import is_constructible
from .circuit import Circuit
from .curves import DEFAULT_RAIL_WIDTH, sweep_pair_catalogue
from .grid import LEGAL_SIGNED, STEPS, Direction, classify_piece, signed_turn
from .randombuild import close_suffix, path_centers
from .records import circuit_to_record
from .render import pieces_to_svg, to_svg

MAX_CLOSURE_SEARCH = 6


class NewSession(BaseModel):
    caps: dict[int, int] | None = None


class MoveRequest(BaseModel):
    direction: int | None = None
    turn: int | None = None
    close: bool = False


@dataclass
class Session:
    id: str
    caps: dict[int, int] | None
    headings: list[int] = field(default_factory=list)
    closed: bool = False
    lock: threading.Lock = field(default_factory=threading.Lock)

    # -- derived state ---------------------------------------------------

    @property
    def centers(self) -> list[tuple[int, int]]:
        """Squares holding placed pieces (piece 1 at the origin)."""
        return path_centers(tuple(self.headings))[:-1] if self.headings \
            else []

    @property
    def head(self) -> tuple[int, int]:
        """Square where the next piece would be placed."""
        if not self.headings:
            return (0, 0)
        return path_centers(tuple(self.headings))[-1]

    def piece_anchors(self) -> list[tuple[int | None, int]]:
        """(entry, exit) anchor indices per placed piece; piece 1's entry
        stays unknown until the session closes."""
        out: list[tuple[int | None, int]] = []
        for i, d in enumerate(self.headings):
            if i == 0:
                entry = (self.headings[-1] + 4) % 8 if self.closed else None
            else:
                entry = (self.headings[i - 1] + 4) % 8
            out.append((entry, d % 8))
        return out

    def used_types(self) -> Counter[int]:
        """Piece types consumed so far; piece 1 counts only once closed."""
        used: Counter[int] = Counter()
        for i, d in enumerate(self.headings):
            if i == 0:
                if not self.closed:
                    continue
                d_prev = self.headings[-1]
            else:
                d_prev = self.headings[i - 1]
            ptype, _ = classify_piece_ids(d_prev, d)
            used[ptype] += 1
        return used

    def remaining(self) -> dict[int, int] | None:
        if self.caps is None:
            return None
        used = self.used_types()
        return {t: self.caps[t] - used.get(t, 0) for t in sorted(self.caps)}

    def snapshot(self) -> dict:
        anchors = self.piece_anchors()
        pieces = []
        for i, d in enumerate(self.headings):
            entry, exit_ = anchors[i]
            pieces.append({
                "square": list(self.centers[i]),
                "entry_anchor": entry,
                "exit_anchor": exit_,
            })
        return {
            "id": self.id,
            "status": "closed" if self.closed else "open",
            "pieces": pieces,
            "head": list(self.head),
            "remaining": self.remaining(),
        }


def classify_piece_ids(d_in: int, d_out: int) -> tuple[int, int]:
    """(unsigned type id, sign) of the piece entered along d_in and left
    along d_out."""
    ptype, sign = classify_piece(Direction(d_in % 8), Direction(d_out % 8))
    return ptype.type_id, sign


def _anchor_points(center: tuple[int, int],
                   anchors: tuple[int | None, int]) -> set[tuple[int, int]]:
    pts = set()
    for kappa in anchors:
        if kappa is None:
            continue
        dx, dy = STEPS[kappa]
        pts.add((2 * center[0] + dx, 2 * center[1] + dy))
    return pts


def _placement_conflict(session: Session, square: tuple[int, int],
                        entry: int, exit_: int) -> bool:
    """Incremental feasibility of adding an (open) piece at ``square``:
    anchor sharing against every placed piece, and the same-square pair
    rules when the square is already occupied."""
    centers = session.centers
    anchors = session.piece_anchors()
    new_pts = _anchor_points(square, (entry, exit_ % 8))
    n = len(centers)
    catalogue = sweep_pair_catalogue(False)
    for i in range(n):
        pts = _anchor_points(centers[i], anchors[i])
        shared = new_pts & pts
        if i == n - 1:
            # the joint with the previous piece is the one legal share
            shared -= _anchor_points(centers[i], (anchors[i][1],))
        if shared:
            return True
        if centers[i] == square and anchors[i][0] is not None:
            crossing, delta = catalogue[
                (anchors[i][0], anchors[i][1], entry, exit_ % 8)]
            if crossing or delta < DEFAULT_RAIL_WIDTH:
                return True
    return False


def _legal_moves(session: Session) -> list[dict]:
    if session.closed:
        return []
    if not session.headings:
        return [{"kind": "direction", "direction": d,
                 "head": list(STEPS[d])} for d in range(8)]
    moves = []
    d_prev = session.headings[-1]
    head = session.head
    remaining = session.remaining()
    for k in LEGAL_SIGNED:
        d_new = (d_prev + k) % 8
        ptype, sign = classify_piece_ids(d_prev, d_new)
        if remaining is not None and remaining.get(ptype, 0) < 1:
            continue
        entry = (d_prev + 4) % 8
        nxt = (head[0] + STEPS[d_new][0], head[1] + STEPS[d_new][1])
        if not _placement_conflict(session, head, entry, d_new):
            moves.append({"kind": "turn", "turn": k, "close": False,
                          "piece_type": ptype, "sign": sign,
                          "head": list(nxt)})
        if nxt == (0, 0) and len(session.headings) >= 2:
            if _close_legal(session, k):
                moves.append({"kind": "turn", "turn": k, "close": True,
                              "piece_type": ptype, "sign": sign,
                              "head": [0, 0]})
    return moves


def _close_legal(session: Session, k: int) -> bool:
    """Whether applying turn ``k`` as the closing move yields a valid,
    fully constructible circuit within the inventory."""
    d_prev = session.headings[-1]
    d_new = (d_prev + k) % 8
    if signed_turn(d_new, session.headings[0]) not in LEGAL_SIGNED:
        return False
    headings = session.headings + [d_new]
    centers = tuple(path_centers(tuple(headings))[:-1])
    try:
        circuit = Circuit(centers)
    except ValueError:
        return False
    if session.caps is not None:
        used = Counter(abs(c) for c in circuit.codes)
        if any(used[t] > session.caps.get(t, 0) for t in used):
            return False
    return is_constructible(circuit)


def create_app() -> FastAPI:
    app = FastAPI(title="railgrid designer service")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    sessions: dict[str, Session] = {}

    def get_session(sid: str) -> Session:
        session = sessions.get(sid)
        if session is None:
            raise HTTPException(404, "unknown session")
        return session

    @app.post("/sessions", status_code=201)
    def new_session(body: NewSession) -> dict:
        caps = body.caps
        if caps is not None:
            if any(t not in range(1, 7) for t in caps):
                raise HTTPException(400, "piece types must be 1..6")
            if any(v < 0 for v in caps.values()):
                raise HTTPException(400, "inventory caps must be >= 0")
            caps = {t: caps.get(t, 0) for t in range(1, 7)}
        session = Session(id=secrets.token_urlsafe(16), caps=caps)
        sessions[session.id] = session
        return session.snapshot()

    @app.get("/sessions/{sid}")
    def show(sid: str) -> dict:
        session = get_session(sid)
        with session.lock:
            return session.snapshot()

    @app.get("/sessions/{sid}/moves")
    def moves(sid: str) -> list[dict]:
        session = get_session(sid)
        with session.lock:
            return _legal_moves(session)

    @app.post("/sessions/{sid}/moves")
    def apply_move(sid: str, body: MoveRequest) -> dict:
        session = get_session(sid)
        with session.lock:
            legal = _legal_moves(session)
            if body.direction is not None:
                match = [m for m in legal if m["kind"] == "direction"
                         and m["direction"] == body.direction]
                if not match:
                    raise HTTPException(409, "illegal first direction")
                session.headings.append(body.direction % 8)
                return session.snapshot()
            if body.turn is None:
                raise HTTPException(409, "move needs a direction or a turn")
            match = [m for m in legal if m["kind"] == "turn"
                     and m["turn"] == body.turn
                     and m["close"] == body.close]
            if not match:
                raise HTTPException(409, "illegal move")
            session.headings.append((session.headings[-1] + body.turn) % 8)
            if body.close:
                session.closed = True
            return session.snapshot()

    @app.delete("/sessions/{sid}/moves")
    def undo(sid: str) -> dict:
        session = get_session(sid)
        with session.lock:
            if not session.headings:
                raise HTTPException(409, "nothing to undo")
            if session.closed:
                session.closed = False
            session.headings.pop()
            return session.snapshot()

    @app.get("/sessions/{sid}/closure")
    def closure(sid: str, max: int = MAX_CLOSURE_SEARCH) -> dict:
        session = get_session(sid)
        if max > MAX_CLOSURE_SEARCH:
            raise HTTPException(
                400, f"closure search bounded at {MAX_CLOSURE_SEARCH}")
        if max < 1:
            raise HTTPException(400, "search depth must be at least 1")
        with session.lock:
            if session.closed:
                return {"closable": True, "min_pieces": 0}
            if len(session.headings) < 2:
                return {"closable": False, "min_pieces": None}
            prefix = tuple(session.headings)
            for s in range(1, max + 1):
                for headings in close_suffix(prefix, s):
                    centers = tuple(path_centers(headings)[:-1])
                    try:
                        circuit = Circuit(centers)
                    except ValueError:
                        continue
                    if session.caps is not None:
                        used = Counter(abs(c) for c in circuit.codes)
                        if any(used[t] > session.caps.get(t, 0)
                               for t in used):
                            continue
                    if is_constructible(circuit):
                        return {"closable": True, "min_pieces": s}
            return {"closable": False, "min_pieces": None}

    @app.get("/sessions/{sid}/render")
    def render(sid: str) -> Response:
        session = get_session(sid)
        with session.lock:
            if session.closed:
                circuit = Circuit(tuple(session.centers))
                svg = to_svg(circuit)
            else:
                pieces = []
                for i, d in enumerate(session.headings):
                    # piece 1's entry is unknown while open: draw it as
                    # the straight piece along its exit heading
                    d_in = session.headings[i - 1] if i else d
                    pieces.append((session.centers[i], d_in, d))
                last = session.headings[-1] if session.headings else 0
                svg = pieces_to_svg(pieces, (session.head, last))
            return Response(content=svg, media_type="image/svg+xml")

    @app.get("/sessions/{sid}/export")
    def export(sid: str) -> JSONResponse:
        session = get_session(sid)
        with session.lock:
            if not session.closed:
                raise HTTPException(409, "session is still open")
            circuit = Circuit(tuple(session.centers))
            return JSONResponse(circuit_to_record(circuit))

    return app


app = create_app()
