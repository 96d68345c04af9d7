"""Positions, moves, rules, symmetry canonicalization, and text notation.

A position is a string of cells over '.', 'x', 'o' in board node order plus
the player to move. X always starts; while fewer than 2k stones are on the
board, each turn places a stone on an empty node, afterwards each turn
slides one of the mover's stones along a board edge to an empty node. The
wire notation is the cells string, a colon, and the mover: "..ooxxx.o:x".
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import BoardSpec
from .errors import (
    IllegalMoveError,
    InvalidPositionError,
    NotationError,
    TerminalPositionError,
)

EMPTY = "."
X = "x"
O = "o"
PLAYERS = (X, O)

PLACEMENT = "placement"
SLIDING = "sliding"


def opponent(player: str) -> str:
    return O if player == X else X


@dataclass(frozen=True)
class Move:
    """A placement (src is None) or a slide from src to dst."""

    src: int | None
    dst: int

    @classmethod
    def place(cls, dst: int) -> "Move":
        return cls(None, dst)

    @classmethod
    def slide(cls, src: int, dst: int) -> "Move":
        return cls(src, dst)

    @property
    def is_place(self) -> bool:
        return self.src is None

    def sort_key(self) -> tuple[int, int]:
        return (-1 if self.src is None else self.src, self.dst)

    def __str__(self) -> str:
        if self.src is None:
            return f"place {self.dst}"
        return f"slide {self.src} {self.dst}"


@dataclass(frozen=True)
class Position:
    """Cell occupancy plus the player to move. Immutable value."""

    cells: str
    to_move: str

    def count(self, player: str) -> int:
        return self.cells.count(player)


def initial_position(spec: BoardSpec) -> Position:
    return Position(EMPTY * spec.node_count, X)


def phase(spec: BoardSpec, p: Position) -> str:
    placed = p.count(X) + p.count(O)
    return PLACEMENT if placed < 2 * spec.k else SLIDING


def winner(spec: BoardSpec, p: Position) -> str | None:
    """The unique player holding a completed line, or None.

    Boards where both players hold a line cannot occur in play and are
    rejected as invalid input.
    """
    cells = p.cells
    found = None
    for a, b, c in spec.lines:
        holder = cells[a]
        if holder != EMPTY and holder == cells[b] == cells[c]:
            if found is not None and found != holder:
                raise InvalidPositionError(
                    f"both players hold a completed line in {to_notation(p)}"
                )
            found = holder
    return found


def is_terminal(spec: BoardSpec, p: Position) -> bool:
    return winner(spec, p) is not None


def legal_moves(spec: BoardSpec, p: Position) -> list[Move]:
    """All legal moves for the player to move, in deterministic order.

    Placements come in ascending node order, slides in ascending
    (src, dst) order. An empty list in the sliding phase means the mover
    is blockaded. Querying a finished position is a caller bug.
    """
    if is_terminal(spec, p):
        raise TerminalPositionError(f"no moves from finished position {to_notation(p)}")
    mover = p.to_move
    cells = p.cells
    if phase(spec, p) == PLACEMENT:
        return [Move.place(i) for i in range(spec.node_count) if cells[i] == EMPTY]
    moves = []
    for src in range(spec.node_count):
        if cells[src] != mover:
            continue
        for dst in spec.neighbors[src]:
            if cells[dst] == EMPTY:
                moves.append(Move.slide(src, dst))
    return moves


def apply_move(spec: BoardSpec, p: Position, m: Move) -> Position:
    """Apply a legal move; raises IllegalMoveError otherwise."""
    if is_terminal(spec, p):
        raise IllegalMoveError(f"game already finished at {to_notation(p)}")
    mover = p.to_move
    cells = p.cells
    if cells[m.dst] != EMPTY:
        raise IllegalMoveError(f"{m} targets occupied node {m.dst}")
    in_placement = phase(spec, p) == PLACEMENT
    if m.is_place:
        if not in_placement:
            raise IllegalMoveError(f"{m} after all stones are placed")
        new_cells = cells[: m.dst] + mover + cells[m.dst + 1 :]
    else:
        if in_placement:
            raise IllegalMoveError(f"{m} before all stones are placed")
        if cells[m.src] != mover:
            raise IllegalMoveError(f"{m} does not move a {mover} stone")
        if tuple(sorted((m.src, m.dst))) not in spec.adjacency:
            raise IllegalMoveError(f"{m} is not along a board edge")
        new_cells = list(cells)
        new_cells[m.src] = EMPTY
        new_cells[m.dst] = mover
        new_cells = "".join(new_cells)
    return Position(new_cells, opponent(mover))


# Symbol ranks for canonical comparison: empty < x < o.
_RANK = str.maketrans({EMPTY: "0", X: "1", O: "2"})


def canonicalize(spec: BoardSpec, p: Position) -> tuple[Position, tuple[int, ...]]:
    """Orbit representative under the board symmetries.

    Returns the lexicographically smallest cells string over all symmetry
    images (under the symbol order empty < x < o) together with the
    permutation that maps p onto it. The mover is unchanged. Idempotent.
    """
    ranked = p.cells.translate(_RANK)
    best = ranked
    best_gather = None
    best_perm = spec.symmetries[0]
    for gather, perm in spec.symmetry_gathers:
        image = "".join(ranked[g] for g in gather)
        if image < best:
            best = image
            best_gather = gather
            best_perm = perm
    if best_gather is None:
        return p, best_perm
    cells = "".join(p.cells[g] for g in best_gather)
    return Position(cells, p.to_move), best_perm


def canonical_cells(spec: BoardSpec, cells: str) -> str:
    """Just the canonical cells string (turn-free orbit representative)."""
    ranked = cells.translate(_RANK)
    best = ranked
    best_gather = None
    for gather, _ in spec.symmetry_gathers:
        image = "".join(ranked[g] for g in gather)
        if image < best:
            best = image
            best_gather = gather
    if best_gather is None:
        return cells
    return "".join(cells[g] for g in best_gather)


def transform(cells: str, perm: tuple[int, ...]) -> str:
    """Image of a cells string under a node permutation."""
    out = [EMPTY] * len(cells)
    for i, image in enumerate(perm):
        out[image] = cells[i]
    return "".join(out)


def to_notation(p: Position) -> str:
    return f"{p.cells}:{p.to_move}"


def parse_notation(text: str, spec: BoardSpec) -> Position:
    """Parse and fully validate a position string."""
    n = spec.node_count
    if len(text) != n + 2 or text[n] != ":":
        raise NotationError(f"expected '<{n} cells>:<mover>', got {text!r}")
    cells, mover = text[:n], text[n + 1 :]
    bad = set(cells) - {EMPTY, X, O}
    if bad:
        raise NotationError(f"unknown cell characters {sorted(bad)} in {text!r}")
    if mover not in PLAYERS:
        raise NotationError(f"mover must be 'x' or 'o', got {mover!r}")
    p = Position(cells, mover)
    validate_position(spec, p)
    return p


def validate_position(spec: BoardSpec, p: Position) -> None:
    """Check all position invariants; raises NotationError on violation.

    Also rejects double-win boards (via winner) as InvalidPositionError.
    """
    x_count, o_count = p.count(X), p.count(O)
    k = spec.k
    if x_count > k or o_count > k:
        raise NotationError(
            f"at most {k} stones per player, got {x_count} x and {o_count} o"
        )
    if x_count + o_count < 2 * k:
        if x_count not in (o_count, o_count + 1):
            raise NotationError(
                f"placement counts out of step: {x_count} x vs {o_count} o"
            )
        expected = X if x_count == o_count else O
        if p.to_move != expected:
            raise NotationError(
                f"{expected} must be to move after {x_count} x and {o_count} o placements"
            )
    winner(spec, p)
