"""Exact solution of the full two-phase game graph.

The solver enumerates every position reachable from the empty board
(canonicalized under the board symmetries, keyed by wire notation) and
labels it by retrograde analysis: positions where the opponent has just
completed a line, and positions where the mover cannot slide, are losses
in 0 plies; a position is WIN(d+1) when some child is LOSS(d) with d
minimal, LOSS(d+1) when every child is a WIN and d is the largest child
depth; everything the backward sweep never reaches is a DRAW (neither
side can force a win, so play cycles forever).

Values are always for the side to move. WIN depths are odd, LOSS depths
even; the winner minimizes and the loser maximizes the ply count.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .board import BoardSpec
from .errors import TerminalPositionError, UnknownPositionError
from .position import (
    EMPTY,
    Move,
    Position,
    apply_move,
    canonical_cells,
    canonicalize,
    initial_position,
    legal_moves,
    opponent,
    to_notation,
    winner,
)

WIN = "WIN"
LOSS = "LOSS"
DRAW = "DRAW"


@dataclass(frozen=True)
class GameValue:
    """Game-theoretic value for the side to move, with distance in plies."""

    kind: str
    depth: int | None = None

    def __post_init__(self):
        if self.kind == DRAW:
            if self.depth is not None:
                raise ValueError("a draw has no depth")
        elif self.kind == WIN:
            if self.depth is None or self.depth % 2 != 1:
                raise ValueError(f"WIN depth must be odd, got {self.depth}")
        elif self.kind == LOSS:
            if self.depth is None or self.depth % 2 != 0:
                raise ValueError(f"LOSS depth must be even, got {self.depth}")
        else:
            raise ValueError(f"unknown value kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == DRAW:
            return "DRAW"
        return f"{self.kind}({self.depth})"


DRAW_VALUE = GameValue(DRAW)


def mover_preference(value_after_move: GameValue) -> tuple[int, int]:
    """Sort key ranking a move by the value it hands to the opponent.

    Best first: opponent losses by ascending depth, then draws, then
    opponent wins by descending depth.
    """
    if value_after_move.kind == LOSS:
        return (0, value_after_move.depth)
    if value_after_move.kind == DRAW:
        return (1, 0)
    return (2, -value_after_move.depth)


@dataclass
class SolveTable:
    """Canonical position (wire notation) -> GameValue for the mover."""

    spec: BoardSpec
    values: dict[str, GameValue]

    @cached_property
    def class_counts(self) -> dict[str, int]:
        counts = {WIN: 0, LOSS: 0, DRAW: 0}
        for v in self.values.values():
            counts[v.kind] += 1
        return counts

    @property
    def root_key(self) -> str:
        return to_notation(canonicalize(self.spec, initial_position(self.spec))[0])

    @property
    def root_value(self) -> GameValue:
        return self.values[self.root_key]

    def __len__(self) -> int:
        return len(self.values)


def _key(cells: str, mover: str) -> str:
    return f"{cells}:{mover}"


def _child_cells(spec: BoardSpec, cells: str, mover: str) -> list[str]:
    """Boards after each legal move, in deterministic move order."""
    n = spec.node_count
    if cells.count(EMPTY) > n - 2 * spec.k:
        return [cells[:i] + mover + cells[i + 1 :] for i in range(n) if cells[i] == EMPTY]
    out = []
    for src in range(n):
        if cells[src] != mover:
            continue
        for dst in spec.neighbors[src]:
            if cells[dst] == EMPTY:
                board = list(cells)
                board[src] = EMPTY
                board[dst] = mover
                out.append("".join(board))
    return out


def _has_winner(spec: BoardSpec, cells: str) -> bool:
    for a, b, c in spec.lines:
        if cells[a] != EMPTY and cells[a] == cells[b] == cells[c]:
            return True
    return False


def _explore(spec: BoardSpec) -> tuple[dict[str, tuple[str, ...]], list[str]]:
    """Forward closure over canonical states.

    Returns the child map (distinct canonical children per state; empty for
    finished or blockaded states) and the list of seed states for the
    backward pass (states that are LOSS(0) for the mover).
    """
    start_cells = canonical_cells(spec, EMPTY * spec.node_count)
    start = _key(start_cells, "x")
    children: dict[str, tuple[str, ...]] = {}
    seeds: list[str] = []
    queue = deque([start])
    seen = {start}
    n = spec.node_count
    while queue:
        key = queue.popleft()
        cells, mover = key[:n], key[n + 1 :]
        if _has_winner(spec, cells):
            children[key] = ()
            seeds.append(key)
            continue
        nxt = opponent(mover)
        kids = {
            _key(canonical_cells(spec, board), nxt)
            for board in _child_cells(spec, cells, mover)
        }
        if not kids:
            children[key] = ()
            seeds.append(key)
            continue
        children[key] = tuple(sorted(kids))
        for kid in kids:
            if kid not in seen:
                seen.add(kid)
                queue.append(kid)
    return children, seeds


def solve(spec: BoardSpec) -> SolveTable:
    """Retrograde labeling of every reachable canonical position."""
    children, seeds = _explore(spec)

    preds: dict[str, list[str]] = {}
    pending: dict[str, int] = {}
    for parent, kids in children.items():
        pending[parent] = len(kids)
        for kid in kids:
            preds.setdefault(kid, []).append(parent)

    values: dict[str, GameValue] = {}
    queue: deque[str] = deque()
    for key in seeds:
        values[key] = GameValue(LOSS, 0)
        queue.append(key)

    # Labels leave the queue in nondecreasing depth order, so the first
    # LOSS child a parent sees has minimal depth and the WIN child that
    # exhausts a parent's counter has maximal depth.
    while queue:
        key = queue.popleft()
        val = values[key]
        if val.kind == LOSS:
            promoted = GameValue(WIN, val.depth + 1)
            for parent in preds.get(key, ()):
                if parent not in values:
                    values[parent] = promoted
                    queue.append(parent)
        else:
            demoted = GameValue(LOSS, val.depth + 1)
            for parent in preds.get(key, ()):
                if parent in values:
                    continue
                pending[parent] -= 1
                if pending[parent] == 0:
                    values[parent] = demoted
                    queue.append(parent)

    for key in children:
        if key not in values:
            values[key] = DRAW_VALUE
    return SolveTable(spec, values)


def value(table: SolveTable, p: Position) -> GameValue:
    """Table lookup after canonicalization; p must be reachable."""
    canonical, _ = canonicalize(table.spec, p)
    try:
        return table.values[to_notation(canonical)]
    except KeyError:
        raise UnknownPositionError(
            f"{to_notation(p)} is not reachable from the initial position"
        ) from None


def best_moves(
    spec: BoardSpec, table: SolveTable, p: Position
) -> list[tuple[Move, GameValue]]:
    """Legal moves ranked best-first for the mover.

    Each move is paired with the value of the resulting position (for the
    opponent, who then moves). The head of the list is the engine's move.
    """
    if winner(spec, p) is not None:
        raise TerminalPositionError(f"no moves to rank at {to_notation(p)}")
    ranked = []
    for m in legal_moves(spec, p):
        after = apply_move(spec, p, m)
        ranked.append((m, value(table, after)))
    ranked.sort(key=lambda mv: (mover_preference(mv[1]), mv[0].sort_key()))
    return ranked


@dataclass
class ReachabilityStats:
    """State counts from forward closure, plus whole-space sliding counts.

    ``valid_sliding_canonical_with_turn`` counts every full board with at
    most one line-holder, modulo symmetry, with the turn flag doubling --
    whether or not play can reach it. ``raw_sliding_boards`` counts all
    full boards with no symmetry reduction and no turn flag (the plain
    multinomial), line-holders included.
    """

    spec: BoardSpec
    canonical_placement: int
    canonical_sliding: int
    raw_placement: int
    raw_sliding: int
    valid_sliding_canonical_with_turn: int
    raw_sliding_boards: int
    canonical_states: frozenset[str] = field(repr=False)
    raw_states: frozenset[str] = field(repr=False)

    @property
    def canonical_total(self) -> int:
        return self.canonical_placement + self.canonical_sliding

    @property
    def raw_total(self) -> int:
        return self.raw_placement + self.raw_sliding


def _raw_reachable(spec: BoardSpec) -> frozenset[str]:
    start = to_notation(initial_position(spec))
    n = spec.node_count
    seen = {start}
    queue = deque([start])
    while queue:
        key = queue.popleft()
        cells, mover = key[:n], key[n + 1 :]
        if _has_winner(spec, cells):
            continue
        nxt = opponent(mover)
        for board in _child_cells(spec, cells, mover):
            kid = _key(board, nxt)
            if kid not in seen:
                seen.add(kid)
                queue.append(kid)
    return frozenset(seen)


def _is_sliding_key(spec: BoardSpec, key: str) -> bool:
    n = spec.node_count
    return key[:n].count(EMPTY) == n - 2 * spec.k


def valid_full_boards(spec: BoardSpec) -> list[str]:
    """Every full board (k stones each) with at most one line-holder."""
    n, k = spec.node_count, spec.k
    boards = []
    for xs in combinations(range(n), k):
        rest = [i for i in range(n) if i not in xs]
        for os_ in combinations(rest, k):
            cells = [EMPTY] * n
            for i in xs:
                cells[i] = "x"
            for i in os_:
                cells[i] = "o"
            board = "".join(cells)
            x_line = any(
                board[a] == board[b] == board[c] == "x" for a, b, c in spec.lines
            )
            o_line = any(
                board[a] == board[b] == board[c] == "o" for a, b, c in spec.lines
            )
            if not (x_line and o_line):
                boards.append(board)
    return boards


def reachable_states(spec: BoardSpec) -> ReachabilityStats:
    """Forward-closure statistics, canonical and raw, per phase."""
    children, _ = _explore(spec)
    canonical = frozenset(children)
    raw = _raw_reachable(spec)

    canonical_sliding = sum(1 for key in canonical if _is_sliding_key(spec, key))
    raw_sliding = sum(1 for key in raw if _is_sliding_key(spec, key))

    valid_orbits = len({canonical_cells(spec, board) for board in valid_full_boards(spec)})

    n, k = spec.node_count, spec.k
    raw_boards = math.comb(n, k) * math.comb(n - k, k)

    return ReachabilityStats(
        spec=spec,
        canonical_placement=len(canonical) - canonical_sliding,
        canonical_sliding=canonical_sliding,
        raw_placement=len(raw) - raw_sliding,
        raw_sliding=raw_sliding,
        valid_sliding_canonical_with_turn=2 * valid_orbits,
        raw_sliding_boards=raw_boards,
        canonical_states=canonical,
        raw_states=raw,
    )
