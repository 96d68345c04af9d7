"""Cross-check solver: full-sweep value iteration over raw states.

Deliberately written against the grain of the retrograde solver: no
symmetry reduction, no predecessor bookkeeping, no frontier queue. Every
raw position reachable from the empty board is re-evaluated from its
children's current values, sweep after sweep, until nothing changes;
whatever is still unlabeled at the fixpoint is a draw. Collapsing the raw
fixpoint onto canonical keys must reproduce the retrograde table exactly,
which is what the test suite asserts.
"""

from __future__ import annotations

from collections import deque

from .board import BoardSpec
from .position import EMPTY, Position, canonicalize, opponent, to_notation
from .solver import DRAW_VALUE, LOSS, WIN, GameValue, SolveTable


def _line_completed(spec: BoardSpec, cells: str) -> bool:
    for a, b, c in spec.lines:
        if cells[a] != EMPTY and cells[a] == cells[b] == cells[c]:
            return True
    return False


def _moves(spec: BoardSpec, cells: str, mover: str) -> list[str]:
    n = spec.node_count
    boards = []
    if cells.count(EMPTY) > n - 2 * spec.k:
        for i in range(n):
            if cells[i] == EMPTY:
                boards.append(cells[:i] + mover + cells[i + 1 :])
        return boards
    for src in range(n):
        if cells[src] != mover:
            continue
        for dst in spec.neighbors[src]:
            if cells[dst] == EMPTY:
                board = list(cells)
                board[src] = EMPTY
                board[dst] = mover
                boards.append("".join(board))
    return boards


def oracle_solve(spec: BoardSpec) -> SolveTable:
    """Solve by naive value iteration and reduce to canonical keys."""
    n = spec.node_count
    start = EMPTY * n + ":x"
    children: dict[str, tuple[str, ...]] = {}
    values: dict[str, GameValue | None] = {}
    queue = deque([start])
    seen = {start}
    while queue:
        key = queue.popleft()
        cells, mover = key[:n], key[n + 1 :]
        if _line_completed(spec, cells):
            children[key] = ()
            values[key] = GameValue(LOSS, 0)
            continue
        nxt = opponent(mover)
        kids = tuple(f"{board}:{nxt}" for board in _moves(spec, cells, mover))
        children[key] = kids
        values[key] = GameValue(LOSS, 0) if not kids else None
        for kid in kids:
            if kid not in seen:
                seen.add(kid)
                queue.append(kid)

    live = [key for key, kids in children.items() if kids]
    changed = True
    while changed:
        changed = False
        for key in live:
            best_loss = None
            worst_win = -1
            all_win = True
            for kid in children[key]:
                v = values[kid]
                if v is None:
                    all_win = False
                elif v.kind == LOSS:
                    if best_loss is None or v.depth < best_loss:
                        best_loss = v.depth
                else:
                    if v.depth > worst_win:
                        worst_win = v.depth
            if best_loss is not None:
                candidate = GameValue(WIN, best_loss + 1)
            elif all_win:
                candidate = GameValue(LOSS, worst_win + 1)
            else:
                candidate = None
            if candidate != values[key]:
                values[key] = candidate
                changed = True

    table: dict[str, GameValue] = {}
    for key, v in values.items():
        cells, mover = key[:n], key[n + 1 :]
        canonical, _ = canonicalize(spec, Position(cells, mover))
        ckey = to_notation(canonical)
        resolved = v if v is not None else DRAW_VALUE
        previous = table.setdefault(ckey, resolved)
        if previous != resolved:
            raise AssertionError(
                f"orbit members disagree at {ckey}: {previous} vs {resolved}"
            )
    return SolveTable(spec, table)
