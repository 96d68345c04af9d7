"""Exact solver and verification lab for Picaria and its (k, s) relatives.

The package computes game-theoretic values of every position by
retrograde analysis, counts sliding-phase positions modulo the board
symmetries, replays the printed proof lines of the draw analysis as
checkable fixtures, and serves perfect play over HTTP.
"""

from .board import BoardSpec, build_board, grid_mapping
from .counting import (
    OrbitReport,
    burnside_orbits,
    count_double_win_orbits,
    enumerate_orbits,
    fixed_boards,
)
from .errors import (
    FixtureError,
    IllegalMoveError,
    InvalidPositionError,
    NotationError,
    ParameterError,
    PicariaError,
    TableChecksumError,
    TableFormatError,
    TableSpecMismatchError,
    TerminalPositionError,
    UnknownPositionError,
)
from .oracle import oracle_solve
from .position import (
    Move,
    Position,
    apply_move,
    canonicalize,
    initial_position,
    legal_moves,
    parse_notation,
    to_notation,
    winner,
)
from .solver import (
    DRAW,
    LOSS,
    WIN,
    GameValue,
    SolveTable,
    best_moves,
    reachable_states,
    solve,
    value,
)
from .tableio import export_table, import_table, load_or_solve
from .verify import ProofFixture, builtin_fixtures, replay

__version__ = "1.0.0"

__all__ = [
    "BoardSpec",
    "DRAW",
    "FixtureError",
    "GameValue",
    "IllegalMoveError",
    "InvalidPositionError",
    "LOSS",
    "Move",
    "NotationError",
    "OrbitReport",
    "ParameterError",
    "PicariaError",
    "Position",
    "ProofFixture",
    "SolveTable",
    "TableChecksumError",
    "TableFormatError",
    "TableSpecMismatchError",
    "TerminalPositionError",
    "UnknownPositionError",
    "WIN",
    "apply_move",
    "best_moves",
    "builtin_fixtures",
    "burnside_orbits",
    "build_board",
    "canonicalize",
    "count_double_win_orbits",
    "enumerate_orbits",
    "export_table",
    "fixed_boards",
    "grid_mapping",
    "import_table",
    "initial_position",
    "legal_moves",
    "load_or_solve",
    "oracle_solve",
    "parse_notation",
    "reachable_states",
    "replay",
    "solve",
    "to_notation",
    "value",
    "winner",
]
