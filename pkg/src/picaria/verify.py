"""Replayable proof-line fixtures checked against the solve table.

A fixture names a start position, an optional move sequence, and claims:
exact or one-sided value statements, a ply bound, a terminal winner, or a
return to the starting position (compared canonically, since the printed
forcing sequences close up to a board symmetry). Fixtures live in a
human-editable text file so the move lines can be diffed against the
printed diagrams they transcribe.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .board import BoardSpec, build_board
from .errors import FixtureError, IllegalMoveError
from .position import (
    Move,
    Position,
    apply_move,
    canonicalize,
    parse_notation,
    to_notation,
    winner,
)
from .solver import DRAW, LOSS, WIN, SolveTable, value

VALUE_IS = "value_is"
VALUE_IS_NOT = "value_is_not"
DEPTH_AT_MOST = "depth_at_most"
RETURNS_TO_START = "returns_to_start"
TERMINAL_WIN_BY = "terminal_win_by"

_VALUE_KINDS = {WIN, LOSS, DRAW}


@dataclass(frozen=True)
class Claim:
    """One checkable statement, anchored at a trajectory index.

    ``at_ply`` counts applied moves (0 = start); None means the final
    position of the fixture.
    """

    kind: str
    payload: str | int | None = None
    at_ply: int | None = None

    def describe(self) -> str:
        where = "" if self.at_ply is None else f" @{self.at_ply}"
        what = "" if self.payload is None else f" {self.payload}"
        return f"{self.kind}{what}{where}"


@dataclass(frozen=True)
class ProofFixture:
    name: str
    ref: str
    start: str
    moves: tuple[Move, ...]
    claims: tuple[Claim, ...]


@dataclass(frozen=True)
class ClaimResult:
    claim: Claim
    passed: bool
    detail: str


@dataclass(frozen=True)
class FixtureReport:
    fixture: ProofFixture
    results: tuple[ClaimResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> tuple[ClaimResult, ...]:
        return tuple(r for r in self.results if not r.passed)


def replay(spec: BoardSpec, table: SolveTable, fixture: ProofFixture) -> FixtureReport:
    """Replay the fixture's moves and evaluate every claim.

    A move that is illegal when replayed is a fixture-authoring error and
    raises FixtureError; a claim that does not hold is an ordinary failed
    result in the report.
    """
    try:
        p = parse_notation(fixture.start, spec)
    except Exception as exc:
        raise FixtureError(f"{fixture.name}: bad start position: {exc}") from exc
    trajectory = [p]
    for i, move in enumerate(fixture.moves):
        try:
            p = apply_move(spec, p, move)
        except IllegalMoveError as exc:
            raise FixtureError(
                f"{fixture.name}: move {i + 1} ({move}) is illegal: {exc}"
            ) from exc
        trajectory.append(p)

    results = []
    for claim in fixture.claims:
        results.append(_evaluate(spec, table, fixture, trajectory, claim))
    return FixtureReport(fixture, tuple(results))


def _evaluate(
    spec: BoardSpec,
    table: SolveTable,
    fixture: ProofFixture,
    trajectory: list[Position],
    claim: Claim,
) -> ClaimResult:
    index = len(trajectory) - 1 if claim.at_ply is None else claim.at_ply
    if not 0 <= index < len(trajectory):
        raise FixtureError(f"{fixture.name}: claim index {index} outside trajectory")
    position = trajectory[index]
    notation = to_notation(position)

    if claim.kind == RETURNS_TO_START:
        start_c, _ = canonicalize(spec, trajectory[0])
        end_c, _ = canonicalize(spec, trajectory[-1])
        passed = start_c == end_c
        detail = (
            f"end {to_notation(trajectory[-1])} vs start {to_notation(trajectory[0])}"
            f" (canonical {to_notation(end_c)} vs {to_notation(start_c)})"
        )
        return ClaimResult(claim, passed, detail)

    if claim.kind == TERMINAL_WIN_BY:
        actual = winner(spec, position)
        passed = actual == claim.payload
        return ClaimResult(claim, passed, f"winner at {notation} is {actual}")

    val = value(table, position)
    if claim.kind == VALUE_IS:
        passed = val.kind == claim.payload
    elif claim.kind == VALUE_IS_NOT:
        passed = val.kind != claim.payload
    elif claim.kind == DEPTH_AT_MOST:
        passed = val.depth is not None and val.depth <= claim.payload
    else:
        raise FixtureError(f"{fixture.name}: unknown claim kind {claim.kind!r}")
    return ClaimResult(claim, passed, f"value at {notation} is {val}")


def parse_fixture_file(text: str) -> list[ProofFixture]:
    """Parse the line-oriented fixture format ('#' starts a comment)."""
    fixtures: list[ProofFixture] = []
    name = None
    ref = ""
    start = None
    moves: list[Move] = []
    claims: list[Claim] = []

    def finish(line_no: int) -> None:
        nonlocal name, ref, start, moves, claims
        if start is None:
            raise FixtureError(f"line {line_no}: fixture {name!r} has no start position")
        fixtures.append(ProofFixture(name, ref, start, tuple(moves), tuple(claims)))
        name, ref, start, moves, claims = None, "", None, [], []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword, args = tokens[0], tokens[1:]
        if keyword == "fixture":
            if name is not None:
                raise FixtureError(f"line {line_no}: missing 'end' before new fixture")
            if len(args) != 1:
                raise FixtureError(f"line {line_no}: fixture needs exactly one name")
            name = args[0]
            continue
        if name is None:
            raise FixtureError(f"line {line_no}: {keyword!r} outside a fixture")
        if keyword == "ref":
            ref = " ".join(args)
        elif keyword == "start":
            if len(args) != 1:
                raise FixtureError(f"line {line_no}: start needs one position string")
            start = args[0]
        elif keyword == "place":
            moves.append(Move.place(_int(args, 1, line_no)[0]))
        elif keyword == "slide":
            src, dst = _int(args, 2, line_no)
            moves.append(Move.slide(src, dst))
        elif keyword == "claim":
            claims.append(_parse_claim(args, line_no))
        elif keyword == "end":
            finish(line_no)
        else:
            raise FixtureError(f"line {line_no}: unknown keyword {keyword!r}")
    if name is not None:
        raise FixtureError(f"fixture {name!r} not terminated by 'end'")
    return fixtures


def _int(args: list[str], count: int, line_no: int) -> list[int]:
    if len(args) != count:
        raise FixtureError(f"line {line_no}: expected {count} integer argument(s)")
    try:
        return [int(a) for a in args]
    except ValueError:
        raise FixtureError(f"line {line_no}: bad integer in {args}") from None


def _parse_claim(args: list[str], line_no: int) -> Claim:
    if not args:
        raise FixtureError(f"line {line_no}: empty claim")
    at_ply = None
    if args[-1].startswith("@"):
        try:
            at_ply = int(args[-1][1:])
        except ValueError:
            raise FixtureError(f"line {line_no}: bad ply anchor {args[-1]!r}") from None
        args = args[:-1]
    kind, rest = args[0], args[1:]
    if kind in (VALUE_IS, VALUE_IS_NOT):
        if len(rest) != 1 or rest[0] not in _VALUE_KINDS:
            raise FixtureError(f"line {line_no}: {kind} needs WIN, LOSS, or DRAW")
        return Claim(kind, rest[0], at_ply)
    if kind == DEPTH_AT_MOST:
        if len(rest) != 1:
            raise FixtureError(f"line {line_no}: depth_at_most needs a ply count")
        return Claim(kind, int(rest[0]), at_ply)
    if kind == RETURNS_TO_START:
        if rest:
            raise FixtureError(f"line {line_no}: returns_to_start takes no argument")
        return Claim(kind, None, at_ply)
    if kind == TERMINAL_WIN_BY:
        if len(rest) != 1 or rest[0] not in ("x", "o"):
            raise FixtureError(f"line {line_no}: terminal_win_by needs x or o")
        return Claim(kind, rest[0], at_ply)
    raise FixtureError(f"line {line_no}: unknown claim kind {kind!r}")


def load_fixture_file(path) -> list[ProofFixture]:
    with open(path, encoding="utf-8") as handle:
        return parse_fixture_file(handle.read())


def builtin_fixtures() -> list[ProofFixture]:
    """The packaged catalog covering every printed line of the analysis."""
    text = (
        resources.files("picaria")
        .joinpath("fixtures/proof_lines.txt")
        .read_text(encoding="utf-8")
    )
    return parse_fixture_file(text)


def builtin_board() -> BoardSpec:
    """The board the packaged fixtures are written for."""
    return build_board(3, 4)
