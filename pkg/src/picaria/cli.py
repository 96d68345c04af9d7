"""Command-line front door: solve, value, best, count, verify, sweep, serve.

Exit codes are a stable contract for CI: 0 success, 1 a verification or
claim failure, 2 usage error. The solve-table cache directory comes from
--cache or the PICARIA_CACHE environment variable.
"""

from __future__ import annotations

import json
import math
import sys
import time

import click

from .board import build_board
from .counting import burnside_orbits, enumerate_orbits
from .errors import NotationError, ParameterError, PicariaError, UnknownPositionError
from .position import parse_notation
from .solver import DRAW, SolveTable, best_moves, reachable_states, value
from .tableio import load_or_solve
from .verify import builtin_board, builtin_fixtures, load_fixture_file, replay

_FORMATS = click.Choice(["text", "structured"])


def _echo_note(message: str) -> None:
    click.echo(message, err=True)


def _get_table(k: int, s: int, cache_dir: str | None) -> SolveTable:
    try:
        return load_or_solve(k, s, cache_dir, on_note=_echo_note)
    except ParameterError as exc:
        raise click.UsageError(str(exc)) from exc


def _parse_position(board, text: str):
    try:
        return parse_notation(text, board)
    except (NotationError, PicariaError) as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
def main() -> None:
    """Exact solver and verification lab for Picaria and its (k, s) family."""


@main.command()
@click.option("-k", type=int, default=3, show_default=True, help="Stones per player.")
@click.option("-s", type=int, default=4, show_default=True, help="Board sides.")
@click.option("--cache", envvar="PICARIA_CACHE", default=None, help="Solve-table cache directory.")
@click.option("--format", "fmt", type=_FORMATS, default="text", show_default=True)
def solve(k: int, s: int, cache: str | None, fmt: str) -> None:
    """Solve the (k, s) game and print a summary."""
    started = time.perf_counter()
    table = _get_table(k, s, cache)
    elapsed = time.perf_counter() - started
    counts = table.class_counts
    root = table.root_value
    if fmt == "structured":
        click.echo(json.dumps({
            "k": k, "s": s,
            "states": len(table),
            "classes": {name.lower(): n for name, n in counts.items()},
            "root_value": {"kind": root.kind, "depth": root.depth},
            "seconds": round(elapsed, 3),
        }))
        return
    click.echo(f"(k={k}, s={s}): {len(table)} canonical states in {elapsed:.2f}s")
    click.echo(
        f"  win {counts['WIN']}  loss {counts['LOSS']}  draw {counts['DRAW']}"
    )
    click.echo(f"  root value: {root}")


@main.command(name="value")
@click.argument("position")
@click.option("-k", type=int, default=3, show_default=True)
@click.option("-s", type=int, default=4, show_default=True)
@click.option("--cache", envvar="PICARIA_CACHE", default=None)
@click.option("--format", "fmt", type=_FORMATS, default="text", show_default=True)
def value_cmd(position: str, k: int, s: int, cache: str | None, fmt: str) -> None:
    """Game value of POSITION (wire notation) for the side to move."""
    table = _get_table(k, s, cache)
    p = _parse_position(table.spec, position)
    try:
        val = value(table, p)
    except UnknownPositionError as exc:
        _echo_note(f"unreachable position: {exc}")
        sys.exit(1)
    if fmt == "structured":
        click.echo(json.dumps({"position": position, "kind": val.kind, "depth": val.depth}))
    else:
        click.echo(str(val))


@main.command()
@click.argument("position")
@click.option("-k", type=int, default=3, show_default=True)
@click.option("-s", type=int, default=4, show_default=True)
@click.option("--cache", envvar="PICARIA_CACHE", default=None)
@click.option("--format", "fmt", type=_FORMATS, default="text", show_default=True)
def best(position: str, k: int, s: int, cache: str | None, fmt: str) -> None:
    """Rank the legal moves of POSITION best-first for the mover."""
    table = _get_table(k, s, cache)
    p = _parse_position(table.spec, position)
    try:
        ranked = best_moves(table.spec, table, p)
    except UnknownPositionError as exc:
        _echo_note(f"unreachable position: {exc}")
        sys.exit(1)
    except PicariaError as exc:
        raise click.UsageError(str(exc)) from exc
    if fmt == "structured":
        click.echo(json.dumps({
            "position": position,
            "moves": [
                {"move": str(m), "kind": v.kind, "depth": v.depth} for m, v in ranked
            ],
        }))
        return
    for m, v in ranked:
        click.echo(f"{str(m):<12} -> {v}")


@main.command()
@click.option("-k", type=int, default=3, show_default=True)
@click.option("-s", type=int, default=4, show_default=True)
@click.option("--enumerate", "cross_check", is_flag=True,
              help="Also count orbits by explicit enumeration.")
@click.option("--format", "fmt", type=_FORMATS, default="text", show_default=True)
def count(k: int, s: int, cross_check: bool, fmt: str) -> None:
    """Orbit counts for full boards modulo the board symmetries."""
    try:
        spec = build_board(k, s)
        report = burnside_orbits(spec)
        enumerated = enumerate_orbits(spec) if cross_check else None
    except ParameterError as exc:
        raise click.UsageError(str(exc)) from exc
    if fmt == "structured":
        doc = report.as_dict()
        if enumerated is not None:
            doc["enumerated_orbit_count_raw"] = enumerated
        click.echo(json.dumps(doc))
        return
    click.echo(report.render())
    if enumerated is not None:
        agreement = "agree" if enumerated == report.orbit_count_raw else "DISAGREE"
        click.echo(f"  enumerated orbits   {enumerated} ({agreement})")
        if enumerated != report.orbit_count_raw:
            sys.exit(1)


@main.command()
@click.option("--fixtures", "fixtures_path", default=None,
              help="Alternate fixture file (defaults to the packaged catalog).")
@click.option("--cache", envvar="PICARIA_CACHE", default=None)
@click.option("--format", "fmt", type=_FORMATS, default="text", show_default=True)
def verify(fixtures_path: str | None, cache: str | None, fmt: str) -> None:
    """Replay every proof fixture and check its claims. Exit 1 on failure."""
    spec = builtin_board()
    table = _get_table(spec.k, spec.s, cache)
    try:
        fixtures = (
            builtin_fixtures() if fixtures_path is None else load_fixture_file(fixtures_path)
        )
        reports = [replay(spec, table, fx) for fx in fixtures]
    except PicariaError as exc:
        raise click.UsageError(str(exc)) from exc

    failed = [r for r in reports if not r.passed]
    if fmt == "structured":
        click.echo(json.dumps({
            "fixtures": [
                {
                    "name": r.fixture.name,
                    "ref": r.fixture.ref,
                    "passed": r.passed,
                    "failures": [
                        {"claim": c.claim.describe(), "detail": c.detail}
                        for c in r.failures
                    ],
                }
                for r in reports
            ],
            "passed": len(reports) - len(failed),
            "failed": len(failed),
        }))
        sys.exit(1 if failed else 0)
    width = max(len(r.fixture.name) for r in reports)
    for r in reports:
        mark = "pass" if r.passed else "FAIL"
        click.echo(f"{mark}  {r.fixture.name:<{width}}  {r.fixture.ref}")
        for c in r.failures:
            click.echo(f"      failed claim [{c.claim.describe()}]: {c.detail}")
    click.echo(f"{len(reports) - len(failed)}/{len(reports)} fixtures passed")
    sys.exit(1 if failed else 0)


def _parse_range(text: str, flag: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition(":")
        low, high = int(lo), int(hi if hi else lo)
    except ValueError:
        raise click.UsageError(f"{flag} wants LO:HI, got {text!r}") from None
    if low > high:
        raise click.UsageError(f"{flag} range {text!r} is empty")
    return low, high


@main.command()
@click.option("--k-range", default="3:3", show_default=True, help="Inclusive LO:HI.")
@click.option("--s-range", default="3:7", show_default=True, help="Inclusive LO:HI.")
@click.option("--guard", type=int, default=500_000, show_default=True,
              help="Skip instances with more raw full boards than this.")
@click.option("--cache", envvar="PICARIA_CACHE", default=None)
@click.option("--format", "fmt", type=_FORMATS, default="text", show_default=True)
def sweep(k_range: str, s_range: str, guard: int, cache: str | None, fmt: str) -> None:
    """Solve a family of (k, s) games and tabulate root values."""
    k_lo, k_hi = _parse_range(k_range, "--k-range")
    s_lo, s_hi = _parse_range(s_range, "--s-range")
    rows = []
    for k in range(k_lo, k_hi + 1):
        for s in range(s_lo, s_hi + 1):
            n = 2 * s + 1
            if s < 3 or k < 3 or 2 * k >= n:
                rows.append({"k": k, "s": s, "skipped": "invalid parameters"})
                continue
            boards = math.comb(n, k) * math.comb(n - k, k)
            if boards > guard:
                rows.append({"k": k, "s": s, "skipped": f"{boards} raw boards exceed guard"})
                continue
            started = time.perf_counter()
            table = load_or_solve(k, s, cache, on_note=_echo_note)
            elapsed = time.perf_counter() - started
            root = table.root_value
            rows.append({
                "k": k, "s": s,
                "raw_full_boards": boards,
                "states": len(table),
                "root_kind": root.kind,
                "root_depth": root.depth,
                "seconds": round(elapsed, 3),
            })
    if fmt == "structured":
        click.echo(json.dumps({"sweep": rows}))
        return
    for row in rows:
        if "skipped" in row:
            click.echo(f"(k={row['k']}, s={row['s']}): skipped ({row['skipped']})")
            continue
        root = row["root_kind"] + ("" if row["root_depth"] is None else f"({row['root_depth']})")
        click.echo(
            f"(k={row['k']}, s={row['s']}): root {root:<9} "
            f"states {row['states']:>7}  raw boards {row['raw_full_boards']:>8}  "
            f"{row['seconds']:.2f}s"
        )


@main.command()
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--cache", envvar="PICARIA_CACHE", default=None)
@click.option("--session-log", default=None, help="Append-only JSON-lines event log.")
@click.option("--ui", "ui_dir", default=None,
              help="Directory with the built web client (frontend/dist), served at /.")
def serve(port: int, host: str, cache: str | None, session_log: str | None,
          ui_dir: str | None) -> None:
    """Run the HTTP game service until interrupted."""
    import uvicorn

    from .service import create_app

    app = create_app(session_log=session_log, cache_dir=cache, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port)


@main.command()
@click.option("-k", type=int, default=3, show_default=True)
@click.option("-s", type=int, default=4, show_default=True)
@click.option("--format", "fmt", type=_FORMATS, default="text", show_default=True)
def states(k: int, s: int, fmt: str) -> None:
    """Reachable-state statistics from forward closure."""
    try:
        spec = build_board(k, s)
    except ParameterError as exc:
        raise click.UsageError(str(exc)) from exc
    stats = reachable_states(spec)
    doc = {
        "k": k, "s": s,
        "canonical_placement": stats.canonical_placement,
        "canonical_sliding": stats.canonical_sliding,
        "raw_placement": stats.raw_placement,
        "raw_sliding": stats.raw_sliding,
        "valid_sliding_canonical_with_turn": stats.valid_sliding_canonical_with_turn,
        "raw_sliding_boards": stats.raw_sliding_boards,
    }
    if fmt == "structured":
        click.echo(json.dumps(doc))
        return
    click.echo(f"(k={k}, s={s}) reachable states")
    click.echo(f"  canonical: {stats.canonical_placement} placement + "
               f"{stats.canonical_sliding} sliding = {stats.canonical_total}")
    click.echo(f"  raw:       {stats.raw_placement} placement + "
               f"{stats.raw_sliding} sliding = {stats.raw_total}")
    click.echo(f"  all valid sliding positions (canonical, with turn): "
               f"{stats.valid_sliding_canonical_with_turn}")
    click.echo(f"  all raw sliding boards (no symmetry, no turn): "
               f"{stats.raw_sliding_boards}")


if __name__ == "__main__":
    main()
