"""Text serialization of solve tables.

File layout, line oriented and bit-exact across platforms:

    PICARIA-SOLVE-TABLE v1
    k=3 s=4 entries=744
    sha256=<hex digest of the payload bytes>
    <cells> <mover> <W|L|D> [depth]
    ...

Entries are sorted by (cells, mover). The checksum covers exactly the
entry lines, newline-terminated, UTF-8 encoded. Import re-verifies the
header against the target board, the checksum, and spot-checks at least
1000 random entries for local minimax consistency before accepting.
"""

from __future__ import annotations

import hashlib
import io
import random
from pathlib import Path

from .board import BoardSpec
from .errors import TableChecksumError, TableFormatError, TableSpecMismatchError
from .position import (
    O,
    X,
    Position,
    apply_move,
    canonical_cells,
    legal_moves,
    to_notation,
    winner,
)
from .solver import DRAW, LOSS, WIN, GameValue, SolveTable

MAGIC = "PICARIA-SOLVE-TABLE"
FORMAT_VERSION = 1

_TAG = {WIN: "W", LOSS: "L", DRAW: "D"}
_KIND = {"W": WIN, "L": LOSS, "D": DRAW}

CONSISTENCY_SAMPLE = 1000


def cache_path(cache_dir, k: int, s: int) -> Path:
    return Path(cache_dir) / f"table-k{k}-s{s}-v{FORMAT_VERSION}.txt"


def load_or_solve(k: int, s: int, cache_dir=None, on_note=None) -> SolveTable:
    """Solve (k, s), going through the table cache directory when given.

    A cached file that fails validation is discarded and recomputed;
    ``on_note`` receives a one-line message when that happens.
    """
    from .board import build_board
    from .solver import solve

    spec = build_board(k, s)
    path = cache_path(cache_dir, k, s) if cache_dir else None
    if path is not None and path.exists():
        try:
            return import_table(path, spec)
        except TableFormatError as exc:
            if on_note is not None:
                on_note(f"ignoring cached table {path}: {exc}")
    table = solve(spec)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        export_table(table, path)
    return table


def _entry_line(key: str, val: GameValue) -> str:
    cells, mover = key.split(":")
    if val.kind == DRAW:
        return f"{cells} {mover} D"
    return f"{cells} {mover} {_TAG[val.kind]} {val.depth}"


def _payload(table: SolveTable) -> str:
    lines = [_entry_line(key, val) for key, val in sorted(table.values.items())]
    return "".join(line + "\n" for line in lines)


def export_table(table: SolveTable, destination) -> None:
    """Write the table to a path or text stream."""
    payload = _payload(table)
    digest = hashlib.sha256(payload.encode("utf-8")).hexdigest()
    header = (
        f"{MAGIC} v{FORMAT_VERSION}\n"
        f"k={table.spec.k} s={table.spec.s} entries={len(table.values)}\n"
        f"sha256={digest}\n"
    )
    text = header + payload
    if isinstance(destination, (str, Path)):
        # explicit newline so the file is bit-identical across platforms
        Path(destination).write_text(text, encoding="utf-8", newline="\n")
    else:
        destination.write(text)


def import_table(source, spec: BoardSpec) -> SolveTable:
    """Read and validate a table written by export_table."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    stream = io.StringIO(text)

    magic_line = stream.readline().rstrip("\n")
    if magic_line != f"{MAGIC} v{FORMAT_VERSION}":
        raise TableFormatError(f"bad magic/version line {magic_line!r}")
    params_line = stream.readline().rstrip("\n")
    try:
        fields = dict(item.split("=", 1) for item in params_line.split())
        k, s, entries = int(fields["k"]), int(fields["s"]), int(fields["entries"])
    except (ValueError, KeyError):
        raise TableFormatError(f"bad parameter line {params_line!r}") from None
    if (k, s) != (spec.k, spec.s):
        raise TableSpecMismatchError(
            f"table is for (k={k}, s={s}), board is (k={spec.k}, s={spec.s})"
        )
    checksum_line = stream.readline().rstrip("\n")
    if not checksum_line.startswith("sha256="):
        raise TableFormatError(f"bad checksum line {checksum_line!r}")
    expected_digest = checksum_line[len("sha256=") :]

    payload = stream.read()
    digest = hashlib.sha256(payload.encode("utf-8")).hexdigest()
    if digest != expected_digest:
        raise TableChecksumError("payload does not match its sha256 checksum")

    values: dict[str, GameValue] = {}
    for line in payload.splitlines():
        parts = line.split(" ")
        if len(parts) not in (3, 4):
            raise TableFormatError(f"bad entry line {line!r}")
        cells, mover, tag = parts[0], parts[1], parts[2]
        if len(cells) != spec.node_count or mover not in (X, O) or tag not in _KIND:
            raise TableFormatError(f"bad entry line {line!r}")
        try:
            depth = int(parts[3]) if len(parts) == 4 else None
            val = GameValue(_KIND[tag], depth)
        except ValueError as exc:
            raise TableFormatError(f"bad entry line {line!r}: {exc}") from None
        values[f"{cells}:{mover}"] = val
    if len(values) != entries:
        raise TableFormatError(f"expected {entries} entries, found {len(values)}")

    table = SolveTable(spec, values)
    _spot_check(table)
    return table


def _spot_check(table: SolveTable) -> None:
    """Verify minimax consistency on a random sample of entries."""
    spec = table.spec
    keys = sorted(table.values)
    rng = random.Random(len(keys))
    sample = keys if len(keys) <= CONSISTENCY_SAMPLE else rng.sample(keys, CONSISTENCY_SAMPLE)
    n = spec.node_count
    for key in sample:
        cells, mover = key[:n], key[n + 1 :]
        if canonical_cells(spec, cells) != cells:
            raise TableFormatError(f"entry {key!r} is not in canonical form")
        val = table.values[key]
        p = Position(cells, mover)
        if winner(spec, p) is not None:
            if val != GameValue(LOSS, 0):
                raise TableFormatError(f"finished position {key!r} labeled {val}")
            continue
        moves = legal_moves(spec, p)
        if not moves:
            if val != GameValue(LOSS, 0):
                raise TableFormatError(f"blockaded position {key!r} labeled {val}")
            continue
        child_values = []
        for m in moves:
            child = to_notation(apply_move(spec, p, m))
            ccells = canonical_cells(spec, child[:n])
            try:
                child_values.append(table.values[f"{ccells}:{child[n + 1:]}"])
            except KeyError:
                raise TableFormatError(
                    f"child of {key!r} missing from table"
                ) from None
        losses = [v.depth for v in child_values if v.kind == LOSS]
        if losses:
            expected = GameValue(WIN, min(losses) + 1)
        elif all(v.kind == WIN for v in child_values):
            expected = GameValue(LOSS, max(v.depth for v in child_values) + 1)
        else:
            expected = GameValue(DRAW)
        if val != expected:
            raise TableFormatError(
                f"entry {key!r} labeled {val}, children imply {expected}"
            )
