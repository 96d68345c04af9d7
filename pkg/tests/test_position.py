import random

import pytest

from picaria.errors import (
    IllegalMoveError,
    InvalidPositionError,
    NotationError,
    TerminalPositionError,
)
from picaria.position import (
    EMPTY,
    PLACEMENT,
    SLIDING,
    Move,
    Position,
    apply_move,
    canonicalize,
    initial_position,
    legal_moves,
    parse_notation,
    phase,
    to_notation,
    transform,
    winner,
)

LOOP = "..ooxxx.o:x"
RACE = "..o.xoxox:x"


def test_initial_position(spec34):
    p = initial_position(spec34)
    assert to_notation(p) == ".........:x"
    assert p.count("x") == p.count("o") == 0
    assert phase(spec34, p) == PLACEMENT


def test_placement_moves_cover_empty_cells(spec34):
    p = initial_position(spec34)
    moves = legal_moves(spec34, p)
    assert moves == [Move.place(i) for i in range(9)]


def test_loop_has_six_slides_three_keeping_the_center(spec34):
    # Lemma 2 enumerates the three center-keeping slides as games (A)-(C);
    # Lemma 4 analyses the other three, which leave the center.
    p = parse_notation(LOOP, spec34)
    moves = legal_moves(spec34, p)
    assert all(not m.is_place for m in moves)
    keeping = [m for m in moves if m.src != 4]
    leaving = [m for m in moves if m.src == 4]
    assert keeping == [Move.slide(5, 1), Move.slide(5, 7), Move.slide(6, 7)]
    assert leaving == [Move.slide(4, 0), Move.slide(4, 1), Move.slide(4, 7)]


def test_race_slides_match_brute_force(spec34):
    p = parse_notation(RACE, spec34)
    expected = []
    for src in range(9):
        if p.cells[src] != "x":
            continue
        for dst in spec34.neighbors[src]:
            if p.cells[dst] == EMPTY:
                expected.append(Move.slide(src, dst))
    moves = legal_moves(spec34, p)
    assert moves == sorted(expected, key=lambda m: m.sort_key())
    assert len(moves) == 4


def test_apply_place_sequence(spec34):
    p = initial_position(spec34)
    p = apply_move(spec34, p, Move.place(4))
    assert to_notation(p) == "....x....:o"
    p = apply_move(spec34, p, Move.place(2))
    assert to_notation(p) == "..o.x....:x"


def test_apply_slide_matches_printed_diagram(spec34):
    p = parse_notation(LOOP, spec34)
    p = apply_move(spec34, p, Move.slide(5, 1))
    assert to_notation(p) == ".xoox.x.o:o"


def test_move_conservation_and_alternation(spec34):
    rng = random.Random(7)
    p = initial_position(spec34)
    for _ in range(40):
        if winner(spec34, p) is not None:
            break
        moves = legal_moves(spec34, p)
        before = (p.count("x"), p.count("o"))
        mover = p.to_move
        m = rng.choice(moves)
        q = apply_move(spec34, p, m)
        after = (q.count("x"), q.count("o"))
        assert q.to_move != mover
        if m.is_place:
            gained = {"x": (1, 0), "o": (0, 1)}[mover]
            assert after == (before[0] + gained[0], before[1] + gained[1])
        else:
            assert after == before
        p = q


def test_illegal_moves_rejected(spec34):
    p = initial_position(spec34)
    with pytest.raises(IllegalMoveError):
        apply_move(spec34, p, Move.slide(0, 1))  # no sliding during placement
    full = parse_notation(LOOP, spec34)
    with pytest.raises(IllegalMoveError):
        apply_move(spec34, full, Move.place(0))  # no placing after placement
    with pytest.raises(IllegalMoveError):
        apply_move(spec34, full, Move.slide(2, 1))  # not the mover's stone
    with pytest.raises(IllegalMoveError):
        apply_move(spec34, full, Move.slide(6, 0))  # not adjacent
    with pytest.raises(IllegalMoveError):
        apply_move(spec34, full, Move.slide(4, 5))  # destination occupied


def test_winner_detection(spec34):
    assert winner(spec34, initial_position(spec34)) is None
    assert winner(spec34, Position("xxx......", "o")) == "x"
    assert winner(spec34, Position("o..o..o..", "x")) == "o"


@pytest.mark.parametrize("cells", [".ox.ox.ox", "o.xo.xo.x", ".xo.xo.xo"])
def test_double_win_boards_rejected(spec34, cells):
    with pytest.raises(InvalidPositionError):
        winner(spec34, Position(cells, "x"))


def test_terminal_position_has_no_moves(spec34):
    with pytest.raises(TerminalPositionError):
        legal_moves(spec34, Position("xxx...oo.", "o"))


def test_canonicalize_is_an_orbit_representative(spec34):
    rng = random.Random(3)
    for _ in range(50):
        p = random_position(spec34, rng)
        canonical, perm = canonicalize(spec34, p)
        assert transform(p.cells, perm) == canonical.cells
        assert canonical.to_move == p.to_move
        # idempotent, and identical across the whole orbit
        again, _ = canonicalize(spec34, canonical)
        assert again == canonical
        for g in spec34.symmetries:
            image = Position(transform(p.cells, g), p.to_move)
            assert canonicalize(spec34, image)[0] == canonical


def test_empty_board_is_its_own_representative(spec34):
    p = initial_position(spec34)
    canonical, perm = canonicalize(spec34, p)
    assert canonical == p
    assert perm == tuple(range(9))


def test_loop_and_theorem1_gameA_share_an_orbit(spec34):
    a, _ = canonicalize(spec34, parse_notation(LOOP, spec34))
    b, _ = canonicalize(spec34, parse_notation("oxo.x..ox:x", spec34))
    assert a == b


def test_symmetry_equivariance_of_moves(spec34):
    rng = random.Random(11)
    for _ in range(25):
        p = random_position(spec34, rng, live_only=True)
        base = {(m.src, m.dst) for m in legal_moves(spec34, p)}
        for g in spec34.symmetries:
            image = Position(transform(p.cells, g), p.to_move)
            mapped = {
                (None if src is None else g[src], g[dst]) for src, dst in base
            }
            assert {(m.src, m.dst) for m in legal_moves(spec34, image)} == mapped
            assert winner(spec34, image) == winner(spec34, p)


def test_notation_round_trip_on_random_positions(spec34):
    rng = random.Random(42)
    for _ in range(1000):
        p = random_position(spec34, rng)
        assert parse_notation(to_notation(p), spec34) == p


@pytest.mark.parametrize(
    "text",
    [
        "xxxx.....:o",        # too many x stones
        "x........:x",        # x placed, so o must move
        "xx.......:o",        # placement counts out of step
        "........:x",         # wrong length
        ".........:z",        # bad mover
        "....?....:x",        # bad cell
        ".ox.ox.ox:x",        # double win
    ],
)
def test_parse_rejects_invalid_notation(spec34, text):
    with pytest.raises((NotationError, InvalidPositionError)):
        parse_notation(text, spec34)


def test_phase_boundary(spec34):
    five = Position("xxoo.x...", "o")
    assert phase(spec34, five) == PLACEMENT
    six = Position("xxoo.xo..", "x")
    assert phase(spec34, six) == SLIDING


def random_position(spec, rng, live_only=False):
    """Random valid position: random consistent counts, then random cells."""
    k = spec.k
    while True:
        total = rng.randrange(0, 2 * k + 1)
        x_count = (total + 1) // 2
        o_count = total // 2
        if total == 2 * k:
            mover = rng.choice("xo")
        else:
            mover = "x" if x_count == o_count else "o"
        nodes = rng.sample(range(spec.node_count), total)
        cells = [EMPTY] * spec.node_count
        for i in nodes[:x_count]:
            cells[i] = "x"
        for i in nodes[x_count:]:
            cells[i] = "o"
        p = Position("".join(cells), mover)
        try:
            if winner(spec, p) is not None and live_only:
                continue
        except InvalidPositionError:
            continue
        return p
