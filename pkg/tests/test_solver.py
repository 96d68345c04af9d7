import pytest

from picaria.board import build_board
from picaria.errors import TerminalPositionError, UnknownPositionError
from picaria.oracle import oracle_solve
from picaria.position import (
    Move,
    Position,
    apply_move,
    canonicalize,
    legal_moves,
    parse_notation,
    to_notation,
    winner,
)
from picaria.solver import (
    DRAW,
    LOSS,
    WIN,
    GameValue,
    best_moves,
    reachable_states,
    solve,
    value,
)

LOOP = "..ooxxx.o:x"
RACE = "..o.xoxox:x"
DUAL_LOOP = "..xxooo.x:o"
ZUGZWANG = "xo.oox.x.:x"


def test_root_is_a_draw(table34, spec34):
    assert value(table34, parse_notation(".........:x", spec34)) == GameValue(DRAW)


def test_race_is_a_win_in_three_plies(table34, spec34):
    v = value(table34, parse_notation(RACE, spec34))
    assert v == GameValue(WIN, 3)


def test_loop_is_not_a_win_for_x(table34, spec34):
    assert value(table34, parse_notation(LOOP, spec34)).kind != WIN


def test_dual_loop_is_not_a_loss_for_o(table34, spec34):
    assert value(table34, parse_notation(DUAL_LOOP, spec34)).kind != LOSS


def test_terminal_position_is_loss_zero(table34, spec34):
    v = value(table34, Position("xxxo.o.o.", "o"))
    assert v == GameValue(LOSS, 0)


def test_unreachable_position_raises(table34, spec34):
    # a full board where x holds a line but x is to move never occurs
    ghost = Position("xxxo.o.o.", "x")
    with pytest.raises(UnknownPositionError):
        value(table34, ghost)


def test_best_moves_from_race(table34, spec34):
    ranked = best_moves(spec34, table34, parse_notation(RACE, spec34))
    head_move, head_value = ranked[0]
    assert head_move == Move.slide(6, 3)
    assert head_value == GameValue(LOSS, 2)
    # ranked best-first: opponent losses, then draws, then opponent wins
    kinds = [v.kind for _, v in ranked]
    assert kinds == sorted(kinds, key=lambda kind: {LOSS: 0, DRAW: 1, WIN: 2}[kind])


def test_every_opening_move_preserves_the_draw(table34, spec34):
    p = parse_notation(".........:x", spec34)
    ranked = best_moves(spec34, table34, p)
    assert len(ranked) == 9
    assert all(v.kind == DRAW for _, v in ranked)


def test_zugzwang_every_move_loses(table34, spec34):
    p = parse_notation(ZUGZWANG, spec34)
    assert value(table34, p) == GameValue(LOSS, 2)
    for m, v in best_moves(spec34, table34, p):
        assert v.kind == WIN


def test_best_moves_rejects_finished_positions(table34, spec34):
    with pytest.raises(TerminalPositionError):
        best_moves(spec34, table34, Position("xxxo.o.o.", "o"))


@pytest.mark.parametrize("s,expect_win", [(3, True), (4, False), (5, True), (6, True), (7, True)])
def test_family_root_values(s, expect_win):
    table = solve(build_board(3, s))
    assert (table.root_value.kind == WIN) == expect_win


def test_oracle_equivalence_3_4(table34, spec34):
    oracle = oracle_solve(spec34)
    assert oracle.values == table34.values
    assert oracle.class_counts == table34.class_counts


def test_oracle_equivalence_3_3(table33, spec33):
    oracle = oracle_solve(spec33)
    assert oracle.values == table33.values
    assert oracle.class_counts == table33.class_counts


def test_oracle_equivalence_3_5():
    spec = build_board(3, 5)
    assert oracle_solve(spec).values == solve(spec).values


def test_minimax_local_consistency(table34, spec34):
    for key, val in table34.values.items():
        p = parse_notation(key, spec34)
        if winner(spec34, p) is not None:
            assert val == GameValue(LOSS, 0)
            continue
        moves = legal_moves(spec34, p)
        assert moves, f"blockade at {key} on (3,4)"
        child_values = []
        for m in moves:
            child, _ = canonicalize(spec34, apply_move(spec34, p, m))
            child_values.append(table34.values[to_notation(child)])
        losses = [v.depth for v in child_values if v.kind == LOSS]
        if val.kind == WIN:
            assert losses and min(losses) == val.depth - 1
        elif val.kind == LOSS:
            assert all(v.kind == WIN for v in child_values)
            assert max(v.depth for v in child_values) == val.depth - 1
        else:
            assert not losses
            assert any(v.kind == DRAW for v in child_values)


def test_symmetry_invariance_of_values(table34, spec34):
    from picaria.position import transform

    for key, val in table34.values.items():
        p = parse_notation(key, spec34)
        for g in spec34.symmetries:
            image = Position(transform(p.cells, g), p.to_move)
            assert value(table34, image) == val


def test_depth_parity(table34):
    for val in table34.values.values():
        if val.kind == WIN:
            assert val.depth % 2 == 1
        elif val.kind == LOSS:
            assert val.depth % 2 == 0


def test_no_reachable_blockade_on_3_4(table34, spec34):
    for key in table34.values:
        p = parse_notation(key, spec34)
        if winner(spec34, p) is None:
            assert legal_moves(spec34, p)


def test_reachable_statistics(spec34):
    stats = reachable_states(spec34)
    assert stats.valid_sliding_canonical_with_turn == 450
    assert stats.raw_sliding_boards == 1680
    assert stats.canonical_total == stats.canonical_placement + stats.canonical_sliding
    assert stats.raw_total > stats.canonical_total
    # forward closure never generates a double-win board
    for key in stats.canonical_states:
        winner(spec34, parse_notation(key, spec34))


def test_solve_covers_exactly_the_reachable_states(table34, spec34):
    stats = reachable_states(spec34)
    assert set(table34.values) == set(stats.canonical_states)


def test_blockade_is_a_loss_for_the_stuck_player():
    # (4,4) leaves a single empty node in the sliding phase and actually
    # reaches positions where the mover cannot slide; those must be
    # labeled LOSS(0). ((3,3) and (3,4) never block the mover.)
    spec = build_board(4, 4)
    table = solve(spec)
    found = 0
    for key, val in table.values.items():
        p = parse_notation(key, spec)
        if winner(spec, p) is None and not legal_moves(spec, p):
            found += 1
            assert val == GameValue(LOSS, 0)
    assert found > 0


def test_value_classes_count_up(table34):
    counts = table34.class_counts
    assert counts[WIN] + counts[LOSS] + counts[DRAW] == len(table34)
    assert counts[DRAW] > 0


def test_game_value_validation():
    with pytest.raises(ValueError):
        GameValue(WIN, 2)
    with pytest.raises(ValueError):
        GameValue(LOSS, 3)
    with pytest.raises(ValueError):
        GameValue(DRAW, 1)
    with pytest.raises(ValueError):
        GameValue("MAYBE", 1)
