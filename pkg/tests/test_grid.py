"""Headings, turn codes and piece classification."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from railgrid.grid import (EAST, LEGAL_SIGNED, LEGAL_SIGNED_EXTENDED, NORTH,
                           NORTHEAST, STEPS, Direction, IllegalTurn, TurnCode,
                           classify_piece, legal_signed_turns, piece_id,
                           signed_turn, turn_apply)

directions = st.integers(min_value=0, max_value=7)


def test_steps_are_the_eight_neighbors():
    assert len(set(STEPS)) == 8
    assert all(max(abs(dx), abs(dy)) == 1 for dx, dy in STEPS)


def test_direction_parity():
    assert EAST.parity == "middle"
    assert NORTHEAST.parity == "vertex"
    assert NORTH.parity == "middle"


@given(directions, directions)
def test_signed_turn_range(a, b):
    k = signed_turn(a, b)
    assert -3 <= k <= 4
    assert (a + k) % 8 == b


@given(directions, st.sampled_from(LEGAL_SIGNED_EXTENDED))
def test_turn_apply_round_trip(d, k):
    out = turn_apply(Direction(d), TurnCode.from_signed(k))
    assert signed_turn(d, out.index) == k


def test_half_turn_is_illegal():
    with pytest.raises(IllegalTurn):
        piece_id(0, 4)
    with pytest.raises(IllegalTurn):
        piece_id(3, 7, extended=True)


def test_sharp_turns_need_extended_mode():
    with pytest.raises(IllegalTurn):
        piece_id(0, 3)
    assert piece_id(0, 3, extended=True) == 7
    assert piece_id(1, 6, extended=True) == -8


@pytest.mark.parametrize("d_in,d_out,code", [
    (0, 0, 1),    # straight through edge midpoints
    (1, 1, 3),    # straight through vertices
    (0, 2, 2),    # left quarter arc, edge midpoints
    (2, 0, -2),   # right quarter arc
    (1, 3, 4),    # left quarter arc through vertices
    (0, 1, 5),    # half arc, middle entry
    (1, 2, 6),    # half arc, vertex entry
    (2, 1, -5),   # middle entry, right bend
])
def test_piece_codes(d_in, d_out, code):
    assert piece_id(d_in, d_out, extended=True) == code


@given(directions, directions)
def test_entry_nature_matches_parity(d_in, d_out):
    try:
        ptype, sign = classify_piece(Direction(d_in), Direction(d_out))
    except IllegalTurn:
        assume_illegal = abs(signed_turn(d_in, d_out)) in (3, 4)
        assert assume_illegal
        return
    assert ptype.entry == Direction(d_in).parity
    k = signed_turn(d_in, d_out)
    assert sign == (0 if k == 0 else (1 if k > 0 else -1))


def test_legal_turn_sets():
    assert tuple(legal_signed_turns()) == LEGAL_SIGNED
    assert set(legal_signed_turns(True)) == set(LEGAL_SIGNED_EXTENDED)
    assert 4 not in LEGAL_SIGNED_EXTENDED and -4 not in LEGAL_SIGNED_EXTENDED


@given(directions, directions)
def test_mirror_symmetry_of_codes(d_in, d_out):
    """Reflecting both headings across the horizontal axis negates the
    turn, so the piece code flips sign unless the piece is straight."""
    try:
        code = piece_id(d_in, d_out, extended=True)
    except IllegalTurn:
        return
    m_in, m_out = (-d_in) % 8, (-d_out) % 8
    assert piece_id(m_in, m_out, extended=True) == \
        (code if abs(code) in (1, 3) else -code)
