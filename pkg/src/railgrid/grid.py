"""Lattice primitives: headings on the king-move grid, turn codes and piece
classification.

Headings are indexed 0..7 counterclockwise from east, in steps of 45
degrees.  Even indices move along an axis (unit step), odd indices move
diagonally.  A turn code is the multiple of 45 degrees between two
consecutive center-to-center steps; a half turn (code 4) is never legal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

# Unit king-move displacement for each heading index.
STEPS: tuple[tuple[int, int], ...] = (
    (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1),
)
STEP_INDEX = {v: i for i, v in enumerate(STEPS)}

#: signed turn codes legal in the standard 6-piece set
LEGAL_SIGNED = (0, 1, 2, -2, -1)
#: signed turn codes legal when the two sharper parabolic pieces are allowed
LEGAL_SIGNED_EXTENDED = (0, 1, 2, 3, -3, -2, -1)

MIDDLE = "middle"
VERTEX = "vertex"


class IllegalTurn(ValueError):
    """Raised for a turn code that no piece realizes."""


@dataclass(frozen=True)
class Direction:
    """A heading on the grid, one of the 8 king-move directions."""

    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index <= 7:
            raise ValueError(f"direction index out of range: {self.index}")

    @property
    def parity(self) -> str:
        """Where a piece boundary crossed along this heading sits: axis
        headings hit edge midpoints, diagonal headings hit vertices."""
        return MIDDLE if self.index % 2 == 0 else VERTEX

    @property
    def step(self) -> tuple[int, int]:
        return STEPS[self.index]


EAST = Direction(0)
NORTHEAST = Direction(1)
NORTH = Direction(2)
NORTHWEST = Direction(3)
WEST = Direction(4)
SOUTHWEST = Direction(5)
SOUTH = Direction(6)
SOUTHEAST = Direction(7)


@dataclass(frozen=True)
class TurnCode:
    """A legal angle between consecutive steps, as raw value in
    {0,1,2,3,5,6,7} and signed value in {0, +-1, +-2, +-3}."""

    raw: int

    def __post_init__(self) -> None:
        if self.raw == 4 or not 0 <= self.raw <= 7:
            raise IllegalTurn(f"illegal raw turn code: {self.raw}")

    @property
    def signed(self) -> int:
        return self.raw if self.raw <= 3 else self.raw - 8

    @classmethod
    def from_signed(cls, signed: int) -> "TurnCode":
        return cls(signed % 8)


def signed_turn(d_from: int, d_to: int) -> int:
    """Signed turn code between two heading indices (result in -3..4;
    4 denotes the illegal half turn)."""
    k = (d_to - d_from) % 8
    return k if k <= 4 else k - 8


def turn_apply(d: Direction, k: TurnCode) -> Direction:
    """Apply a turn to a heading."""
    return Direction((d.index + k.signed) % 8)


@dataclass(frozen=True)
class PieceType:
    """One of the piece shapes, 1..6 (7, 8 with the sharper parabolas).

    The entry/exit natures record whether each end sits on an edge
    midpoint or a square vertex.
    """

    type_id: int
    entry: str
    exit: str


PIECE_TYPES = {
    1: PieceType(1, MIDDLE, MIDDLE),
    2: PieceType(2, MIDDLE, MIDDLE),
    3: PieceType(3, VERTEX, VERTEX),
    4: PieceType(4, VERTEX, VERTEX),
    5: PieceType(5, MIDDLE, VERTEX),
    6: PieceType(6, VERTEX, MIDDLE),
    7: PieceType(7, MIDDLE, VERTEX),
    8: PieceType(8, VERTEX, MIDDLE),
}


def piece_id(d_in: int, d_out: int, extended: bool = False) -> int:
    """Signed piece code for a square entered along heading ``d_in`` and
    left along ``d_out`` (heading indices).

    The magnitude is the piece type, the sign the turn direction
    (positive = left).  Raises IllegalTurn for the half turn, and for
    |turn| = 3 unless ``extended``.
    """
    k = signed_turn(d_in, d_out)
    ak = abs(k)
    entry_mid = d_in % 2 == 0
    if ak == 0:
        tid = 1 if entry_mid else 3
    elif ak == 2:
        tid = 2 if entry_mid else 4
    elif ak == 1:
        tid = 5 if entry_mid else 6
    elif ak == 3 and extended:
        tid = 7 if entry_mid else 8
    else:
        raise IllegalTurn(f"no piece realizes a turn of {k}*pi/4")
    return -tid if k < 0 else tid


def classify_piece(d_in: Direction, d_out: Direction,
                   extended: bool = False) -> tuple[PieceType, int]:
    """Piece type and turn sign for a square crossed from heading ``d_in``
    to heading ``d_out``."""
    code = piece_id(d_in.index, d_out.index, extended)
    sign = 0 if signed_turn(d_in.index, d_out.index) == 0 else (1 if code > 0 else -1)
    return PIECE_TYPES[abs(code)], sign


def legal_signed_turns(extended: bool = False) -> Iterable[int]:
    return LEGAL_SIGNED_EXTENDED if extended else LEGAL_SIGNED
