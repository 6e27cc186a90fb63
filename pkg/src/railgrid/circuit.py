"""Closed circuits on the square grid and their symmetry classes.

A circuit of length n visits squares c_1..c_n (each step to one of the 8
neighbors), returns to c_1, and is C1-smooth: consecutive headings differ
by at most 3/8 of a turn, and the about-face is never allowed.  A circuit
is stored by its square centers; headings, turn codes and piece codes are
all derived.

Two canonicalization stages are provided:

* ``canonical_direct`` identifies circuits equal up to a cyclic relabeling
  of the starting piece;
* ``canonical_full`` additionally quotients by mirror symmetry and by
  running direction, i.e. by the four-element group generated by a
  reflection and the reversal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .grid import STEP_INDEX, STEPS, piece_id, signed_turn

#: running-direction reversal on signed piece codes: symmetric pieces map
#: to themselves (up to sign of the turn), asymmetric pieces swap the
#: nature of their two ends
_REVERSE_MAP = {5: -6, -5: 6, 6: -5, -6: 5, 7: -8, -7: 8, 8: -7, -8: 7}

CanonicalKey = tuple[int, ...]


def _headings(centers: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    n = len(centers)
    out = []
    for i in range(n):
        x1, y1 = centers[i]
        x2, y2 = centers[(i + 1) % n]
        step = (x2 - x1, y2 - y1)
        if step not in STEP_INDEX:
            raise ValueError(f"squares {centers[i]} -> {centers[(i + 1) % n]} "
                             "are not neighbors")
        out.append(STEP_INDEX[step])
    return tuple(out)


@dataclass(frozen=True)
class Circuit:
    """An oriented, based circuit given by its sequence of square centers.

    ``headings[i]`` is the heading leaving square i, ``codes[i]`` the
    signed piece code of square i (formed by the heading entering it and
    the heading leaving it).
    """

    centers: tuple[tuple[int, int], ...]
    extended: bool = False
    headings: tuple[int, ...] = field(init=False)
    codes: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        centers = tuple(tuple(c) for c in self.centers)
        object.__setattr__(self, "centers", centers)
        if len(centers) < 2:
            raise ValueError("a circuit needs at least two squares")
        hs = _headings(centers)
        object.__setattr__(self, "headings", hs)
        n = len(centers)
        codes = tuple(piece_id(hs[i - 1], hs[i], self.extended)
                      for i in range(n))
        object.__setattr__(self, "codes", codes)

    @property
    def n(self) -> int:
        return len(self.centers)

    @property
    def turns(self) -> tuple[int, ...]:
        """Signed turn codes; turns[i] is the turn taken inside square i."""
        n = self.n
        return tuple(signed_turn(self.headings[i - 1], self.headings[i])
                     for i in range(n))

    def inventory(self) -> "Inventory":
        return Inventory.from_codes(self.codes)

    def rebase(self, shift: int) -> "Circuit":
        """The same circuit, restarted ``shift`` squares later."""
        n = self.n
        return Circuit(tuple(self.centers[(i + shift) % n] for i in range(n)),
                       self.extended)

    def mirrored(self) -> "Circuit":
        """Reflection across the horizontal axis through the base square."""
        x0, y0 = self.centers[0]
        return Circuit(tuple((x, 2 * y0 - y) for x, y in self.centers),
                       self.extended)

    def reversed(self) -> "Circuit":
        """The same track run in the opposite direction."""
        n = self.n
        return Circuit(tuple(self.centers[-i % n] for i in range(n)),
                       self.extended)


@dataclass(frozen=True)
class Inventory:
    """Multiset of required pieces, keyed by signed piece code."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_codes(cls, codes: tuple[int, ...]) -> "Inventory":
        c = Counter(codes)
        return cls(tuple(sorted(c.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def total(self) -> int:
        return sum(v for _, v in self.counts)

    def piece_types(self) -> dict[int, int]:
        """Counts by unsigned type id (left and right bends pooled)."""
        out: Counter[int] = Counter()
        for code, k in self.counts:
            out[abs(code)] += k
        return dict(sorted(out.items()))


def build_circuit(start: tuple[int, int], first_heading: int,
                  turns: list[int], extended: bool = False) -> Circuit:
    """Assemble a circuit from a base square, an initial heading and the
    signed turns taken in squares 2..n then back into square 1.

    ``turns[i]`` is applied before leaving the (i+2)-nd square, so an
    n-square circuit takes n-1 turn entries; the final turn (inside the
    base square) is implied by closure.  Raises if the walk does not
    return to ``start`` or any turn is illegal.
    """
    x, y = start
    heading = first_heading % 8
    centers = [tuple(start)]
    for t in [0] + list(turns):
        heading = (heading + t) % 8
        dx, dy = STEPS[heading]
        x, y = x + dx, y + dy
        centers.append((x, y))
    last = centers.pop()
    if last != tuple(start):
        raise ValueError(f"walk ends at {last}, not at the start {start}")
    return Circuit(tuple(centers), extended)


def mirror_codes(codes: tuple[int, ...]) -> tuple[int, ...]:
    """Signed piece codes of a mirror image: every bend flips handedness."""
    return tuple(-c if abs(c) != 1 and abs(c) != 3 else c for c in codes)


def reverse_codes(codes: tuple[int, ...]) -> tuple[int, ...]:
    """Signed piece codes of the reversed running direction."""
    out = []
    for c in reversed(codes):
        if abs(c) in (2, 4):
            out.append(-c)
        elif abs(c) in (5, 6, 7, 8):
            out.append(_REVERSE_MAP[c])
        else:
            out.append(c)
    return tuple(out)


def _cyclic_min(codes: tuple[int, ...]) -> tuple[int, ...]:
    n = len(codes)
    return min(codes[i:] + codes[:i] for i in range(n))


def canonical_direct(circuit: Circuit | tuple[int, ...]) -> CanonicalKey:
    """Canonical key under cyclic rebasing only."""
    codes = circuit.codes if isinstance(circuit, Circuit) else tuple(circuit)
    return _cyclic_min(codes)


def canonical_full(circuit: Circuit | tuple[int, ...]) -> CanonicalKey:
    """Canonical key under rebasing, mirror symmetry and reversal."""
    codes = circuit.codes if isinstance(circuit, Circuit) else tuple(circuit)
    variants = (codes, mirror_codes(codes), reverse_codes(codes),
                reverse_codes(mirror_codes(codes)))
    return min(_cyclic_min(v) for v in variants)
