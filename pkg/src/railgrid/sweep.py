"""Exhaustive enumeration of closed circuits by length.

The sweep fixes the base square at the origin, tries the 8 initial
headings, and extends by one of the 5 legal turns per square, pruning by
the Chebyshev distance back to the two possible final squares (1,0) and
(1,1).  The raw count of code words explored this way is 16 * 5^(n-2);
closures among them are then deduplicated in two stages (cyclic rebasing,
then the full symmetry group) and checked for physical feasibility.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass

from .assembly import is_constructible
from .circuit import (Circuit, canonical_direct, canonical_full)
from .curves import DEFAULT_RAIL_WIDTH
from .grid import LEGAL_SIGNED, STEP_INDEX, STEPS, signed_turn

#: enumerating more than this many code words requires an explicit opt-in
DEFAULT_BUDGET = 1_000_000_000

_END_SQUARES = ((1, 0), (1, 1))


class BudgetExceeded(RuntimeError):
    """The requested sweep is larger than the allowed search budget."""


@dataclass(frozen=True)
class SweepSpec:
    """Parameters of one enumeration run.

    ``copies_cap`` limits how many copies of each piece type the box
    provides (None for an unlimited supply); ``piece_types`` restricts the
    usable type ids (e.g. {1, 2} for a straights-and-arcs-only set).
    """

    n: int
    copies_cap: int | None = None
    piece_types: frozenset[int] | None = None
    e: float = DEFAULT_RAIL_WIDTH

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("sweep length must be at least 1")

    @property
    def possible(self) -> int:
        """Size of the swept code-word space."""
        if self.n == 1:
            return 2
        return 16 * 5 ** (self.n - 2)

    def admits(self, codes: tuple[int, ...]) -> bool:
        counts = Counter(abs(c) for c in codes)
        if self.piece_types is not None and any(
                t not in self.piece_types for t in counts):
            return False
        if self.copies_cap is not None and any(
                v > self.copies_cap for v in counts.values()):
            return False
        return True


@dataclass(frozen=True)
class CountTable:
    """One row of the census: counts after each narrowing stage."""

    n: int
    possible: int
    looping: int
    direct: int
    isometries: int
    constructible: int

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.n, self.possible, self.looping, self.direct,
                self.isometries, self.constructible)


def iter_looping_headings(n: int,
                          first_headings: tuple[int, ...] = tuple(range(8)),
                          ) -> Iterator[tuple[int, ...]]:
    """Yield the heading sequences of every closed length-n walk found by
    the sweep; sequence item i is the heading leaving square i+1.

    ``first_headings`` restricts the initial heading, which partitions
    the search space for parallel runs.
    """
    if n < 2:
        return
    for end in _END_SQUARES:
        d_last = STEP_INDEX[(-end[0], -end[1])]
        for d1 in first_headings:

            def go(center: tuple[int, int], dirs: list[int]) -> Iterator[tuple[int, ...]]:
                m = len(dirs)
                if m == n - 1:
                    if center == end:
                        k_n = signed_turn(dirs[-1], d_last)
                        k_1 = signed_turn(d_last, dirs[0])
                        if k_n in LEGAL_SIGNED and k_1 in LEGAL_SIGNED:
                            yield tuple(dirs) + (d_last,)
                    return
                rem = n - 1 - m
                for k in LEGAL_SIGNED:
                    nd = (dirs[-1] + k) % 8
                    nc = (center[0] + STEPS[nd][0], center[1] + STEPS[nd][1])
                    if max(abs(nc[0] - end[0]), abs(nc[1] - end[1])) <= rem - 1:
                        yield from go(nc, dirs + [nd])

            first = (STEPS[d1][0], STEPS[d1][1])
            dist = max(abs(first[0] - end[0]), abs(first[1] - end[1]))
            if dist <= n - 2 or (n == 2 and first == end):
                yield from go(first, [d1])


def circuit_from_headings(headings: tuple[int, ...]) -> Circuit:
    """Rebuild the based circuit whose outgoing headings are ``headings``."""
    centers = [(0, 0)]
    for d in headings[:-1]:
        dx, dy = STEPS[d]
        centers.append((centers[-1][0] + dx, centers[-1][1] + dy))
    return Circuit(tuple(centers))


def sweep(spec: SweepSpec, budget: int | None = DEFAULT_BUDGET,
          first_headings: tuple[int, ...] = tuple(range(8)),
          ) -> tuple[CountTable, dict[tuple[int, ...], Circuit]]:
    """Run the full census for one length.

    Returns the count row together with one representative circuit per
    symmetry class (keyed by canonical code word), so callers can render
    or re-check the survivors.  Raises :class:`BudgetExceeded` when the
    swept space is larger than ``budget``.
    """
    if budget is not None and spec.possible > budget:
        raise BudgetExceeded(
            f"sweep of length {spec.n} explores {spec.possible} code words, "
            f"over the budget of {budget}")
    looping = 0
    direct: dict[tuple[int, ...], Circuit] = {}
    for hs in iter_looping_headings(spec.n, first_headings):
        circuit = circuit_from_headings(hs)
        if not spec.admits(circuit.codes):
            continue
        looping += 1
        direct.setdefault(canonical_direct(circuit.codes), circuit)
    full: dict[tuple[int, ...], Circuit] = {}
    for key in sorted(direct):
        circuit = direct[key]
        full.setdefault(canonical_full(circuit.codes), circuit)
    constructible = sum(1 for c in full.values() if is_constructible(c, spec.e))
    table = CountTable(spec.n, spec.possible, looping, len(direct),
                       len(full), constructible)
    return table, full


def count_range(n_lo: int, n_hi: int, copies_cap: int | None = None,
                piece_types: frozenset[int] | None = None,
                budget: int | None = DEFAULT_BUDGET) -> list[CountTable]:
    """Census rows for every length in [n_lo, n_hi]."""
    rows = []
    for n in range(n_lo, n_hi + 1):
        spec = SweepSpec(n, copies_cap=copies_cap, piece_types=piece_types)
        rows.append(sweep(spec, budget)[0])
    return rows


def merge_shards(shards: list[tuple[int, dict[tuple[int, ...], Circuit]]],
                 spec: SweepSpec) -> CountTable:
    """Combine partial sweeps run over disjoint first-heading sets into
    the same row a single sweep would produce."""
    looping = sum(count for count, _ in shards)
    direct: dict[tuple[int, ...], Circuit] = {}
    for _, part in shards:
        for key, circuit in part.items():
            direct.setdefault(key, circuit)
    full: dict[tuple[int, ...], Circuit] = {}
    for key in sorted(direct):
        circuit = direct[key]
        full.setdefault(canonical_full(circuit.codes), circuit)
    constructible = sum(1 for c in full.values() if is_constructible(c, spec.e))
    return CountTable(spec.n, spec.possible, looping, len(direct),
                      len(full), constructible)


def sweep_shard(spec: SweepSpec, first_headings: tuple[int, ...],
                ) -> tuple[int, dict[tuple[int, ...], Circuit]]:
    """One shard of a partitioned sweep: the looping count and the
    direct-stage representatives for the given initial headings."""
    looping = 0
    direct: dict[tuple[int, ...], Circuit] = {}
    for hs in iter_looping_headings(spec.n, first_headings):
        circuit = circuit_from_headings(hs)
        if not spec.admits(circuit.codes):
            continue
        looping += 1
        direct.setdefault(canonical_direct(circuit.codes), circuit)
    return looping, direct


def _normalized_center_cycle(circuit: Circuit) -> frozenset[tuple[int, int]]:
    xs = [x for x, _ in circuit.centers]
    ys = [y for _, y in circuit.centers]
    x0, y0 = min(xs), min(ys)
    return frozenset((x - x0, y - y0) for x, y in circuit.centers)


_D4 = [(1, 0, 0, 1), (0, -1, 1, 0), (-1, 0, 0, -1), (0, 1, -1, 0),
       (1, 0, 0, -1), (-1, 0, 0, 1), (0, 1, 1, 0), (0, -1, -1, 0)]


def _d4_orbit_size(cells: frozenset[tuple[int, int]]) -> int:
    images = set()
    for a, b, c, d in _D4:
        img = [(a * x + b * y, c * x + d * y) for x, y in cells]
        x0 = min(x for x, _ in img)
        y0 = min(y for _, y in img)
        images.add(frozenset((x - x0, y - y0) for x, y in img))
    return len(images)


@dataclass(frozen=True)
class PolygonComparison:
    """Straights-and-arcs circuits versus self-avoiding grid polygons.

    ``classes`` counts symmetry classes of constructible circuits using
    only piece types 1 and 2; ``polygons`` expands each class whose
    squares are pairwise distinct by the size of its orbit under the
    square's point group, which reproduces the classical count of
    self-avoiding polygons of that perimeter up to translation.
    """

    n: int
    classes: int
    polygons: int


def polygon_comparison(n: int, budget: int | None = DEFAULT_BUDGET,
                       ) -> PolygonComparison:
    """Compare the census, restricted to straight and quarter-arc pieces,
    with self-avoiding polygon counts of perimeter n."""
    spec = SweepSpec(n, piece_types=frozenset({1, 2}))
    _, full = sweep(spec, budget)
    classes = 0
    polygons = 0
    seen: set[frozenset[tuple[int, int]]] = set()
    for circuit in full.values():
        if not is_constructible(circuit, spec.e):
            continue
        classes += 1
        if len(set(circuit.centers)) != circuit.n:
            continue
        cells = _normalized_center_cycle(circuit)
        if cells in seen:
            continue
        seen.add(cells)
        polygons += _d4_orbit_size(cells)
    return PolygonComparison(n, classes, polygons)
