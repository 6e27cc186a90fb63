"""Physical feasibility of a circuit laid out with rigid rail pieces.

A combinatorially closed circuit can still be impossible to assemble:
two pieces may claim the same anchor point on the tiling, or two pieces
crossing the same square may intersect or sit closer than the rail width
allows.  ``is_constructible`` runs all three checks.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from .circuit import Circuit
from .curves import (DEFAULT_RAIL_WIDTH, boundary_crossing,
                     sweep_pair_catalogue)
from .grid import STEPS


def square_anchors(circuit: Circuit) -> list[tuple[int, int]]:
    """Per square, the (entry, exit) anchor indices of its piece.

    The entry anchor faces back along the previous heading; the exit
    anchor is the heading out.
    """
    hs = circuit.headings
    n = circuit.n
    return [((hs[i - 1] + 4) % 8, hs[i]) for i in range(n)]


def anchor_lattice_point(center: tuple[int, int], kappa: int) -> tuple[int, int]:
    """Anchor position in doubled coordinates, so edge midpoints and
    vertices are exact integers."""
    dx, dy = STEPS[kappa % 8]
    return (2 * center[0] + dx, 2 * center[1] + dy)


def occupancy_map(circuit: Circuit) -> dict[tuple[int, int], list[int]]:
    """Square center -> indices of the pieces occupying it."""
    occ: dict[tuple[int, int], list[int]] = defaultdict(list)
    for i, c in enumerate(circuit.centers):
        occ[c].append(i)
    return dict(occ)


def endpoint_sharing_violation(circuit: Circuit) -> tuple[int, int] | None:
    """First pair of pieces with an illegal shared anchor point, or None.

    Consecutive pieces legitimately share the joint between them but
    nothing else; any shared anchor between non-consecutive pieces is a
    conflict.
    """
    n = circuit.n
    anc = square_anchors(circuit)
    pts = [(anchor_lattice_point(circuit.centers[i], anc[i][0]),
            anchor_lattice_point(circuit.centers[i], anc[i][1]))
           for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            contiguous = j - i == 1 or (i == 0 and j == n - 1)
            shared = set(pts[i]) & set(pts[j])
            if contiguous:
                if len(shared) > 1:
                    return (i, j)
            elif shared:
                return (i, j)
    return None


def pair_crossing(anchors_a: tuple[int, int], anchors_b: tuple[int, int]) -> bool:
    """Whether two midlines of the same square necessarily intersect,
    decided by how their anchors interleave around the boundary."""
    return boundary_crossing(anchors_a[0], anchors_a[1],
                             anchors_b[0], anchors_b[1])


@dataclass(frozen=True)
class ConstructibilityReport:
    """Outcome of the feasibility checks with the first offending pair."""

    ok: bool
    reason: str = ""
    pieces: tuple[int, int] | None = None


def check_constructible(circuit: Circuit,
                        e: float = DEFAULT_RAIL_WIDTH) -> ConstructibilityReport:
    """Full feasibility check: endpoint conflicts, same-square crossings,
    and same-square clearance at least the rail width ``e``."""
    bad = endpoint_sharing_violation(circuit)
    if bad is not None:
        return ConstructibilityReport(False, "shared-anchor", bad)
    anc = square_anchors(circuit)
    catalogue = sweep_pair_catalogue(circuit.extended)
    for idxs in occupancy_map(circuit).values():
        for a, b in itertools.combinations(idxs, 2):
            crossing, delta = catalogue[anc[a] + anc[b]]
            if crossing:
                return ConstructibilityReport(False, "crossing", (a, b))
            if delta < e:
                return ConstructibilityReport(False, "clearance", (a, b))
    return ConstructibilityReport(True)


def is_constructible(circuit: Circuit, e: float = DEFAULT_RAIL_WIDTH) -> bool:
    return check_constructible(circuit, e).ok
