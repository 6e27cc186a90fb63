"""Randomized construction of large circuits.

Exhaustive enumeration becomes infeasible beyond a dozen squares, but
individual large circuits can still be found: draw q random open paths of
r pieces, keep those staying inside a box of radius R, and exhaustively
search the s-piece completions back to the origin (with N = r + s).
Survivors go through the usual inventory, symmetry and feasibility
filters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .assembly import is_constructible
from .circuit import Circuit, canonical_full
from .grid import LEGAL_SIGNED, STEP_INDEX, STEPS, signed_turn
from .sweep import SweepSpec


@dataclass(frozen=True)
class RandomParams:
    """Search parameters: N = r + s pieces, q prefixes, box radius R."""

    r: int
    s: int
    q: int
    R: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.r < 1 or self.s < 1:
            raise ValueError("prefix and suffix lengths must be at least 1")
        if self.q < 1:
            raise ValueError("need at least one prefix draw")
        if self.R < 1:
            raise ValueError("box radius must be at least 1")

    @property
    def n(self) -> int:
        return self.r + self.s


def _prefix_rng(seed: int, index: int) -> random.Random:
    # one independent, platform-stable stream per prefix index
    return random.Random(f"{seed}:{index}")


def random_prefix(r: int, rng: random.Random) -> tuple[int, ...]:
    """Headings of a random open path of r pieces from the origin: a
    uniform first heading followed by uniform legal turns."""
    if r < 1:
        raise ValueError("prefix length must be at least 1")
    headings = [rng.randrange(8)]
    for _ in range(r - 1):
        headings.append((headings[-1] + rng.choice(LEGAL_SIGNED)) % 8)
    return tuple(headings)


def path_centers(headings: tuple[int, ...]) -> list[tuple[int, int]]:
    """Squares visited by a path starting at the origin; one more entry
    than headings (the open endpoint)."""
    cs = [(0, 0)]
    for d in headings:
        dx, dy = STEPS[d]
        cs.append((cs[-1][0] + dx, cs[-1][1] + dy))
    return cs


def close_suffix(prefix: tuple[int, ...], s: int) -> list[tuple[int, ...]]:
    """All legal s-piece completions of a prefix back to the origin.

    The prefix gives the headings of the first r pieces; each returned
    tuple is the full heading sequence of a closed (r+s)-circuit, in the
    order the suffix search finds them.
    """
    if s < 1:
        raise ValueError("suffix length must be at least 1")
    cs = path_centers(prefix)
    start = cs[-1]
    out: list[tuple[int, ...]] = []

    def go(center: tuple[int, int], dirs: list[int]) -> None:
        m = len(dirs)
        if m == s:
            if center != (0, 0):
                return
            k_close = signed_turn(dirs[-1], prefix[0])
            if k_close in LEGAL_SIGNED:
                out.append(tuple(prefix) + tuple(dirs))
            return
        last = dirs[-1] if dirs else prefix[-1]
        rem = s - m
        for k in LEGAL_SIGNED:
            nd = (last + k) % 8
            nc = (center[0] + STEPS[nd][0], center[1] + STEPS[nd][1])
            if max(abs(nc[0]), abs(nc[1])) <= rem - 1:
                go(nc, dirs + [nd])

    if max(abs(start[0]), abs(start[1])) <= s:
        go(start, [])
    return out


def _in_box(centers: list[tuple[int, int]], radius: int) -> bool:
    return all(max(abs(x), abs(y)) < radius for x, y in centers)


def build_random(params: RandomParams, copies_cap: int | None = None,
                 piece_types: frozenset[int] | None = None) -> list[Circuit]:
    """Run the randomized search and return the distinct constructible
    circuits found, order-stable and fully determined by the seed."""
    spec = SweepSpec(params.n, copies_cap=copies_cap,
                     piece_types=piece_types)
    seen: set[tuple[int, ...]] = set()
    out: list[Circuit] = []
    for i in range(params.q):
        rng = _prefix_rng(params.seed, i)
        prefix = random_prefix(params.r, rng)
        if not _in_box(path_centers(prefix), params.R):
            continue
        for headings in close_suffix(prefix, params.s):
            centers = tuple(path_centers(headings)[:-1])
            try:
                circuit = Circuit(centers)
            except ValueError:
                continue
            if not spec.admits(circuit.codes):
                continue
            key = canonical_full(circuit.codes)
            if key in seen:
                continue
            seen.add(key)
            if is_constructible(circuit, spec.e):
                out.append(circuit)
    return out
