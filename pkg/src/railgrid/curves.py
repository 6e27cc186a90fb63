"""Real-valued midline geometry inside a unit square.

Each piece's midline joins two of the 8 boundary anchor points (4 edge
midpoints, 4 vertices) of its square and is tangent, at both ends, to the
line through the square center.  Depending on the anchor pair this forces
a straight segment, a quarter circle, or a quadratic Bezier whose middle
control point is the square center.

Anchors are indexed 0..7 by angle from the square center, counterclockwise
from east; even indices are edge midpoints, odd indices are vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .grid import STEPS

#: sentinel curvature radius for straight midlines
INF_RADIUS = math.inf

#: rail width of the manufactured cross-section, as a fraction of the
#: square side (compatible with the classic wooden-train profile)
DEFAULT_RAIL_WIDTH = 0.18349

#: physical square side in cm implied by the published edge-gap figure
DEFAULT_SIDE_CM = 21.80


@dataclass(frozen=True)
class WidthConfig:
    """Rail width e (fraction of the square side) and the physical side
    length used only for rendering annotations."""

    e: float = DEFAULT_RAIL_WIDTH
    side_cm: float = DEFAULT_SIDE_CM

    def __post_init__(self) -> None:
        if not 0.0 < self.e < 0.5:
            raise ValueError(f"rail width must be in (0, 1/2): {self.e}")


def anchor_point(kappa: int) -> tuple[float, float]:
    """Coordinates of anchor ``kappa`` relative to the square center."""
    dx, dy = STEPS[kappa % 8]
    return (dx / 2.0, dy / 2.0)


def anchors_gap(k1: int, k2: int) -> int:
    return (k2 - k1) % 8


@dataclass(frozen=True)
class CurveGeometry:
    """A midline within one square: segment, circular arc or quadratic
    Bezier, with entry point ``a``, exit point ``b`` and square center
    ``center``.  Arc curves carry their own circle center and radius."""

    kind: str  # "segment" | "arc" | "bezier"
    a: tuple[float, float]
    b: tuple[float, float]
    center: tuple[float, float]
    arc_center: tuple[float, float] | None = None
    radius: float | None = None

    def point(self, t: float) -> tuple[float, float]:
        x, y = self.points(np.array([t]))[0]
        return (float(x), float(y))

    def points(self, t: np.ndarray) -> np.ndarray:
        """Sample the curve at parameters t in [0, 1], shape (n, 2)."""
        a = np.asarray(self.a, float)
        b = np.asarray(self.b, float)
        t = np.asarray(t, float)[:, None]
        if self.kind == "segment":
            return a + (b - a) * t
        if self.kind == "arc":
            c = np.asarray(self.arc_center, float)
            a0 = math.atan2(self.a[1] - c[1], self.a[0] - c[0])
            a1 = math.atan2(self.b[1] - c[1], self.b[0] - c[0])
            sweep = (a1 - a0 + math.pi) % (2 * math.pi) - math.pi
            ang = a0 + sweep * t
            return c + self.radius * np.hstack([np.cos(ang), np.sin(ang)])
        ctrl = np.asarray(self.center, float)
        return (1 - t) ** 2 * a + 2 * t * (1 - t) * ctrl + t ** 2 * b

    def tangent(self, t: float) -> tuple[float, float]:
        a = np.asarray(self.a, float)
        b = np.asarray(self.b, float)
        if self.kind == "segment":
            d = b - a
        elif self.kind == "arc":
            c = np.asarray(self.arc_center, float)
            p = np.asarray(self.point(t), float) - c
            a0 = math.atan2(self.a[1] - c[1], self.a[0] - c[0])
            a1 = math.atan2(self.b[1] - c[1], self.b[0] - c[0])
            sweep = (a1 - a0 + math.pi) % (2 * math.pi) - math.pi
            d = np.array([-p[1], p[0]]) * math.copysign(1.0, sweep)
        else:
            ctrl = np.asarray(self.center, float)
            d = 2 * (1 - t) * (ctrl - a) + 2 * t * (b - ctrl)
        n = math.hypot(*d)
        return (d[0] / n, d[1] / n)


def realize_anchor_path(kappa1: int, kappa2: int,
                        center: tuple[float, float] = (0.0, 0.0)) -> CurveGeometry:
    """Build the midline joining anchors kappa1 -> kappa2 of the square
    centered at ``center``.

    Neighboring anchors (gap 1 or 7) give the sharp parabolic midline that
    is only available in extended mode; coincident anchors are invalid.
    """
    gap = anchors_gap(kappa1, kappa2)
    if gap == 0:
        raise ValueError("anchor pair must be distinct")
    cx, cy = center
    ax, ay = anchor_point(kappa1)
    bx, by = anchor_point(kappa2)
    a = (cx + ax, cy + ay)
    b = (cx + bx, cy + by)
    same_nature = kappa1 % 2 == kappa2 % 2
    if gap == 4:
        return CurveGeometry("segment", a, b, center)
    if gap in (2, 6) and same_nature:
        # quarter circle; its center is the vector sum of the two anchor
        # offsets, which puts it on the perpendiculars at both ends
        oc = (cx + ax + bx, cy + ay + by)
        r = math.hypot(a[0] - oc[0], a[1] - oc[1])
        return CurveGeometry("arc", a, b, center, arc_center=oc, radius=r)
    # middle-to-vertex (or the sharp neighbor pair): quadratic Bezier
    # with the square center as middle control point
    return CurveGeometry("bezier", a, b, center)


def realize_midline(square_center: tuple[int, int], d_in: int,
                    d_out: int) -> CurveGeometry:
    """Midline of the piece in the square entered along heading index
    ``d_in`` and left along ``d_out``."""
    kappa1 = (d_in + 4) % 8
    kappa2 = d_out % 8
    return realize_anchor_path(kappa1, kappa2,
                               (float(square_center[0]), float(square_center[1])))


def min_curvature_radius(g: CurveGeometry) -> float:
    """Smallest radius of curvature along the midline."""
    if g.kind == "segment":
        return INF_RADIUS
    if g.kind == "arc":
        return float(g.radius)
    # quadratic Bezier: R(t) = |P'|^3 / |P' x P''|, with P'' constant;
    # the cross product is constant too, so minimize |P'| analytically
    a = np.asarray(g.a, float)
    b = np.asarray(g.b, float)
    c = np.asarray(g.center, float)
    u = c - a
    v = b - c
    cross = abs(2 * u[0] * 2 * v[1] - 2 * u[1] * 2 * v[0])
    if cross == 0.0:
        return INF_RADIUS

    def speed2(t: float) -> float:
        d = 2 * ((1 - t) * u + t * v)
        return float(d @ d)

    # |P'|^2 is a quadratic in t: minimize on [0, 1]
    w = v - u
    denom = float(w @ w)
    t_star = 0.0 if denom == 0 else min(1.0, max(0.0, float(-(u @ w)) / denom))
    s2 = min(speed2(0.0), speed2(1.0), speed2(t_star))
    return s2 ** 1.5 / cross


def _min_dist_sampled(p: np.ndarray, q: np.ndarray) -> tuple[float, int, int]:
    d2 = ((p[:, None, :] - q[None, :, :]) ** 2).sum(-1)
    ij = int(d2.argmin())
    i, j = divmod(ij, d2.shape[1])
    return math.sqrt(float(d2[i, j])), i, j


def pair_clearance(g1: CurveGeometry, g2: CurveGeometry,
                   samples: int = 1024, refine: int = 40) -> float:
    """Smallest distance between two midlines of the same square.

    Dense sampling followed by coordinate-wise golden-section refinement;
    returns 0 for curves that touch or cross.
    """
    t = np.linspace(0.0, 1.0, samples)
    d0, i, j = _min_dist_sampled(g1.points(t), g2.points(t))
    if d0 < 1e-12:
        return 0.0
    lo1, hi1 = max(0.0, t[i] - 2 / samples), min(1.0, t[i] + 2 / samples)
    lo2, hi2 = max(0.0, t[j] - 2 / samples), min(1.0, t[j] + 2 / samples)
    phi = (math.sqrt(5) - 1) / 2

    def dist(t1: float, t2: float) -> float:
        x1, y1 = g1.point(t1)
        x2, y2 = g2.point(t2)
        return math.hypot(x1 - x2, y1 - y2)

    t1 = (lo1 + hi1) / 2
    t2 = (lo2 + hi2) / 2
    for _ in range(refine):
        # golden-section in t1 with t2 fixed, then the converse
        a_, b_ = lo1, hi1
        while b_ - a_ > 1e-12:
            m1 = b_ - phi * (b_ - a_)
            m2 = a_ + phi * (b_ - a_)
            if dist(m1, t2) < dist(m2, t2):
                b_ = m2
            else:
                a_ = m1
        t1 = (a_ + b_) / 2
        a_, b_ = lo2, hi2
        while b_ - a_ > 1e-12:
            m1 = b_ - phi * (b_ - a_)
            m2 = a_ + phi * (b_ - a_)
            if dist(t1, m1) < dist(t1, m2):
                b_ = m2
            else:
                a_ = m1
        t2 = (a_ + b_) / 2
    return min(d0, dist(t1, t2))


def anchor_pairs(extended: bool = False) -> list[tuple[int, int]]:
    """All oriented anchor pairs realizable as midlines: 40 in the
    standard set, 56 with the sharp parabolas."""
    bad_gaps = () if extended else (1, 7)
    return [(a, b) for a in range(8) for b in range(8)
            if a != b and anchors_gap(a, b) not in bad_gaps]


def boundary_crossing(k1: int, k2: int, q1: int, q2: int) -> bool:
    """Whether anchor pair (q1, q2) interleaves with (k1, k2) around the
    square boundary; interleaved midlines necessarily intersect.

    Requires all four anchors pairwise distinct.
    """
    if len({k1, k2, q1, q2}) != 4:
        raise ValueError("anchors must be pairwise distinct")
    side_a = set()
    i = (k1 + 1) % 8
    while i != k2 % 8:
        side_a.add(i)
        i = (i + 1) % 8
    return (q1 % 8 in side_a) != (q2 % 8 in side_a)


@lru_cache(maxsize=2)
def sweep_pair_catalogue(extended: bool = False,
                         samples: int = 1024) -> dict[tuple[int, int, int, int],
                                                      tuple[bool, float]]:
    """Clearance table over every oriented same-square midline pair.

    Maps (kappa1, kappa2, kappa1', kappa2') to (crossing?, delta) where
    delta is the smallest point distance; pairs that share an anchor or
    whose midlines necessarily cross have delta 0 exactly.
    """
    pairs = anchor_pairs(extended)
    curves = {p: realize_anchor_path(*p) for p in pairs}
    out: dict[tuple[int, int, int, int], tuple[bool, float]] = {}
    memo: dict[tuple[int, int, int, int], tuple[bool, float]] = {}
    for p in pairs:
        for q in pairs:
            key = p + q
            unordered = (min(p, q) + max(p, q))
            if unordered in memo:
                out[key] = memo[unordered]
                continue
            if {p[0], p[1]} & {q[0], q[1]}:
                entry = (False, 0.0)
            elif boundary_crossing(p[0], p[1], q[0], q[1]):
                entry = (True, 0.0)
            else:
                entry = (False, pair_clearance(curves[p], curves[q],
                                               samples=samples))
            memo[unordered] = entry
            out[key] = entry
    return out


def catalogue_min_clearance(extended: bool = False) -> float:
    """Smallest positive clearance in the catalogue; equals (sqrt(2)-1)/2
    for the standard piece set."""
    cat = sweep_pair_catalogue(extended)
    return min(d for crossing, d in cat.values() if not crossing and d > 0)
