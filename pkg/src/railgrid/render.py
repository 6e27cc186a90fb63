"""Deterministic SVG rendering of circuits.

The track view draws each piece's midline, the two rail edges offset by
half the rail width along the normals, a filled dot at every junction
sitting on a square vertex, and a chevron showing running direction.
The polygon view joins the square centers into a closed polyline.
Identical inputs always produce byte-identical documents.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .assembly import is_constructible
from .circuit import Circuit
from .curves import DEFAULT_RAIL_WIDTH, DEFAULT_SIDE_CM, realize_midline

#: samples per piece when flattening offset rails; endpoint tangents are
#: analytic, so adjacent rail ends meet exactly regardless of this value
_OFFSET_SAMPLES = 64


@dataclass(frozen=True)
class RenderConfig:
    """Scale, rail width, annotation length, and layer visibility flags."""

    scale: float = 60.0
    e: float = DEFAULT_RAIL_WIDTH
    side_cm: float = DEFAULT_SIDE_CM
    show: frozenset[str] = field(default_factory=lambda: frozenset(
        {"midline", "rails", "dots", "connectors", "grid"}))

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise ValueError("scale must be positive")


class NotConstructible(ValueError):
    """Refusal to render a circuit that cannot be physically assembled."""


def _fmt(x: float) -> str:
    # fixed precision keeps output byte-stable across runs
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _bbox(circuit: Circuit) -> tuple[int, int, int, int]:
    xs = [x for x, _ in circuit.centers]
    ys = [y for _, y in circuit.centers]
    return min(xs), min(ys), max(xs), max(ys)


class _Doc:
    def __init__(self, width: float, height: float):
        self.parts = [
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(width)}" height="{_fmt(height)}" '
            f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n']

    def add(self, element: str) -> None:
        self.parts.append(element + "\n")

    def finish(self) -> str:
        return "".join(self.parts) + "</svg>\n"


class _Frame:
    """Maps grid coordinates to document pixels (y axis flipped)."""

    def __init__(self, circuit: Circuit, scale: float, margin: float = 1.0):
        x0, y0, x1, y1 = _bbox(circuit)
        self.scale = scale
        self.ox = x0 - margin
        self.oy = y1 + margin
        self.width = (x1 - x0 + 2 * margin) * scale
        self.height = (y1 - y0 + 2 * margin) * scale

    def to_px(self, p: tuple[float, float]) -> tuple[float, float]:
        return ((p[0] - self.ox) * self.scale, (self.oy - p[1]) * self.scale)


def _midline_path(g, frame: _Frame) -> str:
    ax, ay = frame.to_px(g.a)
    bx, by = frame.to_px(g.b)
    if g.kind == "segment":
        tail = f"L {_fmt(bx)} {_fmt(by)}"
    elif g.kind == "arc":
        r = g.radius * frame.scale
        # quarter arcs only; figure out sweep sense from the tangent
        tx, ty = g.tangent(0.0)
        cx, cy = g.arc_center
        radial = (g.a[0] - cx, g.a[1] - cy)
        ccw = radial[0] * ty - radial[1] * tx > 0
        sweep_flag = 0 if ccw else 1  # pixel y axis is flipped
        tail = f"A {_fmt(r)} {_fmt(r)} 0 0 {sweep_flag} {_fmt(bx)} {_fmt(by)}"
    else:
        qx, qy = frame.to_px(g.center)
        tail = f"Q {_fmt(qx)} {_fmt(qy)} {_fmt(bx)} {_fmt(by)}"
    return f"M {_fmt(ax)} {_fmt(ay)} {tail}"


def _offset_polyline(g, frame: _Frame, offset: float) -> list[tuple[float, float]]:
    ts = np.linspace(0.0, 1.0, _OFFSET_SAMPLES)
    pts = g.points(ts)
    out = []
    for t, (x, y) in zip(ts, pts):
        tx, ty = g.tangent(float(t))
        out.append(frame.to_px((x - ty * offset, y + tx * offset)))
    return out


def _polyline_path(points: list[tuple[float, float]]) -> str:
    head = f"M {_fmt(points[0][0])} {_fmt(points[0][1])}"
    return head + "".join(f" L {_fmt(x)} {_fmt(y)}" for x, y in points[1:])


def to_svg(circuit: Circuit, cfg: RenderConfig = RenderConfig(),
           force: bool = False) -> str:
    """Track view of a circuit as an SVG 1.1 document.

    Non-constructible circuits are refused unless ``force`` is set (for
    diagnosing why an assembly fails).
    """
    if not force and not is_constructible(circuit, cfg.e):
        raise NotConstructible("circuit is not constructible; "
                               "pass force=True to render anyway")
    frame = _Frame(circuit, cfg.scale)
    doc = _Doc(frame.width, frame.height)
    geoms = [realize_midline(circuit.centers[i], circuit.headings[i - 1],
                             circuit.headings[i]) for i in range(circuit.n)]
    if "grid" in cfg.show:
        doc.add('<g stroke="#dddddd" stroke-width="1" fill="none">')
        x0, y0, x1, y1 = _bbox(circuit)
        for gx in range(x0 - 1, x1 + 2):
            a = frame.to_px((gx - 0.5, y0 - 1.5))
            b = frame.to_px((gx - 0.5, y1 + 1.5))
            doc.add(f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" '
                    f'x2="{_fmt(b[0])}" y2="{_fmt(b[1])}"/>')
        for gy in range(y0 - 1, y1 + 2):
            a = frame.to_px((x0 - 1.5, gy - 0.5))
            b = frame.to_px((x1 + 1.5, gy - 0.5))
            doc.add(f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" '
                    f'x2="{_fmt(b[0])}" y2="{_fmt(b[1])}"/>')
        doc.add("</g>")
    if "rails" in cfg.show:
        doc.add('<g class="rails" stroke="#555555" stroke-width="1.5" '
                'fill="none">')
        for g in geoms:
            for side in (cfg.e / 2, -cfg.e / 2):
                pts = _offset_polyline(g, frame, side)
                doc.add(f'<path d="{_polyline_path(pts)}"/>')
        doc.add("</g>")
    if "midline" in cfg.show:
        doc.add('<g class="midline" stroke="#1f77b4" stroke-width="2" '
                'fill="none">')
        for g in geoms:
            doc.add(f'<path d="{_midline_path(g, frame)}"/>')
        doc.add("</g>")
    if "dots" in cfg.show:
        doc.add('<g class="vertex-dots" fill="#e6b800">')
        for i in range(circuit.n):
            # the junction between piece i and piece i+1 sits at anchor
            # index headings[i]; odd anchors are square vertices
            if circuit.headings[i] % 2 == 1:
                g = geoms[i]
                x, y = frame.to_px(g.b)
                doc.add(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" '
                        f'r="{_fmt(0.06 * cfg.scale)}"/>')
        doc.add("</g>")
    if "connectors" in cfg.show:
        doc.add('<g class="connectors" stroke="#d62728" stroke-width="1.5" '
                'fill="none">')
        for g in geoms:
            x, y = g.point(0.5)
            tx, ty = g.tangent(0.5)
            tip = frame.to_px((x + 0.10 * tx, y + 0.10 * ty))
            left = frame.to_px((x - 0.05 * tx - 0.07 * ty,
                                y - 0.05 * ty + 0.07 * tx))
            right = frame.to_px((x - 0.05 * tx + 0.07 * ty,
                                 y - 0.05 * ty - 0.07 * tx))
            doc.add(f'<path d="M {_fmt(left[0])} {_fmt(left[1])} '
                    f'L {_fmt(tip[0])} {_fmt(tip[1])} '
                    f'L {_fmt(right[0])} {_fmt(right[1])}"/>')
        doc.add("</g>")
    doc.add(f"<!-- pieces: {circuit.n}; square side {_fmt(cfg.side_cm)} cm -->")
    return doc.finish()


def pieces_to_svg(pieces: list[tuple[tuple[int, int], int, int]],
                  head: tuple[tuple[int, int], int] | None = None,
                  cfg: RenderConfig = RenderConfig()) -> str:
    """Open-layout view used while a circuit is being designed.

    ``pieces`` are (square center, entry heading, exit heading) triples;
    ``head`` optionally marks the square and heading where the next piece
    would go.
    """
    centers = [c for c, _, _ in pieces]
    if head is not None:
        centers.append(head[0])
    if not centers:
        centers = [(0, 0)]
    class _Box:
        def __init__(self, cs):
            self.centers = tuple(cs)

    frame = _Frame(_Box(centers), cfg.scale)
    doc = _Doc(frame.width, frame.height)
    doc.add('<g class="midline" stroke="#1f77b4" stroke-width="2" '
            'fill="none">')
    for center, d_in, d_out in pieces:
        g = realize_midline(center, d_in, d_out)
        doc.add(f'<path d="{_midline_path(g, frame)}"/>')
    doc.add("</g>")
    if head is not None:
        hx, hy = frame.to_px((float(head[0][0]), float(head[0][1])))
        doc.add(f'<circle class="head" cx="{_fmt(hx)}" cy="{_fmt(hy)}" '
                f'r="{_fmt(0.12 * cfg.scale)}" fill="none" '
                'stroke="#d62728" stroke-width="2"/>')
    return doc.finish()


def to_polygon_view(circuit: Circuit,
                    cfg: RenderConfig = RenderConfig()) -> str:
    """Polygon view: the closed polyline through the square centers.

    Squares holding two pieces show both traversals of their center.
    """
    frame = _Frame(circuit, cfg.scale)
    doc = _Doc(frame.width, frame.height)
    pts = [frame.to_px((float(x), float(y))) for x, y in circuit.centers]
    path = _polyline_path(pts) + " Z"
    doc.add(f'<path d="{path}" stroke="#2ca02c" stroke-width="2" '
            'fill="none"/>')
    doc.add('<g fill="#2ca02c">')
    for x, y in pts:
        doc.add(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" '
                f'r="{_fmt(0.05 * cfg.scale)}"/>')
    doc.add("</g>")
    return doc.finish()
