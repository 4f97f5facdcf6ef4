"""Clockwise circular embeddings and their SVG / Graphviz renderings."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ParameterError
from .graph import Graph, check_ordering

VIEWBOX = 600
MARGIN = 50


@dataclass(frozen=True)
class CircularLayout:
    order: tuple[int, ...]
    positions: tuple[tuple[float, float], ...]  # indexed by rank in ``order``
    radius: float
    start_angle: float

    @property
    def n(self) -> int:
        return len(self.order)

    def angle(self, rank: int) -> float:
        return self.start_angle - 2.0 * math.pi * rank / self.n

    def position(self, v: int) -> tuple[float, float]:
        return self.positions[self.order.index(v)]


def circular_layout(g: Graph, order: Sequence[int] | None = None,
                    radius: float = 1.0, start_angle: float = math.pi / 2) -> CircularLayout:
    """Place ``order[k]`` at angle ``start_angle - 2*pi*k/n`` (clockwise)."""
    if order is None:
        order = list(g.vertices)
    order = check_ordering(order, g.n)
    if not radius > 0:
        raise ParameterError(f"radius must be positive, got {radius}")
    n = g.n
    pos = []
    for k in range(n):
        theta = start_angle - 2.0 * math.pi * k / n
        pos.append((radius * math.cos(theta), radius * math.sin(theta)))
    return CircularLayout(tuple(order), tuple(pos), float(radius), float(start_angle))


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _check_sizes(layout: CircularLayout, g: Graph) -> None:
    if layout.n != g.n:
        raise ParameterError(f"layout has {layout.n} vertices but graph has {g.n}")


def _svg_coords(layout: CircularLayout) -> dict[int, tuple[str, str]]:
    half = VIEWBOX / 2
    scale = (half - MARGIN) / layout.radius
    return {v: (_fmt(half + x * scale), _fmt(half - y * scale))
            for v, (x, y) in zip(layout.order, layout.positions)}


def emit_svg(layout: CircularLayout, g: Graph) -> str:
    _check_sizes(layout, g)
    xy = _svg_coords(layout)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{VIEWBOX}" height="{VIEWBOX}" viewBox="0 0 {VIEWBOX} {VIEWBOX}">',
        '<g class="edges" stroke="black" stroke-width="1.5">',
    ]
    for i, j in g.sorted_edges():
        (x1, y1), (x2, y2) = xy[i], xy[j]
        lines.append(f'<line class="edge" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    lines.append("</g>")
    lines.append('<g class="vertices" font-family="sans-serif" font-size="12" text-anchor="middle">')
    for v in sorted(g.vertices):
        x, y = xy[v]
        lines.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="12.000000" fill="white" stroke="black"/>')
        lines.append(f'<text class="label" x="{x}" y="{y}" dy="4">{v}</text>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_dot(layout: CircularLayout, g: Graph, scale: float = 100.0) -> str:
    """Graphviz text with pinned ``pos`` attributes (use with neato -n)."""
    _check_sizes(layout, g)
    lines = ["graph G {", '  node [shape=circle];']
    for v in sorted(g.vertices):
        x, y = layout.position(v)
        lines.append(f'  {v} [pos="{_fmt(x * scale)},{_fmt(y * scale)}!"];')
    for i, j in g.sorted_edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
