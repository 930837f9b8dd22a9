"""Hand-written SVG 1.1 for point sets, polygons and alpha-shape outlines.

Output is a pure function of the scene: no timestamps, fixed number
formatting, so reruns are byte-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple
from xml.sax.saxutils import escape, quoteattr

from .geom import Point

POINTS = "points"
POLYGON = "polygon"
LOOPS = "loops"

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")


@dataclass
class Layer:
    kind: str
    data: list
    stroke: str = "#000000"
    fill: str = "none"
    fill_opacity: float = 0.0
    dash: str = ""
    label: str = ""


@dataclass
class Scene:
    layers: List[Layer] = field(default_factory=list)

    def add_points(self, pts, **style) -> "Scene":
        self.layers.append(Layer(POINTS, list(pts), **style))
        return self

    def add_polygon(self, poly, **style) -> "Scene":
        self.layers.append(Layer(POLYGON, [list(poly)], **style))
        return self

    def add_loops(self, loops, **style) -> "Scene":
        self.layers.append(Layer(LOOPS, [list(l) for l in loops], **style))
        return self


def _num(v: float) -> str:
    s = format(v, ".10g")
    return "0" if s == "-0" else s


def _bbox(scene: Scene) -> Tuple[float, float, float, float]:
    xs, ys = [], []
    for layer in scene.layers:
        items = layer.data if layer.kind == POINTS else [p for ring in layer.data for p in ring]
        for x, y in items:
            xs.append(x)
            ys.append(y)
    if not xs:
        return 0.0, 0.0, 1.0, 1.0
    return min(xs), min(ys), max(xs), max(ys)


def render_svg(scene: Scene, width_px: int = 600) -> bytes:
    if not scene.layers:
        raise ValueError("scene has no layers")
    for layer in scene.layers:
        items = layer.data if layer.kind == POINTS else [p for ring in layer.data for p in ring]
        if not all(math.isfinite(c) for p in items for c in p):
            raise ValueError("scene contains non-finite coordinates")
    x0, y0, x1, y1 = _bbox(scene)
    w, h = x1 - x0, y1 - y0
    w = w if w > 0 else max(h, 1.0)
    h = h if h > 0 else max(w, 1.0)
    mx, my = 0.05 * w, 0.05 * h
    # SVG y grows downward; flip so the figure reads like a plot
    vx, vy, vw, vh = x0 - mx, -(y1 + my), w + 2 * mx, h + 2 * my
    size = max(vw, vh)
    radius = 0.005 * size
    stroke_w = 0.003 * size
    height_px = max(1, round(width_px * vh / vw))

    out = ['<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{width_px}" height="{height_px}" '
           f'viewBox="{_num(vx)} {_num(vy)} {_num(vw)} {_num(vh)}">']
    for k, layer in enumerate(scene.layers):
        title = f"<title>{escape(layer.label)}</title>" if layer.label else ""
        out.append(f'<g id="layer{k}" class={quoteattr(layer.kind)}>{title}')
        if layer.kind == POINTS:
            for x, y in layer.data:
                out.append(f'<circle cx="{_num(x)}" cy="{_num(-y)}" r="{_num(radius)}" '
                           f'fill={quoteattr(layer.stroke)}/>')
        elif layer.kind in (POLYGON, LOOPS):
            d = " ".join("M " + " L ".join(f"{_num(x)} {_num(-y)}" for x, y in ring) + " Z"
                         for ring in layer.data if ring)
            dash = f' stroke-dasharray="{_num(4 * stroke_w)} {_num(2 * stroke_w)}"' if layer.dash else ""
            out.append(f'<path d="{d}" fill={quoteattr(layer.fill)} '
                       f'fill-opacity="{_num(layer.fill_opacity)}" fill-rule="evenodd" '
                       f'stroke={quoteattr(layer.stroke)} stroke-width="{_num(stroke_w)}"'
                       f'{dash} stroke-linejoin="round"/>')
        else:
            raise ValueError(f"unknown layer kind {layer.kind!r}")
        out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
