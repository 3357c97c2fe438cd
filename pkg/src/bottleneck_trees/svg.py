"""Standalone SVG drawings of point sets with tree overlays."""
from __future__ import annotations

from typing import Sequence

from .emst import Tree
from .geometry import PointSet

CANVAS = 600.0
PALETTE = {
    "emst": "#4d4d4d",
    "degree4": "#1f77b4",
    "degree3": "#d62728",
    "degree2": "#2ca02c",
    "exact": "#9467bd",
}
FALLBACK = ("#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(ps: PointSet, trees: Sequence[tuple[Tree, str]] = ()) -> str:
    """SVG text: one circle per point and one ``<g>`` of line segments per tree.

    The bounding box is padded by 5% of its larger side; y grows upwards as in
    the input coordinates.
    """
    xy = ps.coords
    lo, hi = xy.min(axis=0), xy.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1]))
    if span == 0:
        span = 1.0
    pad = 0.05 * span
    x0, y0 = float(lo[0]) - pad, float(lo[1]) - pad
    w = float(hi[0] - lo[0]) + 2 * pad
    h = float(hi[1] - lo[1]) + 2 * pad
    k = CANVAS / max(w, h)
    W, H = w * k, h * k

    def sx(x):
        return (x - x0) * k

    def sy(y):
        return H - (y - y0) * k

    r = max(2.0, min(6.0, CANVAS / (4.0 * max(ps.n, 1) ** 0.5)))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(W)}" height="{_fmt(H)}" '
        f'viewBox="0 0 {_fmt(W)} {_fmt(H)}">',
        "<style>",
        "circle.point { fill: #000000; }",
        "g.tree line { stroke-width: 2; stroke-linecap: round; fill: none; }",
    ]
    styles = []
    for _, style in trees:
        if style not in styles:
            styles.append(style)
    for i, style in enumerate(styles):
        color = PALETTE.get(style, FALLBACK[i % len(FALLBACK)])
        out.append(f"g.tree.{style} line {{ stroke: {color}; }}")
    out.append("</style>")
    out.append(f'<rect x="0" y="0" width="{_fmt(W)}" height="{_fmt(H)}" fill="#ffffff"/>')
    for i, (t, style) in enumerate(trees):
        out.append(f'<g class="tree {style}" id="layer{i}">')
        for a, b in t.edges:
            out.append(
                f'<line x1="{_fmt(sx(xy[a, 0]))}" y1="{_fmt(sy(xy[a, 1]))}" '
                f'x2="{_fmt(sx(xy[b, 0]))}" y2="{_fmt(sy(xy[b, 1]))}"/>'
            )
        out.append("</g>")
    out.append('<g class="points">')
    for i, (x, y) in enumerate(xy):
        out.append(f'<circle class="point" cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="{_fmt(r)}"><title>{i}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
