"""Static SVG drawings of polygon dissections."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from fusscat.geometry import Dissection

SIZE = 240
MARGIN = 20


def vertex_positions(m: int, size: int = SIZE) -> list[tuple[float, float]]:
    """Unit-circle layout scaled to the canvas: vertex 0 at the top, labels counterclockwise."""
    radius = size / 2 - MARGIN
    cx = cy = size / 2
    pts = []
    for v in range(m):
        theta = math.pi / 2 + 2 * math.pi * v / m
        # SVG y grows downward
        pts.append((round(cx + radius * math.cos(theta), 3), round(cy - radius * math.sin(theta), 3)))
    return pts


def dissection_svg(d: Dissection, size: int = SIZE, labels: bool = True) -> str:
    pts = vertex_positions(d.m, size)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>{escape(d.serialize())}</title>",
    ]
    if d.m == 2:
        (x0, y0), (x1, y1) = pts
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="black" stroke-width="2"/>')
    else:
        poly = " ".join(f"{x},{y}" for x, y in pts)
        out.append(f'<polygon points="{poly}" fill="#eef4fb" stroke="black" stroke-width="2"/>')
    for i, j in d.diagonals:
        (x0, y0), (x1, y1) = pts[i], pts[j]
        out.append(
            f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#1f3f8f" stroke-width="1.5"/>'
        )
    if labels:
        c = size / 2
        for v, (x, y) in enumerate(pts):
            lx = round(c + (x - c) * 1.12, 3)
            ly = round(c + (y - c) * 1.12 + 4, 3)
            out.append(
                f'<text x="{lx}" y="{ly}" font-size="10" text-anchor="middle" '
                f'font-family="sans-serif">{v}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def svg_filename(d: Dissection) -> str:
    body = "_".join(f"{i}-{j}" for i, j in d.diagonals) or "none"
    return f"m{d.m}_{body}.svg"
