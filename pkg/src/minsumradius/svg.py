"""SVG rendering of planar clusterings."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .clustering import Clustering
from .geometry import meb

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")


def render_svg(points, clustering: Clustering, *, title: str = "", size: int = 600) -> str:
    """Points colored by cluster, the cluster disks, and the separator lines.

    The view box is the enclosing disk of all points plus a 5% margin; the
    y axis is flipped so that y grows upward on screen.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or (len(pts) and pts.shape[1] != 2):
        raise ValueError("SVG output needs planar points")
    if len(pts):
        ball, _ = meb(pts)
        cx, cy = ball.center
        half = max(ball.radius, 1e-9) * 1.05
    else:
        cx = cy = 0.0
        half = 1.0
    x0, y0, w = cx - half, -(cy + half), 2 * half
    stroke = w / 400
    dot = w / 150
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{x0:.9g} {y0:.9g} {w:.9g} {w:.9g}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<rect x="{x0:.9g}" y="{y0:.9g}" width="{w:.9g}" height="{w:.9g}" fill="white"/>')
    for j, b in enumerate(clustering.balls):
        if b.center is None:
            continue
        color = PALETTE[j % len(PALETTE)]
        out.append(
            f'<circle cx="{b.center[0]:.9g}" cy="{-b.center[1]:.9g}" r="{max(b.radius, stroke):.9g}" '
            f'fill="{color}" fill-opacity="0.12" stroke="{color}" stroke-width="{stroke:.6g}"/>'
        )
    for sep in clustering.separators:
        u = np.asarray(sep.direction, dtype=float)
        normal = np.array([-u[1], u[0]])
        center = np.array([cx, cy])
        foot = center + (sep.offset - center @ u) * u
        a = foot - 2 * half * normal
        b = foot + 2 * half * normal
        out.append(
            f'<line x1="{a[0]:.9g}" y1="{-a[1]:.9g}" x2="{b[0]:.9g}" y2="{-b[1]:.9g}" '
            f'stroke="black" stroke-dasharray="{4 * stroke:.6g}" stroke-width="{stroke:.6g}"/>'
        )
    for i, p in enumerate(pts):
        color = PALETTE[int(clustering.assignment[i]) % len(PALETTE)]
        out.append(f'<circle cx="{p[0]:.9g}" cy="{-p[1]:.9g}" r="{dot:.6g}" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
