"""Deterministic SVG chord diagrams.

Point ``k`` of ``n + 1`` sits at angle 90 + k * 360 / (n + 1) degrees,
counterclockwise, so point 0 is at the top. Coordinates are printed with a
fixed precision so output is byte-stable.
"""

from __future__ import annotations

import math

from .chords import NCTree

SIZE = 400
RADIUS = 150.0
LABEL_RADIUS = 175.0
POINT_RADIUS = 4.0


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def point_xy(k: int, n: int, radius: float = RADIUS) -> tuple[float, float]:
    theta = math.radians(90.0 + k * 360.0 / (n + 1))
    c = SIZE / 2
    return c + radius * math.cos(theta), c - radius * math.sin(theta)


def render_svg(tree: NCTree) -> str:
    n = tree.n
    c = _fmt(SIZE / 2)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'  <circle class="rim" cx="{c}" cy="{c}" r="{_fmt(RADIUS)}" fill="none" stroke="#999999" stroke-width="1"/>',
        '  <g class="chords" stroke="#1f4e79" stroke-width="2">',
    ]
    for ch in tree.chords:
        x1, y1 = point_xy(ch.p, n)
        x2, y2 = point_xy(ch.q, n)
        lines.append(
            f'    <line class="chord" data-p="{ch.p}" data-q="{ch.q}" '
            f'x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
        )
    lines.append("  </g>")
    lines.append('  <g class="points" fill="#000000">')
    for k in range(n + 1):
        x, y = point_xy(k, n)
        lines.append(f'    <circle class="point" data-k="{k}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(POINT_RADIUS)}"/>')
    lines.append("  </g>")
    lines.append('  <g class="labels" font-family="sans-serif" font-size="16" text-anchor="middle">')
    for k in range(n + 1):
        x, y = point_xy(k, n, LABEL_RADIUS)
        lines.append(f'    <text class="label" x="{_fmt(x)}" y="{_fmt(y + 5)}">{k}</text>')
    lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
