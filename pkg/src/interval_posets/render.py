"""SVG drawing of a dissection on a circle.

Vertex ``k`` of the m-gon sits at angle ``90 - 360 (k-1)/m`` degrees; output is
byte-stable for a given dissection.
"""
from math import cos, radians, sin

SIZE = 512
RADIUS = 200
LABEL_RADIUS = 228


def _point(k, m, r):
    t = radians(90 - 360 * (k - 1) / m)
    # SVG y axis points down
    return SIZE / 2 + r * cos(t), SIZE / 2 - r * sin(t)


def _line(p, q, cls):
    return (f'  <line class="{cls}" x1="{p[0]:.3f}" y1="{p[1]:.3f}" '
            f'x2="{q[0]:.3f}" y2="{q[1]:.3f}"/>')


def svg_text(D) -> str:
    m = D.m
    pts = {k: _point(k, m, RADIUS) for k in range(1, m + 1)}
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        "  <style>",
        "    .outer { stroke: #000000; stroke-width: 2; }",
        "    .diagonal { stroke: #c0392b; stroke-width: 2; stroke-dasharray: 6 4; }",
        "    .vertex { fill: #000000; }",
        "    .label { font-family: sans-serif; font-size: 16px; text-anchor: middle; "
        "dominant-baseline: middle; }",
        "  </style>",
    ]
    outer = [(k, k + 1) for k in range(1, m)]
    if m > 2:
        outer.append((1, m))
    for i, j in outer:
        out.append(_line(pts[i], pts[j], "outer"))
    for i, j in sorted(D.diagonals):
        out.append(_line(pts[i], pts[j], "diagonal"))
    for k in range(1, m + 1):
        x, y = pts[k]
        lx, ly = _point(k, m, LABEL_RADIUS)
        out.append(f'  <circle class="vertex" cx="{x:.3f}" cy="{y:.3f}" r="4"/>')
        out.append(f'  <text class="label" x="{lx:.3f}" y="{ly:.3f}">{k}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(D, path=None) -> str:
    """Render ``D``; write it to ``path`` when given. Returns the SVG text."""
    text = svg_text(D)
    if path is not None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return text
