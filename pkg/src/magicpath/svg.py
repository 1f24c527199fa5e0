"""SVG figures: the traveler's trajectory over the grid and the distance pattern."""

from __future__ import annotations

import math
from typing import Sequence

from .square import Square
from .trajectory import city_positions, leg_squares

CELL = 64
MARGIN = 32
FONT = "font-family=\"sans-serif\""
PATH_COLOR = "#1f5fbf"
START_COLOR = "#2a9d3a"
END_COLOR = "#c62828"

CHART_W, CHART_H = 640, 320


def _svg(width: float, height: float, body: Sequence[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
            f'viewBox="0 0 {width:g} {height:g}">')
    return "\n".join([head, f'<rect width="{width:g}" height="{height:g}" fill="white"/>',
                      *body, "</svg>"]) + "\n"


def _center(row: int, col: int) -> tuple[float, float]:
    return MARGIN + col * CELL + CELL / 2, MARGIN + row * CELL + CELL / 2


def trajectory_svg(square: Square) -> str:
    """Numbered grid with a polyline through cell centers in city order."""
    n = square.order
    size = 2 * MARGIN + n * CELL
    body = []
    for r in range(n):
        for c in range(n):
            x, y = MARGIN + c * CELL, MARGIN + r * CELL
            body.append(f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" '
                        f'fill="none" stroke="#999" stroke-width="1"/>')
            body.append(f'<text x="{x + 6}" y="{y + 16}" {FONT} font-size="13" '
                        f'fill="#444">{square[r, c]}</text>')
    pos = city_positions(square)
    points = [_center(pos[k].row, pos[k].col) for k in range(1, n * n + 1)]
    coords = " ".join(f"{x:g},{y:g}" for x, y in points)
    body.append(f'<polyline class="path" points="{coords}" fill="none" '
                f'stroke="{PATH_COLOR}" stroke-width="3" stroke-linejoin="round"/>')
    (sx, sy), (ex, ey) = points[0], points[-1]
    body.append(f'<circle class="start" cx="{sx:g}" cy="{sy:g}" r="7" fill="{START_COLOR}"/>')
    body.append(f'<rect class="end" x="{ex - 7:g}" y="{ey - 7:g}" width="14" height="14" '
                f'fill="{END_COLOR}"/>')
    return _svg(size, size, body)


def pattern_svg(square: Square) -> str:
    """Leg length against leg index, with a dashed line at the middle leg."""
    legs = leg_squares(square)
    lengths = legs.lengths
    count = len(lengths)
    left, right, top, bottom = 56, 24, 24, 40
    plot_w = CHART_W - left - right
    plot_h = CHART_H - top - bottom
    y_max = math.ceil(max(lengths))

    def px(i: float) -> float:
        return left + (i - 1) * plot_w / (count - 1)

    def py(v: float) -> float:
        return top + plot_h - v * plot_h / y_max

    body = [f'<line x1="{left}" y1="{top + plot_h}" x2="{left + plot_w}" y2="{top + plot_h}" '
            f'stroke="black"/>',
            f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + plot_h}" stroke="black"/>']
    for i in range(1, count + 1):
        body.append(f'<text x="{px(i):.3f}" y="{top + plot_h + 18}" {FONT} font-size="11" '
                    f'text-anchor="middle">{i}</text>')
    for v in range(0, y_max + 1):
        body.append(f'<text x="{left - 8}" y="{py(v) + 4:.3f}" {FONT} font-size="11" '
                    f'text-anchor="end">{v}</text>')
    mid = (count + 1) / 2
    body.append(f'<line class="center" x1="{px(mid):.3f}" y1="{top}" x2="{px(mid):.3f}" '
                f'y2="{top + plot_h}" stroke="#888" stroke-dasharray="6,4"/>')
    coords = " ".join(f"{px(i):.3f},{py(v):.3f}" for i, v in enumerate(lengths, 1))
    body.append(f'<polyline class="pattern" points="{coords}" fill="none" '
                f'stroke="{PATH_COLOR}" stroke-width="2"/>')
    for i, v in enumerate(lengths, 1):
        body.append(f'<circle cx="{px(i):.3f}" cy="{py(v):.3f}" r="3.5" fill="{PATH_COLOR}"/>')
    body.append(f'<text x="{CHART_W / 2:g}" y="{CHART_H - 6}" {FONT} font-size="12" '
                f'text-anchor="middle">leg</text>')
    return _svg(CHART_W, CHART_H, body)


RENDERERS = {"trajectory": trajectory_svg, "pattern": pattern_svg}
