"""Canvas export formats: SVG, plotter pen programs, and feedback rasters.

All text output uses canonical number formatting (fixed 3 decimals, '.'
separator) so that equal canvases always export byte-identical documents.
"""

from __future__ import annotations

import math

import numpy as np

from .canvas import CanvasState
from .geometry import Polyline

STROKE_WIDTH = 2


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _path_d(stroke: Polyline) -> str:
    head = stroke.points[0]
    parts = [f"M {_fmt(head[0])} {_fmt(head[1])}"]
    parts.extend(f"L {_fmt(x)} {_fmt(y)}" for x, y in stroke.points[1:])
    return " ".join(parts)


def export_svg(canvas: CanvasState) -> str:
    """Render the canvas as a stroke-only SVG 1.1 document.

    One <path> per polyline, no fill; deterministic byte-for-byte for equal
    canvas states.
    """
    w = canvas.constraints.width
    h = canvas.constraints.height
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">'
        ),
    ]
    for el in canvas.elements:
        for i, stroke in enumerate(el.strokes):
            lines.append(
                f'<path id="{el.id}-{i}" class="{el.author.value}" fill="none" '
                f'stroke="black" stroke-width="{STROKE_WIDTH}" '
                f'stroke-linecap="round" stroke-linejoin="round" '
                f'd="{_path_d(stroke)}"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def export_pen_program(canvas: CanvasState) -> str:
    """Render the canvas as a line-oriented pen program.

    "U x y" travels with the pen up, "D x y" draws to (x, y) with the pen
    down. Strokes are emitted in element order; the program starts and ends
    with a "U" command. An empty canvas parks the pen at the margin corner.
    """
    margin = canvas.constraints.edge_margin
    lines: list[str] = []
    last: tuple[float, float] | None = None
    for el in canvas.elements:
        for stroke in el.strokes:
            first = stroke.points[0]
            lines.append(f"U {_fmt(first[0])} {_fmt(first[1])}")
            for x, y in stroke.points[1:]:
                lines.append(f"D {_fmt(x)} {_fmt(y)}")
            last = stroke.points[-1]
    if last is None:
        return f"U {_fmt(margin)} {_fmt(margin)}"
    lines.append(f"U {_fmt(last[0])} {_fmt(last[1])}")
    return "\n".join(lines)


def rasterize(canvas: CanvasState, ink: int = 0, paper: int = 255) -> np.ndarray:
    """Rasterize strokes into an (h, w) uint8 image for model feedback.

    Thin sampled lines are plenty: the image is what the agent "sees", not a
    print-quality render.
    """
    h = canvas.constraints.height
    w = canvas.constraints.width
    img = np.full((h, w), paper, dtype=np.uint8)
    for el in canvas.elements:
        for stroke in el.strokes:
            for (ax, ay), (bx, by) in stroke.segments():
                steps = max(1, int(math.ceil(math.dist((ax, ay), (bx, by)) * 2)))
                for i in range(steps + 1):
                    t = i / steps
                    x = int(round(ax + (bx - ax) * t))
                    y = int(round(ay + (by - ay) * t))
                    if 0 <= x < w and 0 <= y < h:
                        img[y, x] = ink
    return img
