"""Drawing tools: each converts a structured argument tree into Polylines.

Every randomized tool takes an explicit RandomSource so that (args, seed)
fully determines the output.
"""

from .fills import Density, Polygon, draw_hatching, draw_scribbles
from .primitives import draw_circles, draw_segments
from .splines import draw_path, draw_scribbly_splines, draw_splines, thicken
from .text import draw_text

__all__ = [
    "Density",
    "Polygon",
    "draw_circles",
    "draw_hatching",
    "draw_path",
    "draw_scribbles",
    "draw_scribbly_splines",
    "draw_segments",
    "draw_splines",
    "draw_text",
    "thicken",
]
