"""Basic geometry tools: straight segments and tessellated circles."""

from __future__ import annotations

import math
from typing import Sequence

from ..errors import DegenerateSegment, NonPositiveRadius
from ..geometry import Point, Polyline

CHORD_TOLERANCE = 0.25  # px, max deviation of a chord from the true arc
MIN_CIRCLE_SEGMENTS = 16


def draw_segments(segments: Sequence[tuple[Point, Point]]) -> list[Polyline]:
    """One 2-point polyline per (start, end) pair, order preserved."""
    out: list[Polyline] = []
    for start, end in segments:
        if math.dist(start, end) <= 0.0:
            raise DegenerateSegment(f"zero-length segment at {start}")
        out.append(Polyline([start, end]))
    return out


def circle_segment_count(radius: float, tolerance: float = CHORD_TOLERANCE) -> int:
    """Segments needed so no chord sags more than `tolerance` off the arc."""
    if radius <= tolerance:
        return MIN_CIRCLE_SEGMENTS
    theta = math.acos(max(-1.0, min(1.0, 1.0 - tolerance / radius)))
    return max(MIN_CIRCLE_SEGMENTS, math.ceil(math.pi / theta))


def draw_circles(circles: Sequence[tuple[Point, float]]) -> list[Polyline]:
    """Closed polygonal circle approximations, first vertex repeated last."""
    out: list[Polyline] = []
    for (cx, cy), radius in circles:
        if radius <= 0:
            raise NonPositiveRadius(f"radius {radius}")
        n = circle_segment_count(radius)
        pts: list[Point] = []
        for i in range(n):
            a = 2.0 * math.pi * i / n
            pts.append((cx + radius * math.cos(a), cy + radius * math.sin(a)))
        pts.append(pts[0])
        out.append(Polyline(pts))
    return out
