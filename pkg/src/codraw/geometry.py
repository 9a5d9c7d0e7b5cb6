"""Planar geometry primitives shared by the whole runtime.

Coordinates are canvas pixels: origin at the top-left corner, y growing
downward. Points are plain (x, y) float tuples internally; Polyline wraps an
ordered pen-down point sequence and is the universal output of every drawing
tool.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

Point = tuple[float, float]

_EPS = 1e-12


def _check_finite(x: float, y: float) -> None:
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"non-finite point ({x}, {y})")


@dataclass(frozen=True)
class Polyline:
    """An ordered pen-down point sequence (at least two points).

    Consecutive duplicate points are collapsed on construction; the remaining
    path must have positive total length.
    """

    points: tuple[Point, ...]

    def __init__(self, points: Iterable[Sequence[float]]):
        cleaned: list[Point] = []
        for p in points:
            x, y = float(p[0]), float(p[1])
            _check_finite(x, y)
            if cleaned and abs(cleaned[-1][0] - x) < _EPS and abs(cleaned[-1][1] - y) < _EPS:
                continue
            cleaned.append((x, y))
        if len(cleaned) < 2:
            raise ValueError("polyline needs at least 2 distinct points")
        object.__setattr__(self, "points", tuple(cleaned))

    def length(self) -> float:
        return sum(
            math.dist(a, b) for a, b in zip(self.points, self.points[1:])
        )

    def segments(self) -> list[tuple[Point, Point]]:
        return list(zip(self.points, self.points[1:]))

    def bbox(self) -> "BBox":
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        return BBox(min(xs), min(ys), max(xs), max(ys))

    def translated(self, dx: float, dy: float) -> "Polyline":
        return Polyline([(x + dx, y + dy) for x, y in self.points])


@dataclass(frozen=True)
class BBox:
    """Axis-aligned box, min corner to max corner."""

    min_x: float
    min_y: float
    max_x: float
    max_y: float

    @staticmethod
    def around(polylines: Iterable[Polyline]) -> "BBox":
        boxes = [pl.bbox() for pl in polylines]
        if not boxes:
            raise ValueError("bbox of zero polylines")
        return BBox(
            min(b.min_x for b in boxes),
            min(b.min_y for b in boxes),
            max(b.max_x for b in boxes),
            max(b.max_y for b in boxes),
        )

    @property
    def width(self) -> float:
        return self.max_x - self.min_x

    @property
    def height(self) -> float:
        return self.max_y - self.min_y

    @property
    def center(self) -> Point:
        return ((self.min_x + self.max_x) / 2.0, (self.min_y + self.max_y) / 2.0)

    def contains(self, other: "BBox") -> bool:
        return (
            self.min_x <= other.min_x
            and self.min_y <= other.min_y
            and self.max_x >= other.max_x
            and self.max_y >= other.max_y
        )

    def distance_to(self, other: "BBox") -> float:
        """Minimum distance between the two boxes; 0 if they touch or overlap."""
        dx = max(0.0, max(self.min_x - other.max_x, other.min_x - self.max_x))
        dy = max(0.0, max(self.min_y - other.max_y, other.min_y - self.max_y))
        return math.hypot(dx, dy)


def clip_segment_to_rect(
    a: Point, b: Point, rect: BBox
) -> tuple[Point, Point] | None:
    """Liang-Barsky clip of segment a-b against an axis-aligned rectangle.

    Returns the clipped sub-segment, or None when the segment lies entirely
    outside. Degenerate (zero-length) results are returned as-is; callers
    drop them while stitching.
    """
    x0, y0 = a
    x1, y1 = b
    dx = x1 - x0
    dy = y1 - y0
    t0, t1 = 0.0, 1.0
    for p, q in (
        (-dx, x0 - rect.min_x),
        (dx, rect.max_x - x0),
        (-dy, y0 - rect.min_y),
        (dy, rect.max_y - y0),
    ):
        if abs(p) < _EPS:
            if q < 0:
                return None
            continue
        r = q / p
        if p < 0:
            if r > t1:
                return None
            t0 = max(t0, r)
        else:
            if r < t0:
                return None
            t1 = min(t1, r)
    if t0 > t1:
        return None
    return (x0 + t0 * dx, y0 + t0 * dy), (x0 + t1 * dx, y0 + t1 * dy)


def clip_polyline_to_rect(polyline: Polyline, rect: BBox) -> list[Polyline]:
    """Hard-clip a polyline to a rectangle, splitting where it leaves.

    Consecutive surviving sub-segments that share an endpoint are stitched
    back into a single polyline, so a path that stays inside comes back as
    one piece.
    """
    pieces: list[Polyline] = []
    run: list[Point] = []

    def flush() -> None:
        nonlocal run
        if len(run) >= 2:
            try:
                pieces.append(Polyline(run))
            except ValueError:
                pass  # run collapsed to a single point after dedup
        run = []

    for a, b in polyline.segments():
        clipped = clip_segment_to_rect(a, b, rect)
        if clipped is None:
            flush()
            continue
        ca, cb = clipped
        if run and math.dist(run[-1], ca) < 1e-9:
            run.append(cb)
        else:
            flush()
            run = [ca, cb]
    flush()
    return pieces


def point_segment_distance(p: Point, a: Point, b: Point) -> float:
    ax, ay = a
    bx, by = b
    px, py = p
    dx, dy = bx - ax, by - ay
    d2 = dx * dx + dy * dy
    if d2 < _EPS:
        return math.dist(p, a)
    t = ((px - ax) * dx + (py - ay) * dy) / d2
    t = max(0.0, min(1.0, t))
    return math.dist(p, (ax + t * dx, ay + t * dy))


def point_polyline_distance(p: Point, polyline: Polyline) -> float:
    return min(point_segment_distance(p, a, b) for a, b in polyline.segments())
