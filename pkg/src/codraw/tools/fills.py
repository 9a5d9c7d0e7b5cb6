"""Region-filling tools: organic scribbles and cross-hatching.

Both accept a polygonal boundary (even-odd fill rule) and a density. Density
semantics: hatching lays `value` lines per 100 px of perpendicular extent;
scribbles sample `value` points per 1000 px^2 of polygon area.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..errors import InvalidDensity, InvalidPolygon, SamplingFailed
from ..geometry import BBox, Point, Polyline
from ..rng import RandomSource
from .splines import draw_splines

MIN_CHORD_LEN = 1.0  # hatching chords shorter than this are dropped
SAMPLE_ATTEMPT_FACTOR = 1000  # rejection-sampling cap: factor * N attempts
MIN_SCRIBBLE_POINTS = 3


@dataclass(frozen=True)
class Polygon:
    """Polygonal region, implicit closure, even-odd interior rule."""

    vertices: tuple[Point, ...]

    def __init__(self, vertices: Sequence[Sequence[float]]):
        cleaned: list[Point] = []
        for v in vertices:
            p = (float(v[0]), float(v[1]))
            if cleaned and math.dist(cleaned[-1], p) < 1e-12:
                continue
            cleaned.append(p)
        if len(cleaned) >= 2 and math.dist(cleaned[0], cleaned[-1]) < 1e-12:
            cleaned.pop()
        if len(cleaned) < 3:
            raise InvalidPolygon("polygon needs at least 3 distinct vertices")
        object.__setattr__(self, "vertices", tuple(cleaned))
        if self.area() <= 0:
            raise InvalidPolygon("polygon area must be positive")

    def area(self) -> float:
        s = 0.0
        vs = self.vertices
        for (x0, y0), (x1, y1) in zip(vs, vs[1:] + vs[:1]):
            s += x0 * y1 - x1 * y0
        return abs(s) / 2.0

    def bbox(self) -> BBox:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return BBox(min(xs), min(ys), max(xs), max(ys))

    def edges(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        return list(zip(vs, vs[1:] + vs[:1]))

    def contains(self, p: Point) -> bool:
        """Even-odd ray cast with a half-open edge rule (stable at vertices)."""
        x, y = p
        inside = False
        for (x0, y0), (x1, y1) in self.edges():
            if (y0 <= y < y1) or (y1 <= y < y0):
                t = (y - y0) / (y1 - y0)
                if x < x0 + t * (x1 - x0):
                    inside = not inside
        return inside

    def distance_to_boundary(self, p: Point) -> float:
        best = math.inf
        for a, b in self.edges():
            ax, ay = a
            bx, by = b
            dx, dy = bx - ax, by - ay
            d2 = dx * dx + dy * dy
            if d2 < 1e-24:
                best = min(best, math.dist(p, a))
                continue
            t = max(0.0, min(1.0, ((p[0] - ax) * dx + (p[1] - ay) * dy) / d2))
            best = min(best, math.dist(p, (ax + t * dx, ay + t * dy)))
        return best


@dataclass(frozen=True)
class Density:
    """Fill density in (0, 100]."""

    value: float

    def __post_init__(self):
        if not (0.0 < self.value <= 100.0):
            raise InvalidDensity(f"density must be in (0, 100], got {self.value}")


def _as_density(density: "Density | float") -> Density:
    return density if isinstance(density, Density) else Density(float(density))


# -- scribbles -----------------------------------------------------------------


def _sample_in_polygon(region: Polygon, n: int, rng: RandomSource) -> list[Point]:
    box = region.bbox()
    samples: list[Point] = []
    attempts = 0
    cap = SAMPLE_ATTEMPT_FACTOR * n
    while len(samples) < n:
        if attempts >= cap:
            raise SamplingFailed(
                f"rejection sampling got {len(samples)}/{n} points "
                f"in {cap} attempts"
            )
        attempts += 1
        p = (rng.uniform(box.min_x, box.max_x), rng.uniform(box.min_y, box.max_y))
        if region.contains(p):
            samples.append(p)
    return samples


def _greedy_order(points: list[Point]) -> list[Point]:
    ordered = [points[0]]
    remaining = points[1:]
    while remaining:
        last = ordered[-1]
        idx = min(range(len(remaining)), key=lambda i: math.dist(last, remaining[i]))
        ordered.append(remaining.pop(idx))
    return ordered


def _clip_polyline_to_polygon(polyline: Polyline, region: Polygon) -> list[Polyline]:
    """Keep the parts of a polyline inside the polygon (even-odd rule)."""
    pieces: list[Polyline] = []
    run: list[Point] = []

    def flush() -> None:
        nonlocal run
        if len(run) >= 2:
            try:
                pieces.append(Polyline(run))
            except ValueError:
                pass
        run = []

    for a, b in polyline.segments():
        # parametric crossings of this segment with every polygon edge
        ts = [0.0, 1.0]
        for (ex0, ey0), (ex1, ey1) in region.edges():
            d1x, d1y = b[0] - a[0], b[1] - a[1]
            d2x, d2y = ex1 - ex0, ey1 - ey0
            denom = d1x * d2y - d1y * d2x
            if abs(denom) < 1e-15:
                continue
            t = ((ex0 - a[0]) * d2y - (ey0 - a[1]) * d2x) / denom
            u = ((ex0 - a[0]) * d1y - (ey0 - a[1]) * d1x) / denom
            if 0.0 <= t <= 1.0 and 0.0 <= u <= 1.0:
                ts.append(t)
        ts.sort()
        for t0, t1 in zip(ts, ts[1:]):
            if t1 - t0 < 1e-12:
                continue
            tm = (t0 + t1) / 2.0
            mid = (a[0] + (b[0] - a[0]) * tm, a[1] + (b[1] - a[1]) * tm)
            p0 = (a[0] + (b[0] - a[0]) * t0, a[1] + (b[1] - a[1]) * t0)
            p1 = (a[0] + (b[0] - a[0]) * t1, a[1] + (b[1] - a[1]) * t1)
            if region.contains(mid):
                if run and math.dist(run[-1], p0) < 1e-9:
                    run.append(p1)
                else:
                    flush()
                    run = [p0, p1]
            else:
                flush()
    flush()
    return pieces


def draw_scribbles(
    region: Polygon, density: "Density | float", rng: RandomSource
) -> list[Polyline]:
    """Organic scribble fill by rejection sampling.

    Uniform interior points (greedy nearest-neighbour ordered, starting at
    the first sample) are joined with a smooth spline, then clipped back to
    the polygon so overshoot never escapes the region.
    """
    density = _as_density(density)
    n = max(MIN_SCRIBBLE_POINTS, round(density.value * region.area() / 1000.0))
    samples = _sample_in_polygon(region, n, rng)
    ordered = _greedy_order(samples)
    if len(ordered) < 2:
        raise SamplingFailed("not enough scribble points")
    path = draw_splines(ordered)
    return _clip_polyline_to_polygon(path, region)


# -- hatching ------------------------------------------------------------------


def _rotate(p: Point, center: Point, angle_rad: float) -> Point:
    c, s = math.cos(angle_rad), math.sin(angle_rad)
    x, y = p[0] - center[0], p[1] - center[1]
    return (center[0] + x * c - y * s, center[1] + x * s + y * c)


def _family_chords(region: Polygon, spacing: float, angle_deg: float) -> list[Polyline]:
    """Chords of one parallel-line family, boustrophedon ordered."""
    angle = math.radians(angle_deg)
    center = region.bbox().center
    # rotate so the requested line family becomes horizontal scanlines
    rotated = [_rotate(v, center, -angle) for v in region.vertices]
    ys = [v[1] for v in rotated]
    y_min, y_max = min(ys), max(ys)
    edges = list(zip(rotated, rotated[1:] + rotated[:1]))

    chords: list[Polyline] = []
    count = 0
    y = y_min + spacing / 2.0
    while y < y_max:
        xs: list[float] = []
        for (x0, y0), (x1, y1) in edges:
            if (y0 <= y < y1) or (y1 <= y < y0):
                t = (y - y0) / (y1 - y0)
                xs.append(x0 + t * (x1 - x0))
        xs.sort()
        for xa, xb in zip(xs[0::2], xs[1::2]):
            if xb - xa < MIN_CHORD_LEN:
                continue
            a = _rotate((xa, y), center, angle)
            b = _rotate((xb, y), center, angle)
            if count % 2 == 1:
                a, b = b, a
            chords.append(Polyline([a, b]))
            count += 1
        y += spacing
    return chords


def draw_hatching(
    region: Polygon,
    density: "Density | float",
    angle_deg: float = 45.0,
    cross: bool = False,
) -> list[Polyline]:
    """Hatch a polygon with parallel chords (plus a crossed family if asked).

    Spacing is 100/density px; chord endpoints lie on the boundary; chords
    under 1 px are dropped; alternate chords reverse direction to shorten
    pen travel.
    """
    density = _as_density(density)
    spacing = 100.0 / density.value
    chords = _family_chords(region, spacing, angle_deg)
    if cross:
        chords.extend(_family_chords(region, spacing, angle_deg + 90.0))
    return chords
