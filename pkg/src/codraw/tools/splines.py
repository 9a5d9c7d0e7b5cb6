"""Spline-based tools: smooth interpolating curves, sketchy oscillation,
and multi-pass thickening.

The curve family is the centripetal Catmull-Rom cubic: it interpolates every
keypoint (required by how the agent addresses the canvas) and does not
overshoot at tight corners. End conditions come from duplicated end control
points.
"""

from __future__ import annotations

import math
from typing import Sequence

from ..errors import InvalidPassCount, TooFewPoints
from ..geometry import Point, Polyline
from ..rng import RandomSource

FLATTEN_TOLERANCE = 0.25  # px
_MAX_DEPTH = 24

DEFAULT_AMPLITUDE = 6.0
DEFAULT_WAVELENGTH = 14.0
JITTER_LO = 0.8
JITTER_HI = 1.2


def _lerp(ta: float, tb: float, pa: Point, pb: Point, t: float) -> Point:
    span = tb - ta
    if span <= 1e-12:
        # zero knot interval: the control points coincide there
        return pa
    w = (t - ta) / span
    return (pa[0] * (1.0 - w) + pb[0] * w, pa[1] * (1.0 - w) + pb[1] * w)


def _catmull_rom_point(
    ps: tuple[Point, Point, Point, Point],
    ts: tuple[float, float, float, float],
    t: float,
) -> Point:
    p0, p1, p2, p3 = ps
    t0, t1, t2, t3 = ts
    a1 = _lerp(t0, t1, p0, p1, t)
    a2 = _lerp(t1, t2, p1, p2, t)
    a3 = _lerp(t2, t3, p2, p3, t)
    b1 = _lerp(t0, t2, a1, a2, t)
    b2 = _lerp(t1, t3, a2, a3, t)
    return _lerp(t1, t2, b1, b2, t)


def _knots(ps: Sequence[Point]) -> list[float]:
    # centripetal parameterization: knot step = sqrt(chord length)
    ts = [0.0]
    for a, b in zip(ps, ps[1:]):
        ts.append(ts[-1] + math.sqrt(math.dist(a, b)))
    return ts


def _chord_error(p: Point, a: Point, b: Point) -> float:
    ax, ay = a
    bx, by = b
    dx, dy = bx - ax, by - ay
    d2 = dx * dx + dy * dy
    if d2 < 1e-24:
        return math.dist(p, a)
    t = ((p[0] - ax) * dx + (p[1] - ay) * dy) / d2
    t = max(0.0, min(1.0, t))
    return math.dist(p, (ax + t * dx, ay + t * dy))


def _flatten_segment(eval_at, ta: float, tb: float, pa: Point, pb: Point,
                     tolerance: float, out: list[Point], depth: int = 0) -> None:
    if depth >= _MAX_DEPTH or (tb - ta) < 1e-12:
        out.append(pb)
        return
    probes = (0.25, 0.5, 0.75)
    worst = 0.0
    mids = []
    for frac in probes:
        tm = ta + (tb - ta) * frac
        pm = eval_at(tm)
        mids.append((tm, pm))
        worst = max(worst, _chord_error(pm, pa, pb))
    if worst <= tolerance:
        out.append(pb)
        return
    tm, pm = mids[1]
    _flatten_segment(eval_at, ta, tm, pa, pm, tolerance, out, depth + 1)
    _flatten_segment(eval_at, tm, tb, pm, pb, tolerance, out, depth + 1)


def draw_splines(
    keypoints: Sequence[Point], tolerance: float = FLATTEN_TOLERANCE
) -> Polyline:
    """Interpolating spline through all keypoints, flattened for the pen.

    Every keypoint lands exactly on the output (it is a flattening segment
    boundary); collinear inputs stay collinear because evaluation is an
    affine combination of the keypoints.
    """
    pts = [(float(x), float(y)) for x, y in keypoints]
    if len(pts) < 2:
        raise TooFewPoints("spline needs at least 2 keypoints")

    extended = [pts[0], *pts, pts[-1]]
    ts = _knots(extended)
    out: list[Point] = [pts[0]]
    for i in range(len(pts) - 1):
        ps = (extended[i], extended[i + 1], extended[i + 2], extended[i + 3])
        seg_ts = (ts[i], ts[i + 1], ts[i + 2], ts[i + 3])
        t1, t2 = seg_ts[1], seg_ts[2]
        if t2 - t1 <= 1e-12:
            continue  # duplicate interior keypoint

        def eval_at(t, ps=ps, seg_ts=seg_ts):
            return _catmull_rom_point(ps, seg_ts, t)

        _flatten_segment(eval_at, t1, t2, ps[1], ps[2], tolerance, out)
    if len(out) < 2:
        # all keypoints coincided
        raise TooFewPoints("spline keypoints are all identical")
    return Polyline(out)


def draw_path(
    keypoints: Sequence[Point], tolerance: float = FLATTEN_TOLERANCE
) -> Polyline:
    """Alias of draw_splines, kept as a distinct tool name in the schema."""
    return draw_splines(keypoints, tolerance)


def _arc_lengths(points: Sequence[Point]) -> list[float]:
    acc = [0.0]
    for a, b in zip(points, points[1:]):
        acc.append(acc[-1] + math.dist(a, b))
    return acc


def draw_scribbly_splines(
    keypoints: Sequence[Point],
    rng: RandomSource,
    amplitude: float = DEFAULT_AMPLITUDE,
    wavelength: float = DEFAULT_WAVELENGTH,
) -> Polyline:
    """Sketchy stroke: a sine oscillation riding the central spline.

    The offset at arc length s is amplitude * j(s) * sin(2*pi*s/wavelength)
    along the local unit normal, where j is a per-half-wave jitter factor
    drawn uniformly from [0.8, 1.2].
    """
    if amplitude < 0 or wavelength <= 0:
        raise ValueError("amplitude must be >= 0 and wavelength > 0")
    base = draw_splines(keypoints)
    if amplitude == 0:
        return base

    pts = base.points
    acc = _arc_lengths(pts)
    total = acc[-1]
    half_wave = wavelength / 2.0
    jitters = [rng.uniform(JITTER_LO, JITTER_HI)
               for _ in range(int(total // half_wave) + 1)]

    step = max(0.25, wavelength / 16.0)
    n_samples = max(2, int(math.ceil(total / step)) + 1)
    out: list[Point] = []
    seg = 0
    for i in range(n_samples):
        s = min(total, i * step) if i < n_samples - 1 else total
        while seg < len(pts) - 2 and acc[seg + 1] < s:
            seg += 1
        a, b = pts[seg], pts[seg + 1]
        seg_len = acc[seg + 1] - acc[seg]
        t = 0.0 if seg_len <= 1e-12 else (s - acc[seg]) / seg_len
        cx = a[0] + (b[0] - a[0]) * t
        cy = a[1] + (b[1] - a[1]) * t
        nx, ny = -(b[1] - a[1]), b[0] - a[0]
        norm = math.hypot(nx, ny)
        if norm <= 1e-12:
            out.append((cx, cy))
            continue
        k = min(len(jitters) - 1, int(s // half_wave))
        offset = amplitude * jitters[k] * math.sin(2.0 * math.pi * s / wavelength)
        out.append((cx + nx / norm * offset, cy + ny / norm * offset))
    return Polyline(out)


def _vertex_normals(points: Sequence[Point]) -> list[tuple[float, float]]:
    seg_normals: list[tuple[float, float]] = []
    for a, b in zip(points, points[1:]):
        nx, ny = -(b[1] - a[1]), b[0] - a[0]
        norm = math.hypot(nx, ny)
        seg_normals.append((nx / norm, ny / norm))
    normals: list[tuple[float, float]] = []
    for i in range(len(points)):
        if i == 0:
            normals.append(seg_normals[0])
        elif i == len(points) - 1:
            normals.append(seg_normals[-1])
        else:
            nx = seg_normals[i - 1][0] + seg_normals[i][0]
            ny = seg_normals[i - 1][1] + seg_normals[i][1]
            norm = math.hypot(nx, ny)
            if norm <= 1e-12:
                normals.append(seg_normals[i - 1])  # hairpin turn
            else:
                normals.append((nx / norm, ny / norm))
    return normals


def thicken(stroke: Polyline, passes: int, offset: float = 1.0) -> list[Polyline]:
    """Retrace a stroke with symmetric normal offsets to fake line weight.

    Pass k is shifted by offset * (k - (passes-1)/2) along the local unit
    normal, so the passes straddle the original; with an odd count the
    middle pass is the input itself.
    """
    if not isinstance(passes, int) or not 2 <= passes <= 6:
        raise InvalidPassCount(f"passes must be an integer in [2, 6], got {passes}")
    if offset <= 0:
        raise ValueError("offset must be positive")
    normals = _vertex_normals(stroke.points)
    out: list[Polyline] = []
    for k in range(passes):
        shift = offset * (k - (passes - 1) / 2.0)
        if shift == 0.0:
            out.append(stroke)
            continue
        out.append(
            Polyline(
                [
                    (p[0] + n[0] * shift, p[1] + n[1] * shift)
                    for p, n in zip(stroke.points, normals)
                ]
            )
        )
    return out
