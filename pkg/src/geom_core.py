"""
Numeric primitives: eps-equality, signed area, angles and segment intersection.

Everything works in double precision; eps (see Tolerance) is the only
robustness mechanism.
"""

import math
from typing import Optional, Sequence

from .exceptions import DegenerateDirectionError, MalformedCurveError
from .models.geometry import (
    IntersectionResult,
    Point,
    Segment,
    Tolerance,
)

TWO_PI = 2.0 * math.pi


def points_equal(p: Point, q: Point, tol: Tolerance) -> bool:
    return math.hypot(p.x - q.x, p.y - q.y) < tol.eps


def cross(u: Point, v: Point) -> float:
    return u.x * v.y - u.y * v.x


def dot(u: Point, v: Point) -> float:
    return u.x * v.x + u.y * v.y


def signed_area(vertices: Sequence[Point]) -> float:
    """Shoelace area of the implicitly closed polygon, positive when counterclockwise"""
    n = len(vertices)
    if n < 3:
        raise MalformedCurveError(f"Need at least 3 vertices for an area, got {n}")
    total = 0.0
    for i in range(n):
        p = vertices[i]
        q = vertices[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total / 2.0


def ccw_angle(
    ref_dir: Point, direction: Point, tol: Optional[Tolerance] = None
) -> float:
    """
    Counterclockwise rotation in (0, 2*pi] taking ref_dir onto direction.

    Coincident directions give 2*pi. With a tolerance, directions whose tips
    are within eps of each other's line (and point the same way) count as
    coincident.
    """
    ref_norm = math.hypot(ref_dir.x, ref_dir.y)
    dir_norm = math.hypot(direction.x, direction.y)
    if ref_norm == 0.0 or dir_norm == 0.0:
        raise DegenerateDirectionError("ccw_angle needs two non-zero direction vectors")

    c = cross(ref_dir, direction)
    d = dot(ref_dir, direction)
    if tol is not None and d > 0 and abs(c) / max(ref_norm, dir_norm) < tol.eps:
        return TWO_PI

    angle = math.atan2(c, d)
    if angle <= 0.0:
        angle += TWO_PI
    return angle


def distance_to_segment(p: Point, a: Point, b: Point) -> float:
    dx, dy = b.x - a.x, b.y - a.y
    length_sq = dx * dx + dy * dy
    if length_sq == 0.0:
        return math.hypot(p.x - a.x, p.y - a.y)
    t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / length_sq
    t = min(1.0, max(0.0, t))
    return math.hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy))


def point_segment_distance(p: Point, s: Segment) -> float:
    return distance_to_segment(p, s.a, s.b)


def distance_to_line(p: Point, a: Point, b: Point) -> float:
    """Distance from p to the infinite line through a and b"""
    length = math.hypot(b.x - a.x, b.y - a.y)
    return abs((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)) / length


def _segment_key(s: Segment):
    return (min(s.a, s.b), max(s.a, s.b), s.a)


def segment_intersect(s1: Segment, s2: Segment, tol: Tolerance) -> IntersectionResult:
    """
    Intersect two segments under eps semantics.

    The result does not depend on argument order. A point within eps of an
    endpoint is snapped to that endpoint.
    """
    if _segment_key(s2) < _segment_key(s1):
        s1, s2 = s2, s1
    a, b, c, d = s1.a, s1.b, s2.a, s2.b
    eps = tol.eps

    if (
        max(a.x, b.x) + eps < min(c.x, d.x)
        or max(c.x, d.x) + eps < min(a.x, b.x)
        or max(a.y, b.y) + eps < min(c.y, d.y)
        or max(c.y, d.y) + eps < min(a.y, b.y)
    ):
        return IntersectionResult.none()

    if (
        distance_to_line(c, a, b) < eps
        and distance_to_line(d, a, b) < eps
        and distance_to_line(a, c, d) < eps
        and distance_to_line(b, c, d) < eps
    ):
        return _collinear_intersect(s1, s2, tol)

    best = None
    for q, other in ((a, s2), (b, s2), (c, s1), (d, s1)):
        dist = point_segment_distance(q, other)
        if dist < eps and (best is None or dist < best[0]):
            best = (dist, q)
    if best is not None:
        return IntersectionResult.at_point(best[1], snapped=True)

    r = b - a
    s = d - c
    denom = cross(r, s)
    if denom == 0.0:
        return IntersectionResult.none()
    ca = c - a
    t = cross(ca, s) / denom
    u = cross(ca, r) / denom
    if 0.0 <= t <= 1.0 and 0.0 <= u <= 1.0:
        return IntersectionResult.at_point(Point(a.x + r.x * t, a.y + r.y * t))
    return IntersectionResult.none()


def _collinear_intersect(
    s1: Segment, s2: Segment, tol: Tolerance
) -> IntersectionResult:
    a, b = s1.a, s1.b
    r = b - a
    length_sq = dot(r, r)
    tc = dot(s2.a - a, r) / length_sq
    td = dot(s2.b - a, r) / length_sq
    lo_other, hi_other = (s2.a, s2.b) if tc <= td else (s2.b, s2.a)
    lo_t, hi_t = min(tc, td), max(tc, td)

    start_t, start = (0.0, a) if lo_t <= 0.0 else (lo_t, lo_other)
    end_t, end = (1.0, b) if hi_t >= 1.0 else (hi_t, hi_other)

    extent = (end_t - start_t) * math.sqrt(length_sq)
    if extent > tol.eps and not points_equal(start, end, tol):
        return IntersectionResult.collinear_overlap(Segment(start, end))
    if extent > -tol.eps:
        return IntersectionResult.at_point(min(start, end), snapped=True)
    return IntersectionResult.none()
