import math
from fractions import Fraction

import pytest

from src.exceptions import (
    DegenerateDirectionError,
    DegenerateSegmentError,
    MalformedCurveError,
)
from src.geom_core import (
    ccw_angle,
    point_segment_distance,
    points_equal,
    segment_intersect,
    signed_area,
)
from src.models.geometry import IntersectionKind, Point, Segment, Tolerance


def seg(ax, ay, bx, by):
    return Segment(Point(ax, ay), Point(bx, by))


def exact_crossing(s1: Segment, s2: Segment):
    """Crossing point of two segments in rational arithmetic, or None"""
    ax, ay, bx, by = (Fraction(v) for v in (s1.a.x, s1.a.y, s1.b.x, s1.b.y))
    cx, cy, dx, dy = (Fraction(v) for v in (s2.a.x, s2.a.y, s2.b.x, s2.b.y))
    rx, ry, sx, sy = bx - ax, by - ay, dx - cx, dy - cy
    denom = rx * sy - ry * sx
    if denom == 0:
        return None
    t = ((cx - ax) * sy - (cy - ay) * sx) / denom
    u = ((cx - ax) * ry - (cy - ay) * rx) / denom
    if 0 <= t <= 1 and 0 <= u <= 1:
        return (ax + t * rx, ay + t * ry)
    return None


def test_points_equal(tol):
    assert points_equal(Point(0, 0), Point(0, 0), tol)
    assert not points_equal(Point(0, 0), Point(1, 0), tol)
    assert points_equal(Point(0, 0), Point(0, 5e-10), tol)


def test_points_equal_is_not_transitive(tol):
    p, q, r = Point(0, 0), Point(0.6e-9, 0), Point(1.2e-9, 0)
    assert points_equal(p, q, tol) and points_equal(q, r, tol)
    assert not points_equal(p, r, tol)


def test_tolerance_must_be_positive():
    with pytest.raises(ValueError):
        Tolerance(0.0)
    with pytest.raises(ValueError):
        Tolerance(-1e-9)


def test_point_rejects_non_finite():
    with pytest.raises(ValueError):
        Point(float("nan"), 0.0)


def test_signed_area():
    assert signed_area([Point(0, 0), Point(1, 0), Point(0, 1)]) == pytest.approx(0.5)
    assert signed_area([Point(0, 0), Point(0, 1), Point(1, 0)]) == pytest.approx(-0.5)
    square = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]
    assert signed_area(square) == pytest.approx(1.0)
    assert signed_area(list(reversed(square))) == -signed_area(square)


def test_signed_area_needs_three_vertices():
    with pytest.raises(MalformedCurveError):
        signed_area([Point(0, 0), Point(1, 0)])


def test_ccw_angle():
    assert ccw_angle(Point(1, 0), Point(0, 1)) == pytest.approx(math.pi / 2)
    assert ccw_angle(Point(1, 0), Point(0, -1)) == pytest.approx(3 * math.pi / 2)
    assert ccw_angle(Point(1, 0), Point(1, 0)) == pytest.approx(2 * math.pi)
    assert ccw_angle(Point(1, 0), Point(-1, 0)) == pytest.approx(math.pi)


def test_ccw_angle_near_coincident_is_full_turn(tol):
    assert ccw_angle(Point(1, 0), Point(1, 1e-12), tol) == 2 * math.pi
    assert ccw_angle(Point(1, 0), Point(1, -1e-12), tol) == 2 * math.pi


def test_ccw_angle_rejects_zero_vector():
    with pytest.raises(DegenerateDirectionError):
        ccw_angle(Point(0, 0), Point(1, 0))


def test_segment_checked_rejects_short(tol):
    with pytest.raises(DegenerateSegmentError):
        Segment.checked(Point(0, 0), Point(1e-10, 0), tol)


def test_segment_intersect_crossing(tol):
    result = segment_intersect(seg(0, 0, 2, 2), seg(0, 2, 2, 0), tol)
    assert result.kind is IntersectionKind.AT_POINT
    assert result.point.x == pytest.approx(1.0)
    assert result.point.y == pytest.approx(1.0)


def test_segment_intersect_collinear_overlap(tol):
    result = segment_intersect(seg(0, 0, 2, 0), seg(1, 0, 3, 0), tol)
    assert result.kind is IntersectionKind.COLLINEAR_OVERLAP
    assert {result.overlap.a, result.overlap.b} == {Point(1, 0), Point(2, 0)}


def test_segment_intersect_snaps_to_endpoint(tol):
    result = segment_intersect(seg(0, 0, 1, 0), seg(0.5, 5e-10, 0.5, 1), tol)
    assert result.kind is IntersectionKind.AT_POINT
    assert result.snapped
    assert result.point.x == pytest.approx(0.5)
    assert result.point.y == pytest.approx(0.0, abs=1e-9)


def test_segment_intersect_collinear_touch_is_a_point(tol):
    result = segment_intersect(seg(0, 0, 1, 0), seg(1, 0, 2, 0), tol)
    assert result.kind is IntersectionKind.AT_POINT
    assert result.point == Point(1, 0)


def test_segment_intersect_disjoint(tol):
    assert not segment_intersect(seg(0, 0, 1, 0), seg(0, 1, 1, 1), tol)
    assert not segment_intersect(seg(0, 0, 1, 0), seg(2, 0, 3, 0), tol)
    assert not segment_intersect(seg(0, 0, 1, 1), seg(1, 0, 0.6, 0.3), tol)


def test_segment_intersect_is_symmetric(tol, rng):
    for _ in range(200):
        c = rng.uniform(0, 1, 8)
        s1, s2 = seg(*c[:4]), seg(*c[4:])
        r1, r2 = segment_intersect(s1, s2, tol), segment_intersect(s2, s1, tol)
        assert r1.kind is r2.kind
        if r1.kind is IntersectionKind.AT_POINT:
            assert points_equal(r1.point, r2.point, tol)


def test_segment_intersect_matches_rational_oracle(tol, rng):
    checked = 0
    for _ in range(300):
        c = rng.uniform(0, 1, 8)
        s1, s2 = seg(*c[:4]), seg(*c[4:])
        exact = exact_crossing(s1, s2)
        result = segment_intersect(s1, s2, tol)
        if exact is None:
            assert result.kind is IntersectionKind.NONE
            continue
        checked += 1
        assert result.kind is IntersectionKind.AT_POINT
        assert result.point.x == pytest.approx(float(exact[0]), abs=1e-12)
        assert result.point.y == pytest.approx(float(exact[1]), abs=1e-12)
    assert checked > 20


def test_point_segment_distance():
    assert point_segment_distance(Point(0, 1), seg(-1, 0, 1, 0)) == pytest.approx(1.0)
    assert point_segment_distance(Point(2, 0), seg(-1, 0, 1, 0)) == pytest.approx(1.0)
    assert point_segment_distance(Point(0.5, 0), seg(0, 0, 1, 0)) == 0.0
