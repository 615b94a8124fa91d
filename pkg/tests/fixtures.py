"""
Shared geometry for the tests: hand-built configurations and random spadjors.
"""

import math
from typing import List, Sequence

import numpy as np

from src.models.curve import OrientedJordanCurve
from src.models.geometry import Point, Segment, Tolerance
from src.models.spadjor import RealizableSpadjor
from src.sweep import EdgeRef, TaggedSegment
from src.topology import build_spadjor

TOL = Tolerance(1e-9)


def polygon(points: Sequence, tol: Tolerance = TOL) -> OrientedJordanCurve:
    return OrientedJordanCurve.from_points(points, tol)


def square(x0, y0, x1, y1, ccw: bool = True) -> OrientedJordanCurve:
    pts = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    return polygon(pts if ccw else list(reversed(pts)))


def spadjor(*curves: OrientedJordanCurve) -> RealizableSpadjor:
    return build_spadjor(list(curves), TOL)


def box(x0, y0, x1, y1) -> RealizableSpadjor:
    return spadjor(square(x0, y0, x1, y1))


def annulus() -> RealizableSpadjor:
    return spadjor(square(0, 0, 3, 3), square(1, 1, 2, 2, ccw=False))


# Seven curves: an outer square with three holes, islands in two of the
# holes, and a notched curve touching the outer square at (10,3) and (10,7).
TOUCH_POINTS = (Point(10.0, 3.0), Point(10.0, 7.0))


def seven_curves() -> List[OrientedJordanCurve]:
    return [
        polygon([(10, 3), (12, 1), (15, 1), (15, 9), (12, 9), (10, 7), (12, 5)]),
        square(2, 2, 3, 3),
        square(7, 2, 8, 3),
        square(0, 0, 10, 10),
        square(1, 1, 4, 4, ccw=False),
        square(6, 1, 9, 4, ccw=False),
        square(1, 6, 9, 9, ccw=False),
    ]


# Ten curves: a head with two holes, a ring inside each hole, a dot inside
# each ring's hole, and a separate island.
def face_curves() -> List[OrientedJordanCurve]:
    return [
        square(0, 0, 20, 12),
        square(2, 2, 8, 10, ccw=False),
        square(12, 2, 18, 10, ccw=False),
        square(3, 3, 7, 9),
        square(13, 3, 17, 9),
        square(4.5, 5, 5.5, 7),
        square(14.5, 5, 15.5, 7),
        square(4, 4, 6, 8, ccw=False),
        square(14, 4, 16, 8, ccw=False),
        square(22, 0, 26, 4),
    ]


def star(rng, cx: float, cy: float, r_min: float, r_max: float, k: int) -> List[tuple]:
    """Star-shaped polygon around (cx, cy), counterclockwise"""
    angles = (np.arange(k) + rng.uniform(-0.3, 0.3, k)) * 2 * math.pi / k
    radii = rng.uniform(r_min, r_max, k)
    return [(cx + r * math.cos(a), cy + r * math.sin(a)) for a, r in zip(angles, radii)]


def random_curves(
    rng, max_vertices: int = 64, allow_unbounded: bool = True
) -> List[OrientedJordanCurve]:
    """1-8 curves in [0,1]^2: islands in a 3x3 grid, some with one hole"""
    cell = 1.0 / 3.0
    chosen = rng.permutation(9)[: int(rng.integers(1, 5))]
    curves = []
    for c in chosen:
        cx = (c % 3 + 0.5) * cell + rng.uniform(-0.02, 0.02)
        cy = (c // 3 + 0.5) * cell + rng.uniform(-0.02, 0.02)
        r = cell * rng.uniform(0.25, 0.4)
        with_hole = rng.random() < 0.5
        k = int(rng.integers(8 if with_hole else 4, max_vertices + 1))
        curves.append(polygon(star(rng, cx, cy, 0.6 * r, r, k)))
        if with_hole:
            k_hole = int(rng.integers(4, max_vertices + 1))
            hole = polygon(star(rng, cx, cy, 0.15 * r, 0.45 * r, k_hole))
            curves.append(hole.reversed())
    if allow_unbounded and rng.random() < 0.25:
        curves = [c.reversed() for c in curves]
    return curves


def random_spadjor(rng, **kwargs) -> RealizableSpadjor:
    return build_spadjor(random_curves(rng, **kwargs), TOL)


def random_segments(rng, n: int, length: float = 0.05) -> List[TaggedSegment]:
    """n short segments in [0,1]^2, each its own curve"""
    tagged = []
    for i in range(n):
        x, y = rng.uniform(0, 1, 2)
        angle = rng.uniform(0, 2 * math.pi)
        a = Point(float(x), float(y))
        dx, dy = length * math.cos(angle), length * math.sin(angle)
        b = Point(float(x + dx), float(y + dy))
        tagged.append(TaggedSegment(EdgeRef(i, 0, 1), Segment(a, b)))
    return tagged


def grid_segments(rng, n: int) -> List[TaggedSegment]:
    """Axis-parallel segments on a coarse grid: many shared endpoints and overlaps"""
    tagged = []
    for i in range(n):
        x, y = (int(v) / 10.0 for v in rng.integers(0, 10, 2))
        if rng.random() < 0.5:
            b = Point(x + int(rng.integers(1, 4)) / 10.0, y)
        else:
            b = Point(x, y + int(rng.integers(1, 4)) / 10.0)
        tagged.append(TaggedSegment(EdgeRef(i, 0, 1), Segment(Point(x, y), b)))
    return tagged


def regular_polygon(n: int, radius: float = 1.0) -> OrientedJordanCurve:
    angles = [2 * math.pi * i / n for i in range(n)]
    return polygon([(radius * math.cos(a), radius * math.sin(a)) for a in angles])


def parallel_diagonals(n: int) -> List[TaggedSegment]:
    """n parallel edges that never meet although all their bounding boxes overlap"""
    return [
        TaggedSegment(
            EdgeRef(i, 0, 1), Segment(Point(0.0, i / n), Point(1.0, 1.0 + i / n))
        )
        for i in range(n)
    ]
