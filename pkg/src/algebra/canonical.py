"""
Canonical form of spadjors and tolerance-aware equality.
"""

from typing import List, Sequence, Tuple

from ..geom_core import distance_to_segment, points_equal
from ..models.curve import OrientedJordanCurve
from ..models.geometry import Point, Tolerance
from ..models.spadjor import RealizableSpadjor
from ..topology import build_spadjor


def _drop_collinear(points: Sequence[Point], eps: float) -> List[Point]:
    pts = list(points)
    changed = True
    while changed and len(pts) > 3:
        changed = False
        kept: List[Point] = []
        n = len(pts)
        for i, cur in enumerate(pts):
            prev = kept[-1] if kept else pts[-1]
            nxt = pts[(i + 1) % n]
            remaining = len(kept) + (n - i)
            if remaining > 3 and distance_to_segment(cur, prev, nxt) < eps:
                changed = True
                continue
            kept.append(cur)
        pts = kept
    return pts


def canonical_points(c: OrientedJordanCurve, tol: Tolerance) -> Tuple[Point, ...]:
    """Vertices without eps-collinear ones, starting at the smallest vertex"""
    pts = _drop_collinear(c.vertices, tol.eps)
    start = pts.index(min(pts))
    return tuple(pts[start:] + pts[:start])


def canonical_curves(j: RealizableSpadjor, tol: Tolerance) -> List[Tuple[Point, ...]]:
    return sorted(canonical_points(c, tol) for c in j.curves)


def canonicalize(j: RealizableSpadjor, tol: Tolerance) -> RealizableSpadjor:
    if j.is_special:
        return j
    curves = [OrientedJordanCurve(pts) for pts in canonical_curves(j, tol)]
    return build_spadjor(curves, tol)


def _cyclic_match(a: Sequence[Point], b: Sequence[Point], tol: Tolerance) -> bool:
    if len(a) != len(b):
        return False
    n = len(a)
    for shift in range(n):
        if not points_equal(a[0], b[shift], tol):
            continue
        if all(points_equal(a[i], b[(shift + i) % n], tol) for i in range(n)):
            return True
    return False


def equal_canonical(j: RealizableSpadjor, k: RealizableSpadjor, tol: Tolerance) -> bool:
    """
    Same Yin set up to eps.

    Curves are matched as cycles rather than by their start vertex, so eps
    jitter that changes which vertex is smallest does not matter.
    """
    if j.kind != k.kind:
        return False
    if j.is_special:
        return True
    left = canonical_curves(j, tol)
    right = canonical_curves(k, tol)
    if len(left) != len(right):
        return False
    unmatched = list(right)
    for curve in left:
        for pos, other in enumerate(unmatched):
            if _cyclic_match(curve, other, tol):
                del unmatched[pos]
                break
        else:
            return False
    return True
