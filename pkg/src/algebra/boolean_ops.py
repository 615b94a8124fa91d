"""
Boolean algebra on realizable spadjors: complement, meet and everything
built from them.
"""

import logging
import math
from enum import Enum
from typing import Iterable, List, Optional, Tuple

from ..config import get_settings
from ..exceptions import InvariantViolationError
from ..geom_core import distance_to_segment, dot
from ..models.geometry import Point, PointLocation, Tolerance
from ..models.segmented import OrientedPath, SegmentedSpadjor
from ..models.spadjor import ONE, RealizableSpadjor, ZERO
from ..sweep import find_intersections
from ..topology import build_spadjor, improper_intersections, locate, validate
from .cutting import cut, merge_segmented, paste

logger = logging.getLogger(__name__)


def resolve_tolerance(tol: Optional[Tolerance]) -> Tolerance:
    if tol is not None:
        return tol
    return Tolerance(get_settings().epsilon)


def _checked(name: str, result: RealizableSpadjor, tol: Tolerance) -> RealizableSpadjor:
    if result.is_special or not get_settings().validate_results:
        return result
    violations = validate(result.curves, tol)
    if violations:
        logger.error(f"{name} produced an invalid spadjor: {violations[0]}")
        raise InvariantViolationError(f"{name} result failed validation", violations)
    return result


def complement(
    j: RealizableSpadjor, tol: Optional[Tolerance] = None
) -> RealizableSpadjor:
    """Spadjor of the complement: cut at touch points, reverse every path, paste"""
    tol = resolve_tolerance(tol)
    if j.is_zero:
        return ONE
    if j.is_one:
        return ZERO

    v = improper_intersections(j, tol)
    if not v:
        result = build_spadjor([c.reversed() for c in j.curves], tol)
    else:
        logger.debug(f"Complement regroups paths at {len(v)} touch points")
        result = paste(cut(j, v, tol).reversed(), tol)
    return _checked("complement", result, tol)


class PathPlacement(Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    SHARED_SAME = "shared_same"
    SHARED_OPPOSITE = "shared_opposite"


def _path_samples(path: OrientedPath) -> List[Tuple[Point, Point]]:
    """(sample point, direction) pairs along the path, best candidates first"""
    pts = path.points
    if path.is_loop:
        pts = pts + (pts[0],)
    segments = sorted(
        range(len(pts) - 1),
        key=lambda i: -pts[i].distance_to(pts[i + 1]),
    )
    samples = []
    for rank, i in enumerate(segments[:3]):
        a, b = pts[i], pts[i + 1]
        direction = b - a
        fractions = (0.5, 1.0 / 3.0, 2.0 / 3.0) if rank == 0 else (0.5,)
        for f in fractions:
            sample = Point(a.x + direction.x * f, a.y + direction.y * f)
            samples.append((sample, direction))
    return samples


def _nearest_edge(other: RealizableSpadjor, p: Point) -> Tuple[float, Point]:
    best = (math.inf, Point(0.0, 0.0))
    for curve in other.curves:
        verts = curve.vertices
        a = verts[-1]
        for b in verts:
            d = distance_to_segment(p, a, b)
            if d < best[0]:
                best = (d, b - a)
            a = b
    return best


def classify_path(
    path: OrientedPath, other: RealizableSpadjor, tol: Tolerance
) -> PathPlacement:
    """
    Where a cut path lies relative to the other operand.

    Paths never cross the other boundary, so one sample decides, unless
    every sample hugs the other boundary, in which case the path is shared
    and its direction is compared with the other curve's.
    """
    samples = _path_samples(path)
    for sample, _ in samples:
        dist, _ = _nearest_edge(other, sample)
        if dist >= tol.eps:
            inside = locate(other, sample, tol) is PointLocation.INTERIOR
            return PathPlacement.INSIDE if inside else PathPlacement.OUTSIDE

    sample, direction = samples[0]
    _, edge_dir = _nearest_edge(other, sample)
    if dot(direction, edge_dir) > 0:
        return PathPlacement.SHARED_SAME
    return PathPlacement.SHARED_OPPOSITE


def _select_paths(
    segmented: SegmentedSpadjor,
    other: RealizableSpadjor,
    keep_shared: bool,
    tol: Tolerance,
) -> List[OrientedPath]:
    kept = []
    for path in segmented.paths:
        placement = classify_path(path, other, tol)
        keep = placement is PathPlacement.INSIDE or (
            keep_shared and placement is PathPlacement.SHARED_SAME
        )
        logger.debug(f"Path of {len(path.points)} points from operand {path.source}: "
                     f"{placement.value}, {'kept' if keep else 'dropped'}")
        if keep:
            kept.append(path)
    return kept


def meet(
    j: RealizableSpadjor, k: RealizableSpadjor, tol: Optional[Tolerance] = None
) -> RealizableSpadjor:
    """Spadjor of the intersection of the two Yin sets"""
    tol = resolve_tolerance(tol)
    if j.is_zero or k.is_zero:
        return ZERO
    if k.is_one:
        return j
    if j.is_one:
        return k

    n_j = len(j.curves)
    records = find_intersections(j.curves + k.curves, tol)
    v_j = [r.point for r in records if any(c < n_j for c in r.curves)]
    v_k = [r.point for r in records if any(c >= n_j for c in r.curves)]

    cut_j = cut(j, v_j, tol, source=0)
    cut_k = cut(k, v_k, tol, source=1)

    # shared paths enter once, from the first operand
    kept_j = _select_paths(cut_j, k, True, tol)
    kept_k = _select_paths(cut_k, j, False, tol)

    merged = merge_segmented(
        [
            SegmentedSpadjor(cut_j.vertices, tuple(kept_j)),
            SegmentedSpadjor(cut_k.vertices, tuple(kept_k)),
        ]
    )
    logger.debug(
        f"Meet keeps {len(kept_j)} + {len(kept_k)} paths at {len(records)} points"
    )
    return _checked("meet", paste(merged, tol), tol)


def join(
    j: RealizableSpadjor, k: RealizableSpadjor, tol: Optional[Tolerance] = None
) -> RealizableSpadjor:
    """Regularized union, as the complement of the meet of complements"""
    tol = resolve_tolerance(tol)
    return complement(meet(complement(j, tol), complement(k, tol), tol), tol)


def difference(
    j: RealizableSpadjor, k: RealizableSpadjor, tol: Optional[Tolerance] = None
) -> RealizableSpadjor:
    tol = resolve_tolerance(tol)
    return meet(j, complement(k, tol), tol)


def symmetric_difference(
    j: RealizableSpadjor, k: RealizableSpadjor, tol: Optional[Tolerance] = None
) -> RealizableSpadjor:
    tol = resolve_tolerance(tol)
    return join(difference(j, k, tol), difference(k, j, tol), tol)


def meet_all(
    spadjors: Iterable[RealizableSpadjor], tol: Optional[Tolerance] = None
) -> RealizableSpadjor:
    tol = resolve_tolerance(tol)
    result = ONE
    for s in spadjors:
        result = meet(result, s, tol)
    return result


def join_all(
    spadjors: Iterable[RealizableSpadjor], tol: Optional[Tolerance] = None
) -> RealizableSpadjor:
    tol = resolve_tolerance(tol)
    result = ZERO
    for s in spadjors:
        result = join(result, s, tol)
    return result


OPERATIONS = {
    "complement": complement,
    "meet": meet,
    "join": join,
    "difference": difference,
    "symdiff": symmetric_difference,
}


def operand_count(name: str) -> int:
    return 1 if name == "complement" else 2
