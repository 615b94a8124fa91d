"""
Cutting curves into oriented paths at a vertex set, and pasting paths back
into Jordan curves.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from sortedcontainers import SortedKeyList

from ..exceptions import InvalidCutPointError, MalformedCurveError, NonPastableError
from ..geom_core import ccw_angle, distance_to_segment
from ..models.curve import OrientedJordanCurve
from ..models.geometry import Point, Tolerance
from ..models.segmented import OrientedPath, SegmentedSpadjor
from ..models.spadjor import RealizableSpadjor, ZERO
from ..topology import build_spadjor

logger = logging.getLogger(__name__)


class VertexIndex:
    """Cut points ordered by x for eps range queries"""

    def __init__(self, points: Sequence[Point], tol: Tolerance):
        self.points = list(points)
        self.eps = tol.eps
        self._by_x = SortedKeyList(
            range(len(self.points)), key=lambda i: self.points[i].x
        )

    def near_segment(self, a: Point, b: Point) -> List[Tuple[int, float]]:
        """(index, distance) of every cut point within eps of segment ab"""
        eps = self.eps
        lo_y, hi_y = min(a.y, b.y) - eps, max(a.y, b.y) + eps
        found = []
        for i in self._by_x.irange_key(min(a.x, b.x) - eps, max(a.x, b.x) + eps):
            p = self.points[i]
            if lo_y <= p.y <= hi_y:
                dist = distance_to_segment(p, a, b)
                if dist < eps:
                    found.append((i, dist))
        return found


def _unique_points(points: Sequence[Point]) -> List[Point]:
    seen = set()
    unique = []
    for p in points:
        if p not in seen:
            seen.add(p)
            unique.append(p)
    return unique


def _split_curve(
    curve: OrientedJordanCurve,
    index: VertexIndex,
    touched: List[bool],
    source: int,
) -> List[OrientedPath]:
    eps = index.eps
    verts = curve.vertices
    n = len(verts)
    refined: List[Tuple[Point, Optional[int]]] = []

    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        at_start: Optional[Tuple[float, int]] = None
        inner = []
        for vi, dist in index.near_segment(a, b):
            touched[vi] = True
            p = index.points[vi]
            if p.distance_to(a) < eps:
                if at_start is None or p.distance_to(a) < at_start[0]:
                    at_start = (p.distance_to(a), vi)
            elif p.distance_to(b) >= eps:
                dx, dy = b.x - a.x, b.y - a.y
                t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy)
                inner.append((t, vi))
        if at_start is not None:
            refined.append((index.points[at_start[1]], at_start[1]))
        else:
            refined.append((a, None))
        for _, vi in sorted(inner):
            refined.append((index.points[vi], vi))

    # a cut point hit twice in a row (near two close vertices) counts once
    collapsed: List[Tuple[Point, Optional[int]]] = []
    for p, vi in refined:
        if collapsed and vi is not None and collapsed[-1][1] == vi:
            continue
        collapsed.append((p, vi))
    first_cut = collapsed[0][1]
    while (
        len(collapsed) > 1 and first_cut is not None and collapsed[-1][1] == first_cut
    ):
        collapsed.pop()

    cuts = [k for k, (_, vi) in enumerate(collapsed) if vi is not None]
    if not cuts:
        return [OrientedPath(curve.vertices, source=source)]

    m = len(collapsed)
    paths = []
    for c, start in enumerate(cuts):
        stop = cuts[(c + 1) % len(cuts)]
        span = (stop - start) % m or m
        pts = [collapsed[(start + k) % m][0] for k in range(span + 1)]
        paths.append(
            OrientedPath(tuple(pts), collapsed[start][1], collapsed[stop][1], source)
        )
    return paths


def cut(
    j: RealizableSpadjor,
    v: Sequence[Point],
    tol: Tolerance,
    source: int = 0,
) -> SegmentedSpadjor:
    """
    Split every curve of j at the points of v lying on it.

    Curves touched by no point of v become self-loops. Paths keep the
    orientation of their curve.
    """
    if j.is_special:
        raise ValueError(f"Cannot cut the special spadjor {j.kind.value}")
    vertices = _unique_points(v)
    index = VertexIndex(vertices, tol)
    touched = [False] * len(vertices)

    paths: List[OrientedPath] = []
    for curve in j.curves:
        paths.extend(_split_curve(curve, index, touched, source))

    stray = [vertices[i] for i, hit in enumerate(touched) if not hit]
    if stray:
        p = stray[0]
        logger.error(
            f"{len(stray)} cut point(s) lie on no curve, first at ({p.x}, {p.y})"
        )
        raise InvalidCutPointError(
            f"Cut point ({p.x}, {p.y}) is farther than eps from every curve"
        )

    return SegmentedSpadjor(tuple(vertices), tuple(paths))


def merge_segmented(parts: Sequence[SegmentedSpadjor]) -> SegmentedSpadjor:
    """Union of segmented spadjors, identifying equal vertex points"""
    vertices: List[Point] = []
    lookup: Dict[Point, int] = {}
    paths: List[OrientedPath] = []
    for part in parts:
        remap = {}
        for old, p in enumerate(part.vertices):
            if p not in lookup:
                lookup[p] = len(vertices)
                vertices.append(p)
            remap[old] = lookup[p]
        for path in part.paths:
            if path.is_loop:
                paths.append(path)
            else:
                start, end = remap[path.start], remap[path.end]
                paths.append(OrientedPath(path.points, start, end, path.source))
    return SegmentedSpadjor(tuple(vertices), tuple(paths))


def _choose_successors(
    paths: Sequence[OrientedPath], tol: Tolerance
) -> Dict[int, int]:
    """
    For each path, the path that continues it at its end vertex.

    The continuation is the free out-path with the smallest counterclockwise
    angle from its out-direction to the reversed in-direction, which keeps
    the region on the left. Near-ties go to the shorter first segment, then
    to the smaller second point.
    """
    incoming: Dict[int, List[int]] = {}
    outgoing: Dict[int, List[int]] = {}
    for k, path in enumerate(paths):
        outgoing.setdefault(path.start, []).append(k)
        incoming.setdefault(path.end, []).append(k)

    successor: Dict[int, int] = {}
    for vertex in sorted(incoming):
        free = list(outgoing.get(vertex, []))
        for k in incoming[vertex]:
            back = paths[k].in_direction()
            scored = []
            for o in free:
                out_dir = paths[o].out_direction()
                angle = ccw_angle(out_dir, back, tol)
                scored.append((angle, out_dir.norm(), paths[o].points[1], o))
            best_angle = min(s[0] for s in scored)
            near = [s for s in scored if s[0] - best_angle <= tol.eps]
            chosen = min(near, key=lambda s: (s[1], s[2], s[3]))[3]
            if len(scored) > 1:
                logger.debug(
                    f"Vertex {vertex}: path {k} continues with path {chosen} "
                    f"of {len(scored)} candidates"
                )
            successor[k] = chosen
            free.remove(chosen)
    return successor


def _split_at_repeats(
    pieces: Sequence[OrientedPath],
) -> List[List[OrientedPath]]:
    """
    Split a closed walk that revisits vertices into simple loops.

    Paths are pushed on a stack; when a vertex comes round again, the paths
    since its first visit form a loop and are popped.
    """
    loops = []
    stack: List[OrientedPath] = []
    position: Dict[int, int] = {}
    for path in pieces:
        if path.start not in position:
            position[path.start] = len(stack)
        stack.append(path)
        if path.end in position:
            at = position[path.end]
            loop = stack[at:]
            del stack[at:]
            for p in loop:
                position.pop(p.start, None)
            if stack or path.end != pieces[0].start:
                position[path.end] = len(stack)
            loops.append(loop)
    if stack:
        loops.append(stack)
    return loops


def _loop_points(loop: Sequence[OrientedPath]) -> List[Point]:
    points: List[Point] = []
    for path in loop:
        points.extend(path.points[:-1])
    return points


def _make_curve(
    points: Sequence[Point], tol: Tolerance
) -> Optional[OrientedJordanCurve]:
    try:
        return OrientedJordanCurve.from_points(points, tol)
    except MalformedCurveError as e:
        logger.debug(f"Dropping degenerate loop of {len(points)} points: {e}")
        return None


def paste_curves(e: SegmentedSpadjor, tol: Tolerance) -> List[OrientedJordanCurve]:
    """Reassemble the paths of e into Jordan curves"""
    mismatched = e.degree_mismatches()
    if mismatched:
        p = e.vertices[mismatched[0]]
        logger.error(f"In-degree differs from out-degree at {len(mismatched)} vertices")
        raise NonPastableError(f"Vertex ({p.x}, {p.y}) has unequal in- and out-degree")

    curves: List[OrientedJordanCurve] = []
    for loop in e.loops():
        curve = _make_curve(loop.points, tol)
        if curve is not None:
            curves.append(curve)

    open_paths = e.open_paths()
    successor = _choose_successors(open_paths, tol)
    visited = set()
    for first in range(len(open_paths)):
        if first in visited:
            continue
        walk = []
        k = first
        while k not in visited:
            visited.add(k)
            walk.append(open_paths[k])
            k = successor[k]
        if k != first:
            raise NonPastableError("Path successors do not close into a cycle")
        for loop in _split_at_repeats(walk):
            curve = _make_curve(_loop_points(loop), tol)
            if curve is not None:
                curves.append(curve)
    return curves


def paste(e: SegmentedSpadjor, tol: Tolerance) -> RealizableSpadjor:
    """Inverse of cut: the realizable spadjor bounded by the paths of e"""
    curves = paste_curves(e, tol)
    if not curves:
        return ZERO
    return build_spadjor(curves, tol)
