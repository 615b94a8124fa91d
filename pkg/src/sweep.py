"""
Plane sweep over curve edges: finds every eps-intersection, clusters nearby
hits into incidence records and classifies them as proper or improper.
"""

import heapq
import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sortedcontainers import SortedList

from .exceptions import MalformedIncidenceError
from .geom_core import ccw_angle, points_equal, segment_intersect, TWO_PI
from .models.curve import OrientedJordanCurve
from .models.geometry import (
    Incidence,
    IncidenceRecord,
    IntersectionClass,
    IntersectionKind,
    Point,
    Segment,
    Tolerance,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeRef:
    curve: int
    edge: int
    # number of edges on the owning curve, for adjacency tests
    ring_size: int


@dataclass(frozen=True)
class TaggedSegment:
    ref: EdgeRef
    segment: Segment


@dataclass(frozen=True)
class RawHit:
    point: Point
    snapped: bool
    incidents: Tuple[Incidence, Incidence]
    overlap: Optional[Tuple[Tuple[int, int], Tuple[int, int]]] = None

    def sort_key(self):
        return (self.point.x, self.point.y, self.incidents)


def curve_segments(curves: Sequence[OrientedJordanCurve]) -> List[TaggedSegment]:
    tagged = []
    for ci, curve in enumerate(curves):
        n = len(curve)
        for ei in range(n):
            tagged.append(TaggedSegment(EdgeRef(ci, ei, n), curve.edge(ei)))
    return tagged


def _adjacent(r1: EdgeRef, r2: EdgeRef) -> bool:
    if r1.curve != r2.curve:
        return False
    n = r1.ring_size
    return (r1.edge + 1) % n == r2.edge or (r2.edge + 1) % n == r1.edge


def _shared_vertex(s1: TaggedSegment, s2: TaggedSegment) -> Point:
    if (s1.ref.edge + 1) % s1.ref.ring_size == s2.ref.edge:
        return s1.segment.b
    return s2.segment.b


def _incidence(s: TaggedSegment, p: Point) -> Incidence:
    return Incidence(s.ref.curve, s.ref.edge, s.segment.parameter_of(p))


def pair_hits(s1: TaggedSegment, s2: TaggedSegment, tol: Tolerance) -> List[RawHit]:
    """Raw intersection hits between two tagged edges"""
    result = segment_intersect(s1.segment, s2.segment, tol)
    if result.kind is IntersectionKind.NONE:
        return []

    if result.kind is IntersectionKind.AT_POINT:
        if _adjacent(s1.ref, s2.ref) and points_equal(
            result.point, _shared_vertex(s1, s2), tol
        ):
            # consecutive edges always meet at their common vertex
            return []
        p = result.point
        incidents = tuple(sorted((_incidence(s1, p), _incidence(s2, p))))
        return [RawHit(result.point, result.snapped, incidents)]

    tag = tuple(sorted(((s1.ref.curve, s1.ref.edge), (s2.ref.curve, s2.ref.edge))))
    hits = []
    for p in (result.overlap.a, result.overlap.b):
        incidents = tuple(sorted((_incidence(s1, p), _incidence(s2, p))))
        hits.append(RawHit(p, True, incidents, tag))
    return hits


def cluster_hits(hits: Sequence[RawHit], tol: Tolerance) -> List[IncidenceRecord]:
    """
    Merge hits lying within eps of a cluster seed.

    Hits are visited in lexicographic order and each joins the first seed
    within eps, so the outcome is deterministic even though eps-equality is
    not transitive. The representative point is the smallest snapped
    endpoint in the cluster, or the seed when none was snapped.
    """
    eps = tol.eps
    grid: Dict[Tuple[int, int], List[int]] = {}
    seeds: List[Point] = []
    members: List[List[RawHit]] = []

    for hit in sorted(hits, key=RawHit.sort_key):
        p = hit.point
        cx, cy = math.floor(p.x / eps), math.floor(p.y / eps)
        found = None
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for ci in grid.get((cx + dx, cy + dy), ()):
                    if found is not None and ci >= found:
                        continue
                    if points_equal(seeds[ci], p, tol):
                        found = ci
        if found is None:
            found = len(seeds)
            seeds.append(p)
            members.append([])
            grid.setdefault((cx, cy), []).append(found)
        members[found].append(hit)

    records = []
    for seed, group in zip(seeds, members):
        snapped = [h.point for h in group if h.snapped]
        rep = min(snapped) if snapped else seed
        incident: Dict[Tuple[int, int], Incidence] = {}
        overlaps = set()
        for h in group:
            for inc in h.incidents:
                incident.setdefault((inc.curve, inc.edge), inc)
            if h.overlap is not None:
                overlaps.add(h.overlap)
        records.append(
            IncidenceRecord(
                rep,
                tuple(incident[k] for k in sorted(incident)),
                tuple(sorted(overlaps)),
            )
        )
    records.sort(key=lambda r: (r.point.x, r.point.y))
    return records


class Broom:
    """Sweep line position shared by every edge in the status"""

    def __init__(self):
        self.x = -math.inf
        self.y = -math.inf
        # heights forced to the event point while its edges are reinserted
        self.pinned: Dict[int, float] = {}


class SweepEdge:
    """An edge in the sweep status, ordered by its height at the broom"""

    __slots__ = ("index", "lo", "hi", "slope", "reach", "broom")

    def __init__(self, index: int, segment: Segment, band: float, broom: Broom):
        self.index = index
        self.lo, self.hi = sorted((segment.a, segment.b))
        dx = self.hi.x - self.lo.x
        self.slope = math.inf if dx == 0.0 else (self.hi.y - self.lo.y) / dx
        # vertical offset matching a perpendicular distance of band
        self.reach = band if dx == 0.0 else band * math.hypot(1.0, self.slope)
        self.broom = broom

    @property
    def is_vertical(self) -> bool:
        return self.slope == math.inf

    def y_at(self, x: float, y: float) -> float:
        lo, hi = self.lo, self.hi
        if self.is_vertical:
            # a vertical edge sits at the event being processed on its line
            return min(max(y, lo.y), hi.y)
        if x <= lo.x:
            return lo.y
        if x >= hi.x:
            return hi.y
        return lo.y + (x - lo.x) * self.slope

    def height(self) -> float:
        b = self.broom
        pinned = b.pinned.get(self.index)
        return pinned if pinned is not None else self.y_at(b.x, b.y)

    def key(self):
        return (self.height(), self.slope, self.index)

    def __lt__(self, other) -> bool:
        return self.key() < other.key()


class _HeightMark:
    """Sorts before every edge at height y"""

    __slots__ = ("y",)

    def __init__(self, y: float):
        self.y = y

    def key(self):
        return (self.y, -math.inf, -1)

    def __lt__(self, other) -> bool:
        return self.key() < other.key()


def _reaches(edge: SweepEdge, y: float) -> bool:
    return abs(edge.height() - y) <= edge.reach


def _discard(status: SortedList, edge: SweepEdge):
    try:
        status.remove(edge)
    except ValueError:
        # float noise left the edge out of order; find it by identity
        logger.debug(f"Edge {edge.index} out of sweep order, removing by scan")
        for i, item in enumerate(status):
            if item is edge:
                del status[i]
                return


def _near_endpoints(
    edges: Sequence[SweepEdge], band: float
) -> Iterator[Tuple[SweepEdge, SweepEdge]]:
    """Edge pairs with endpoints within band of each other"""
    grid: Dict[Tuple[int, int], List[Tuple[Point, SweepEdge]]] = {}
    for edge in edges:
        for p in (edge.lo, edge.hi):
            cx, cy = math.floor(p.x / band), math.floor(p.y / band)
            for dx in (-1, 0, 1):
                for dy in (-1, 0, 1):
                    for q, other in grid.get((cx + dx, cy + dy), ()):
                        if other is not edge and p.distance_to(q) <= band:
                            yield other, edge
            grid.setdefault((cx, cy), []).append((p, edge))


def sweep_segments(
    segments: Sequence[TaggedSegment], tol: Tolerance
) -> List[IncidenceRecord]:
    """
    Bentley-Ottmann sweep in (x, y) order with eps-aware event handling.

    At each event point the edges passing within eps of it are tested against
    each other, the ones through the point are reinserted in their order just
    right of it, and the new neighbours are tested. Crossings found on the way
    become events. An edge endpoint within eps of another edge is caught at
    that endpoint's event; endpoints that nearly coincide are paired up front.
    """
    band = 4.0 * tol.eps
    broom = Broom()
    edges = [SweepEdge(i, s.segment, band, broom) for i, s in enumerate(segments)]
    starts: Dict[Point, List[SweepEdge]] = {}
    ends: Dict[Point, List[SweepEdge]] = {}
    for edge in edges:
        starts.setdefault(edge.lo, []).append(edge)
        ends.setdefault(edge.hi, []).append(edge)

    queue = [(p.x, p.y) for p in set(starts) | set(ends)]
    heapq.heapify(queue)
    scheduled = set(queue)
    status = SortedList()
    tested = set()
    hits: List[RawHit] = []

    def test(a: SweepEdge, b: SweepEdge, here: Tuple[float, float]):
        pair = (a.index, b.index) if a.index < b.index else (b.index, a.index)
        if a is b or pair in tested:
            return
        tested.add(pair)
        found = pair_hits(segments[pair[0]], segments[pair[1]], tol)
        hits.extend(found)
        line = a.lo.x if a.is_vertical else b.lo.x if b.is_vertical else None
        for hit in found:
            # rounding can put a crossing a hair off a vertical or behind the broom
            x = hit.point.x if line is None else line
            event = (max(x, here[0]), hit.point.y)
            if event > here and event not in scheduled:
                scheduled.add(event)
                heapq.heappush(queue, event)

    start = (-math.inf, -math.inf)
    for a, b in _near_endpoints(edges, band):
        test(a, b, start)

    while queue:
        here = heapq.heappop(queue)
        p = Point(*here)
        broom.x, broom.y = here

        i = status.bisect_left(_HeightMark(p.y))
        lo = i
        while lo > 0 and _reaches(status[lo - 1], p.y):
            lo -= 1
        hi = i
        while hi < len(status) and _reaches(status[hi], p.y):
            hi += 1
        nearby = status[lo:hi]
        arriving = starts.get(p, [])
        group = nearby + arriving
        for a, b in combinations(group, 2):
            test(a, b, here)

        through = [k for k in range(lo, hi) if abs(status[k].height() - p.y) <= band]
        rlo, rhi = (through[0], through[-1] + 1) if through else (i, i)
        passing = status[rlo:rhi]
        del status[rlo:rhi]
        removed = {edge.index for edge in passing}
        for edge in ends.get(p, []):
            if edge.index not in removed:
                _discard(status, edge)

        rising = [edge for edge in passing if edge.hi > p] + arriving
        broom.pinned = {edge.index: p.y for edge in rising}
        for edge in rising:
            status.add(edge)
        broom.pinned = {}

        top = rlo + len(rising)
        if 0 < rlo < len(status):
            test(status[rlo - 1], status[rlo], here)
        if rising and 0 < top < len(status):
            test(status[top - 1], status[top], here)

    logger.debug(
        f"Sweep over {len(segments)} segments tested {len(tested)} pairs, "
        f"{len(hits)} hits"
    )
    return cluster_hits(hits, tol)


def brute_force_segments(
    segments: Sequence[TaggedSegment], tol: Tolerance
) -> List[IncidenceRecord]:
    """All-pairs variant of sweep_segments"""
    hits: List[RawHit] = []
    for s1, s2 in combinations(segments, 2):
        hits.extend(pair_hits(s1, s2, tol))
    return cluster_hits(hits, tol)


def find_intersections(
    curves: Sequence[OrientedJordanCurve], tol: Tolerance
) -> List[IncidenceRecord]:
    """Every intersection among the curves' edges, clustered under eps"""
    return sweep_segments(curve_segments(curves), tol)


@dataclass(frozen=True)
class LocalPass:
    """One passage of a curve through an intersection point"""

    curve: int
    backward: Point
    forward: Point


def local_passes(
    record: IncidenceRecord, curves: Sequence[OrientedJordanCurve], tol: Tolerance
) -> List[LocalPass]:
    p = record.point
    seen = set()
    passes = []
    for inc in record.incident:
        verts = curves[inc.curve].vertices
        n = len(verts)
        a = verts[inc.edge]
        b = verts[(inc.edge + 1) % n]
        if points_equal(p, a, tol):
            key = ("vertex", inc.edge)
            prev, nxt = verts[inc.edge - 1], b
        elif points_equal(p, b, tol):
            k = (inc.edge + 1) % n
            key = ("vertex", k)
            prev, nxt = a, verts[(k + 1) % n]
        else:
            key = ("edge", inc.edge)
            prev, nxt = a, b
        if (inc.curve, key) in seen:
            continue
        seen.add((inc.curve, key))
        passes.append(LocalPass(inc.curve, prev - p, nxt - p))
    return passes


def _coincide(u: Point, v: Point, tol: Tolerance) -> bool:
    return ccw_angle(u, v, tol) == TWO_PI


def passes_alternate(first: LocalPass, second: LocalPass, tol: Tolerance) -> bool:
    """True when second's two directions lie on opposite sides of first's"""
    for u in (first.backward, first.forward):
        for v in (second.backward, second.forward):
            if _coincide(u, v, tol):
                return False
    arc = ccw_angle(first.backward, first.forward)
    inside_back = ccw_angle(first.backward, second.backward) < arc
    inside_fwd = ccw_angle(first.backward, second.forward) < arc
    return inside_back != inside_fwd


def _too_few_passes(record: IncidenceRecord) -> MalformedIncidenceError:
    p = record.point
    return MalformedIncidenceError(
        f"Intersection at ({p.x}, {p.y}) needs two local branches"
    )


def classify_vertex(
    record: IncidenceRecord, curves: Sequence[OrientedJordanCurve], tol: Tolerance
) -> IntersectionClass:
    """Proper if any two local passes cross each other at the point"""
    passes = local_passes(record, curves, tol)
    if len(passes) < 2:
        logger.error(f"Incidence at {record.point} has {len(passes)} local pass(es)")
        raise _too_few_passes(record)
    for first, second in combinations(passes, 2):
        if passes_alternate(first, second, tol):
            return IntersectionClass.PROPER
    return IntersectionClass.IMPROPER


def classify_pairs(
    record: IncidenceRecord, curves: Sequence[OrientedJordanCurve], tol: Tolerance
) -> List[Tuple[int, int, IntersectionClass]]:
    """Classification for every pair of curves (including a curve with itself)"""
    passes = local_passes(record, curves, tol)
    if len(passes) < 2:
        logger.error(f"Incidence at {record.point} has {len(passes)} local pass(es)")
        raise _too_few_passes(record)
    verdict: Dict[Tuple[int, int], IntersectionClass] = {}
    for first, second in combinations(passes, 2):
        key = tuple(sorted((first.curve, second.curve)))
        if passes_alternate(first, second, tol):
            verdict[key] = IntersectionClass.PROPER
        else:
            verdict.setdefault(key, IntersectionClass.IMPROPER)
    return [(a, b, cls) for (a, b), cls in sorted(verdict.items())]
