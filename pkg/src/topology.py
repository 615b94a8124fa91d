"""
Spadjor structure: point location, inclusion, Hasse diagram, atoms, Betti
numbers and validation.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .exceptions import NotRealizableError, PreconditionViolationError
from .geom_core import cross, distance_to_segment, points_equal
from .models.curve import AtomSpadjor, OrientedJordanCurve
from .models.geometry import (
    IntersectionClass,
    Orientation,
    Point,
    PointLocation,
    Tolerance,
)
from .models.spadjor import (
    BettiNumbers,
    HasseDiagram,
    ONE,
    RealizableSpadjor,
    SpadjorKind,
    ZERO,
)
from .sweep import classify_pairs, find_intersections

logger = logging.getLogger(__name__)

# ear samples tried by includes before giving up
MAX_SAMPLES = 4


def orientation(c: OrientedJordanCurve) -> Orientation:
    return c.orientation


def near_boundary(c: OrientedJordanCurve, p: Point, tol: Tolerance) -> bool:
    """True when p is within eps of some edge of c"""
    eps = tol.eps
    x0, y0, x1, y1 = c.bbox
    if p.x < x0 - eps or p.x > x1 + eps or p.y < y0 - eps or p.y > y1 + eps:
        return False
    verts = c.vertices
    prev = verts[-1]
    for cur in verts:
        if (
            min(prev.x, cur.x) - eps <= p.x <= max(prev.x, cur.x) + eps
            and min(prev.y, cur.y) - eps <= p.y <= max(prev.y, cur.y) + eps
            and distance_to_segment(p, prev, cur) < eps
        ):
            return True
        prev = cur
    return False


def in_bounded_complement(c: OrientedJordanCurve, p: Point) -> bool:
    """Crossing-number parity; p must not lie on the curve"""
    x0, y0, x1, y1 = c.bbox
    if p.x < x0 or p.x > x1 or p.y < y0 or p.y > y1:
        return False
    inside = False
    verts = c.vertices
    a = verts[-1]
    for b in verts:
        if (a.y > p.y) != (b.y > p.y):
            x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if p.x < x_cross:
                inside = not inside
        a = b
    return inside


def _in_interior(c: OrientedJordanCurve, p: Point) -> bool:
    return in_bounded_complement(c, p) == c.is_positive


def interior_contains(
    c: OrientedJordanCurve, p: Point, tol: Tolerance
) -> PointLocation:
    if near_boundary(c, p, tol):
        return PointLocation.BOUNDARY
    return PointLocation.INTERIOR if _in_interior(c, p) else PointLocation.EXTERIOR


def _point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    d1 = cross(b - a, p - a)
    d2 = cross(c - b, p - b)
    d3 = cross(a - c, p - c)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def ear_samples(c: OrientedJordanCurve, tol: Tolerance) -> Iterator[Point]:
    """Centroids of ears of c, each strictly inside its bounded complement"""
    verts = c.vertices
    n = len(verts)
    sign = 1.0 if c.is_positive else -1.0
    for i in range(n):
        a, b, d = verts[i - 1], verts[i], verts[(i + 1) % n]
        turn = cross(b - a, d - b) * sign
        if turn <= tol.eps_sq:
            continue
        if any(
            _point_in_triangle(q, a, b, d)
            for k, q in enumerate(verts)
            if k not in (i, (i - 1) % n, (i + 1) % n)
        ):
            continue
        yield Point((a.x + b.x + d.x) / 3.0, (a.y + b.y + d.y) / 3.0)


def _bbox_inside(inner, outer, eps: float) -> bool:
    return (
        inner[0] >= outer[0] - eps
        and inner[1] >= outer[1] - eps
        and inner[2] <= outer[2] + eps
        and inner[3] <= outer[3] + eps
    )


def includes(a: OrientedJordanCurve, b: OrientedJordanCurve, tol: Tolerance) -> bool:
    """
    True iff the bounded complement of b lies inside the bounded complement of a.

    Ear centroids of b are tested against a. Samples on a's boundary are
    skipped; disagreeing samples mean the curves cross.
    """
    if not _bbox_inside(b.bbox, a.bbox, tol.eps):
        return False
    answers = []
    for sample in ear_samples(b, tol):
        if near_boundary(a, sample, tol):
            logger.warning(
                f"Inclusion sample ({sample.x}, {sample.y}) lies on a boundary"
            )
            continue
        answers.append(in_bounded_complement(a, sample))
        if len(answers) >= MAX_SAMPLES:
            break
    if not answers:
        logger.error("No usable inclusion sample point")
        raise PreconditionViolationError(
            "Could not find a sample point off the other curve"
        )
    if len(set(answers)) > 1:
        logger.error("Inclusion samples disagree; curves cross properly")
        raise PreconditionViolationError("Curves have a proper intersection")
    return answers[0]


def build_hasse(curves: Sequence[OrientedJordanCurve], tol: Tolerance) -> HasseDiagram:
    """Parent of each curve is the smallest curve that strictly includes it"""
    areas = [abs(c.area) for c in curves]
    by_area = sorted(range(len(curves)), key=lambda i: (areas[i], i))
    parent: List[Optional[int]] = [None] * len(curves)
    for pos, i in enumerate(by_area):
        for j in by_area[pos + 1:]:
            if areas[j] > areas[i] and includes(curves[j], curves[i], tol):
                parent[i] = j
                break
    return HasseDiagram(tuple(parent))


class ViolationKind(Enum):
    SELF_INTERSECTION = "self-intersection"
    PROPER_INTERSECTION = "proper-intersection"
    OVERLAP = "overlap"
    ALTERNATION = "alternation"
    ROOT_ORIENTATION = "root-orientation"
    INCLUSION = "inclusion"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str
    curves: Tuple[int, ...] = ()
    point: Optional[Point] = None

    def __str__(self) -> str:
        where = ""
        if self.point is not None:
            where = f" at ({self.point.x}, {self.point.y})"
        return f"{self.kind.value}: {self.message}{where}"


def alternation_violations(
    curves: Sequence[OrientedJordanCurve], hasse: HasseDiagram
) -> List[Violation]:
    violations = []
    for child, par in enumerate(hasse.parent):
        if par is not None and curves[par].is_positive == curves[child].is_positive:
            side = "positive" if curves[child].is_positive else "negative"
            violations.append(
                Violation(
                    ViolationKind.ALTERNATION,
                    f"curve {child} and its parent {par} are both {side}",
                    (par, child),
                )
            )
    roots = hasse.roots
    if len({curves[r].is_positive for r in roots}) > 1:
        violations.append(
            Violation(
                ViolationKind.ROOT_ORIENTATION,
                "outermost curves mix positive and negative orientation",
                tuple(roots),
            )
        )
    return violations


def atoms_from_hasse(
    curves: Sequence[OrientedJordanCurve], hasse: HasseDiagram
) -> Tuple[AtomSpadjor, ...]:
    """
    Group curves into atoms: each positive curve with its children, and all
    negative roots together as the unbounded atom.

    Atoms are ordered by the position of their first member curve.
    """
    problems = alternation_violations(curves, hasse)
    if problems:
        logger.error(f"Curve set is not realizable: {problems[0]}")
        raise NotRealizableError("; ".join(str(v) for v in problems))

    children: Dict[int, List[int]] = {}
    for child, par in enumerate(hasse.parent):
        if par is not None:
            children.setdefault(par, []).append(child)

    keyed = []
    for i, c in enumerate(curves):
        if c.is_positive:
            kids = children.get(i, [])
            atom = AtomSpadjor(c, tuple(curves[k] for k in kids), (i, *kids))
            keyed.append((i, atom))
    negative_roots = [r for r in hasse.roots if not curves[r].is_positive]
    if negative_roots:
        negatives = tuple(curves[r] for r in negative_roots)
        atom = AtomSpadjor(None, negatives, tuple(negative_roots))
        keyed.append((negative_roots[0], atom))
    keyed.sort(key=lambda pair: pair[0])
    return tuple(atom for _, atom in keyed)


def build_spadjor(
    curves: Sequence[OrientedJordanCurve], tol: Tolerance
) -> RealizableSpadjor:
    """Build a spadjor from almost disjoint curves, caching its structure"""
    if not curves:
        raise ValueError(
            "build_spadjor needs curves; use ZERO or ONE for special values"
        )
    curves = tuple(curves)
    hasse = build_hasse(curves, tol)
    atoms = atoms_from_hasse(curves, hasse)
    betti_numbers = BettiNumbers(len(atoms), tuple(a.hole_count for a in atoms))
    return RealizableSpadjor(SpadjorKind.CURVES, curves, hasse, atoms, betti_numbers)


def extract_atoms(j: RealizableSpadjor) -> Tuple[AtomSpadjor, ...]:
    if j.is_special:
        raise ValueError("Special spadjors have no atoms")
    return j.atoms


def atom_kind(atom: AtomSpadjor) -> str:
    return "positive" if atom.positive is not None else "negative"


def is_bounded(j: RealizableSpadjor) -> bool:
    if j.is_zero:
        return True
    if j.is_one:
        return False
    return all(a.positive is not None for a in j.atoms)


def is_connected(j: RealizableSpadjor) -> bool:
    if j.is_one:
        return True
    return len(j.atoms) == 1


def betti(j: RealizableSpadjor) -> BettiNumbers:
    return j.betti_numbers


def locate(j: RealizableSpadjor, p: Point, tol: Tolerance) -> PointLocation:
    if j.is_zero:
        return PointLocation.EXTERIOR
    if j.is_one:
        return PointLocation.INTERIOR
    if any(near_boundary(c, p, tol) for c in j.curves):
        return PointLocation.BOUNDARY

    memo: Dict[int, bool] = {}

    def inside(c: OrientedJordanCurve) -> bool:
        key = id(c)
        if key not in memo:
            memo[key] = _in_interior(c, p)
        return memo[key]

    for atom in j.atoms:
        if all(inside(c) for c in atom.curves):
            return PointLocation.INTERIOR
    return PointLocation.EXTERIOR


def improper_intersections(j: RealizableSpadjor, tol: Tolerance) -> List[Point]:
    """Intersection points among j's curves, self-touches included"""
    if j.is_special:
        return []
    return [r.point for r in find_intersections(j.curves, tol)]


def validate(curves: Sequence[OrientedJordanCurve], tol: Tolerance) -> List[Violation]:
    """Every reason the curves fail to form a realizable spadjor; empty means ok"""
    curves = tuple(curves)
    violations: List[Violation] = []
    overlapping = set()

    for record in find_intersections(curves, tol):
        for ci, cj, verdict in classify_pairs(record, curves, tol):
            if verdict is IntersectionClass.PROPER:
                if ci == cj:
                    violations.append(
                        Violation(
                            ViolationKind.SELF_INTERSECTION,
                            f"curve {ci} crosses itself",
                            (ci,),
                            record.point,
                        )
                    )
                else:
                    violations.append(
                        Violation(
                            ViolationKind.PROPER_INTERSECTION,
                            f"curves {ci} and {cj} cross",
                            (ci, cj),
                            record.point,
                        )
                    )
        for (ca, _), (cb, _) in record.overlaps:
            pair = tuple(sorted((ca, cb)))
            if pair not in overlapping:
                overlapping.add(pair)
                what = f"curve {ca} overlaps itself" if ca == cb else (
                    f"curves {pair[0]} and {pair[1]} share a boundary piece"
                )
                violations.append(
                    Violation(ViolationKind.OVERLAP, what, pair, record.point)
                )

    if violations:
        return violations

    try:
        hasse = build_hasse(curves, tol)
    except PreconditionViolationError as e:
        return [Violation(ViolationKind.INCLUSION, str(e))]
    return alternation_violations(curves, hasse)


def pairwise_incidences(
    j: RealizableSpadjor, tol: Tolerance
) -> List[Tuple[Point, int, List[Tuple[int, int, IntersectionClass]]]]:
    """Every intersection point with its curve multiplicity and pairwise classes"""
    if j.is_special:
        return []
    return [
        (r.point, r.multiplicity, classify_pairs(r, j.curves, tol))
        for r in find_intersections(j.curves, tol)
    ]


def special(kind: str) -> RealizableSpadjor:
    if kind == "zero":
        return ZERO
    if kind == "one":
        return ONE
    raise ValueError(f"Unknown special spadjor {kind!r}")
