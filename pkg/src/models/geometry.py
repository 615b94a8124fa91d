"""
Plain geometry value types: points, tolerance, segments and intersection results.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ..exceptions import DegenerateSegmentError


@dataclass(frozen=True, order=True)
class Point:
    """A point (or direction vector) in the plane"""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(
                f"Point coordinates must be finite, got ({self.x}, {self.y})"
            )

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_list(self) -> list:
        return [self.x, self.y]


@dataclass(frozen=True)
class Tolerance:
    """Global distance below which two points are identified"""

    eps: float = 1e-9

    def __post_init__(self):
        if not (math.isfinite(self.eps) and self.eps > 0):
            raise ValueError(f"Tolerance must be positive and finite, got {self.eps}")

    @property
    def eps_sq(self) -> float:
        return self.eps * self.eps


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True)
class Segment:
    """A directed segment from a to b"""

    a: Point
    b: Point

    @classmethod
    def checked(cls, a: Point, b: Point, tol: Tolerance) -> "Segment":
        """Build a segment, rejecting lengths not above eps"""
        if a.distance_to(b) <= tol.eps:
            raise DegenerateSegmentError(
                f"Segment ({a.x}, {a.y})->({b.x}, {b.y}) is shorter than eps={tol.eps}"
            )
        return cls(a, b)

    @property
    def direction(self) -> Point:
        return self.b - self.a

    @property
    def length(self) -> float:
        return self.a.distance_to(self.b)

    @property
    def midpoint(self) -> Point:
        return Point((self.a.x + self.b.x) / 2, (self.a.y + self.b.y) / 2)

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)

    def parameter_of(self, p: Point) -> float:
        """Projection parameter of p on the segment, clamped to [0, 1]"""
        dx, dy = self.b.x - self.a.x, self.b.y - self.a.y
        t = ((p.x - self.a.x) * dx + (p.y - self.a.y) * dy) / (dx * dx + dy * dy)
        return min(1.0, max(0.0, t))

    def bbox(self) -> Tuple[float, float, float, float]:
        return (
            min(self.a.x, self.b.x),
            min(self.a.y, self.b.y),
            max(self.a.x, self.b.x),
            max(self.a.y, self.b.y),
        )


class IntersectionKind(Enum):
    NONE = "none"
    AT_POINT = "at_point"
    COLLINEAR_OVERLAP = "collinear_overlap"


@dataclass(frozen=True)
class IntersectionResult:
    kind: IntersectionKind
    point: Optional[Point] = None
    overlap: Optional[Segment] = None
    # True when point is one of the input endpoints
    snapped: bool = False

    @classmethod
    def none(cls) -> "IntersectionResult":
        return cls(IntersectionKind.NONE)

    @classmethod
    def at_point(cls, point: Point, snapped: bool = False) -> "IntersectionResult":
        return cls(IntersectionKind.AT_POINT, point=point, snapped=snapped)

    @classmethod
    def collinear_overlap(cls, overlap: Segment) -> "IntersectionResult":
        return cls(IntersectionKind.COLLINEAR_OVERLAP, overlap=overlap, snapped=True)

    def __bool__(self) -> bool:
        return self.kind is not IntersectionKind.NONE


class Orientation(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


class PointLocation(Enum):
    INTERIOR = "interior"
    EXTERIOR = "exterior"
    BOUNDARY = "boundary"


class IntersectionClass(Enum):
    PROPER = "proper"
    IMPROPER = "improper"


@dataclass(frozen=True, order=True)
class Incidence:
    """One edge passing through an intersection point"""

    curve: int
    edge: int
    t: float


@dataclass(frozen=True)
class IncidenceRecord:
    """A clustered intersection point and every edge passing within eps of it"""

    point: Point
    incident: Tuple[Incidence, ...]
    # pairs of (curve, edge) refs whose edges overlap collinearly through this point
    overlaps: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...] = ()

    @property
    def curves(self) -> Tuple[int, ...]:
        return tuple(sorted({inc.curve for inc in self.incident}))

    @property
    def multiplicity(self) -> int:
        """Number of distinct curves meeting at the point"""
        return len(self.curves)
