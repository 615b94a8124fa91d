from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from ..exceptions import MalformedCurveError
from ..geom_core import signed_area
from .geometry import Orientation, Point, Segment, Tolerance


@dataclass(frozen=True)
class OrientedJordanCurve:
    """
    Closed polyline; the vertex order encodes the orientation.

    The last vertex implicitly connects back to the first. The interior is
    the side to the left of the traversal.
    """

    vertices: Tuple[Point, ...]
    area: float = field(init=False, repr=False, compare=False)
    bbox: Tuple[float, float, float, float] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise MalformedCurveError(
                f"A curve needs at least 3 vertices, got {len(self.vertices)}"
            )
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        object.__setattr__(self, "area", signed_area(self.vertices))
        object.__setattr__(self, "bbox", (min(xs), min(ys), max(xs), max(ys)))

    @classmethod
    def from_points(
        cls, points: Iterable, tol: Tolerance
    ) -> "OrientedJordanCurve":
        """Build a curve from points or [x, y] pairs, dropping eps-close neighbours"""
        cleaned = []
        for raw in points:
            try:
                if isinstance(raw, Point):
                    p = raw
                else:
                    p = Point(float(raw[0]), float(raw[1]))
            except (TypeError, ValueError, IndexError) as e:
                raise MalformedCurveError(f"Invalid vertex {raw!r}: {e}") from e
            if cleaned and cleaned[-1].distance_to(p) < tol.eps:
                continue
            cleaned.append(p)
        while len(cleaned) > 1 and cleaned[0].distance_to(cleaned[-1]) < tol.eps:
            cleaned.pop()

        if len(cleaned) < 3:
            raise MalformedCurveError(
                f"A curve needs at least 3 distinct vertices, got {len(cleaned)}"
            )
        curve = cls(tuple(cleaned))
        if not abs(curve.area) > tol.eps_sq:
            raise MalformedCurveError(f"Curve area {curve.area} is degenerate")
        return curve

    @property
    def orientation(self) -> Orientation:
        return Orientation.POSITIVE if self.area > 0 else Orientation.NEGATIVE

    @property
    def is_positive(self) -> bool:
        return self.area > 0

    def __len__(self) -> int:
        return len(self.vertices)

    def edge(self, i: int) -> Segment:
        n = len(self.vertices)
        return Segment(self.vertices[i % n], self.vertices[(i + 1) % n])

    def edges(self) -> Iterator[Segment]:
        for i in range(len(self.vertices)):
            yield self.edge(i)

    def reversed(self) -> "OrientedJordanCurve":
        return OrientedJordanCurve(tuple(reversed(self.vertices)))

    def longest_edge(self) -> Segment:
        return max(self.edges(), key=lambda s: s.length)


@dataclass(frozen=True)
class AtomSpadjor:
    """
    Boundary of one connected component.

    Either a positive curve with the negative curves it covers, or (for the
    unbounded component) negative curves only.
    """

    positive: Optional[OrientedJordanCurve]
    negatives: Tuple[OrientedJordanCurve, ...] = ()
    # indices of the member curves in the owning spadjor
    members: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.positive is None and not self.negatives:
            raise ValueError("An atom without a positive curve needs negative curves")

    @property
    def curves(self) -> Tuple[OrientedJordanCurve, ...]:
        head: Sequence[OrientedJordanCurve] = (
            (self.positive,) if self.positive is not None else ()
        )
        return tuple(head) + tuple(self.negatives)

    @property
    def hole_count(self) -> int:
        return len(self.negatives)
