from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .geometry import Point


@dataclass(frozen=True)
class OrientedPath:
    """
    Piece of a curve between two cut vertices, or a whole curve as a self-loop.

    Open paths list both end points; start and end index into the owning
    SegmentedSpadjor's vertices. A self-loop has start = end = None and lists
    the curve's vertices once.
    """

    points: Tuple[Point, ...]
    start: Optional[int] = None
    end: Optional[int] = None
    # which operand the path came from (0 or 1 in a meet)
    source: int = 0

    @property
    def is_loop(self) -> bool:
        return self.start is None

    def reversed(self) -> "OrientedPath":
        points = tuple(reversed(self.points))
        return OrientedPath(points, self.end, self.start, self.source)

    def out_direction(self) -> Point:
        return self.points[1] - self.points[0]

    def in_direction(self) -> Point:
        """Direction leaving the end vertex back along the path"""
        return self.points[-2] - self.points[-1]


@dataclass(frozen=True)
class SegmentedSpadjor:
    """Directed multigraph produced by cutting curves at a vertex set"""

    vertices: Tuple[Point, ...]
    paths: Tuple[OrientedPath, ...]

    def reversed(self) -> "SegmentedSpadjor":
        return SegmentedSpadjor(self.vertices, tuple(p.reversed() for p in self.paths))

    def loops(self) -> List[OrientedPath]:
        return [p for p in self.paths if p.is_loop]

    def open_paths(self) -> List[OrientedPath]:
        return [p for p in self.paths if not p.is_loop]

    def degree_mismatches(self) -> List[int]:
        """Vertices whose in-degree differs from their out-degree"""
        out_deg = Counter(p.start for p in self.paths if not p.is_loop)
        in_deg = Counter(p.end for p in self.paths if not p.is_loop)
        return sorted(v for v in set(out_deg) | set(in_deg) if out_deg[v] != in_deg[v])
