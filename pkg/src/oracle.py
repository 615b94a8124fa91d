"""
Brute-force ground truth used by the test-suite: rasterized membership,
all-pairs intersections and flood-fill Betti numbers.

These are slow on purpose and avoid the sweep and topology code paths.
"""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np
from scipy import ndimage

from .models.curve import OrientedJordanCurve
from .models.geometry import IncidenceRecord, Segment, Tolerance
from .models.spadjor import BettiNumbers, RealizableSpadjor
from .sweep import EdgeRef, TaggedSegment, brute_force_segments

Window = Tuple[float, float, float, float]


@dataclass(frozen=True, eq=False)
class RasterGrid:
    """Cell-centre membership on an n x n grid; cells[iy, ix]"""

    window: Window
    n: int
    cells: np.ndarray

    def centers(self) -> Tuple[np.ndarray, np.ndarray]:
        return _centers(self.window, self.n)

    @property
    def cell_size(self) -> float:
        x0, y0, x1, y1 = self.window
        return max((x1 - x0) / self.n, (y1 - y0) / self.n)


def _check_window(window: Window, n: int):
    x0, y0, x1, y1 = window
    if n < 2:
        raise ValueError(f"Raster needs at least 2 cells per side, got {n}")
    if not (x1 > x0 and y1 > y0):
        raise ValueError(f"Degenerate raster window {window}")


def _centers(window: Window, n: int) -> Tuple[np.ndarray, np.ndarray]:
    x0, y0, x1, y1 = window
    xs = x0 + (np.arange(n) + 0.5) * (x1 - x0) / n
    ys = y0 + (np.arange(n) + 0.5) * (y1 - y0) / n
    return xs, ys


def _index_range(
    lo: float, hi: float, origin: float, step: float, n: int
) -> Tuple[int, int]:
    """Indices of centres origin + (i + 0.5) * step that fall in [lo, hi]"""
    start = max(0, math.ceil((lo - origin) / step - 0.5))
    stop = min(n, math.floor((hi - origin) / step - 0.5) + 1)
    return start, max(start, stop)


def _edges(curves: Sequence[OrientedJordanCurve]):
    for curve in curves:
        verts = curve.vertices
        a = verts[-1]
        for b in verts:
            yield a, b
            a = b


def _near_mask(
    window: Window, n: int, curves: Sequence[OrientedJordanCurve], band: float
) -> np.ndarray:
    """Cells whose centre is within band of some edge (strictly less than band)"""
    xs, ys = _centers(window, n)
    x0, y0, x1, y1 = window
    dx, dy = (x1 - x0) / n, (y1 - y0) / n
    near = np.zeros((n, n), dtype=bool)
    for a, b in _edges(curves):
        c0, c1 = _index_range(min(a.x, b.x) - band, max(a.x, b.x) + band, x0, dx, n)
        r0, r1 = _index_range(min(a.y, b.y) - band, max(a.y, b.y) + band, y0, dy, n)
        if c0 >= c1 or r0 >= r1:
            continue
        px = xs[c0:c1][np.newaxis, :]
        py = ys[r0:r1][:, np.newaxis]
        ex, ey = b.x - a.x, b.y - a.y
        t = ((px - a.x) * ex + (py - a.y) * ey) / (ex * ex + ey * ey)
        t = np.clip(t, 0.0, 1.0)
        dist = np.hypot(px - (a.x + t * ex), py - (a.y + t * ey))
        near[r0:r1, c0:c1] |= dist < band
    return near


def winding_numbers(
    window: Window, n: int, curves: Sequence[OrientedJordanCurve]
) -> np.ndarray:
    """Sum over curves of the winding number at every cell centre"""
    xs, ys = _centers(window, n)
    _, y0, _, y1 = window
    dy = (y1 - y0) / n
    winding = np.zeros((n, n), dtype=np.int64)
    for a, b in _edges(curves):
        if a.y == b.y:
            continue
        r0, r1 = _index_range(min(a.y, b.y), max(a.y, b.y), y0, dy, n)
        if r0 >= r1:
            continue
        py = ys[r0:r1][:, np.newaxis]
        px = xs[np.newaxis, :]
        is_left = (b.x - a.x) * (py - a.y) - (px - a.x) * (b.y - a.y)
        if a.y < b.y:
            hit = (a.y <= py) & (py < b.y) & (is_left > 0)
            winding[r0:r1, :] += hit
        else:
            hit = (b.y <= py) & (py < a.y) & (is_left < 0)
            winding[r0:r1, :] -= hit
    return winding


def rasterize(
    j: RealizableSpadjor, window: Window, n: int, tol: Tolerance = Tolerance()
) -> RasterGrid:
    """Membership of every cell centre in the Yin set, boundary counted as outside"""
    _check_window(window, n)
    if j.is_zero:
        return RasterGrid(window, n, np.zeros((n, n), dtype=bool))
    if j.is_one:
        return RasterGrid(window, n, np.ones((n, n), dtype=bool))

    winding = winding_numbers(window, n, j.curves)
    outermost = max(j.curves, key=lambda c: abs(c.area))
    offset = 0 if outermost.is_positive else 1
    cells = (winding + offset) == 1
    cells &= ~_near_mask(window, n, j.curves, tol.eps)
    return RasterGrid(window, n, cells)


def brute_intersections(
    segments: Sequence[Union[TaggedSegment, Segment]], tol: Tolerance
) -> List[IncidenceRecord]:
    """All-pairs intersection test; bare segments count as separate curves"""
    tagged = [
        s if isinstance(s, TaggedSegment) else TaggedSegment(EdgeRef(i, 0, 1), s)
        for i, s in enumerate(segments)
    ]
    return brute_force_segments(tagged, tol)


def flood_betti(g: RasterGrid) -> BettiNumbers:
    """
    Components by 4-connected labelling of true cells; holes are
    8-connected false regions off the frame, credited to the true cell
    immediately left of each hole.
    """
    four = ndimage.generate_binary_structure(2, 1)
    eight = ndimage.generate_binary_structure(2, 2)
    labels, count = ndimage.label(g.cells, structure=four)
    gaps, gap_count = ndimage.label(~g.cells, structure=eight)

    border = np.concatenate([gaps[0, :], gaps[-1, :], gaps[:, 0], gaps[:, -1]])
    frame = set(np.unique(border))
    holes = [0] * count
    for gap, region in enumerate(ndimage.find_objects(gaps), start=1):
        if gap in frame or region is None:
            continue
        rows, cols = np.nonzero(gaps[region] == gap)
        col = cols.min()
        row = rows[cols == col][0]
        iy = region[0].start + row
        ix = region[1].start + col - 1
        owner = labels[iy, ix]
        if owner > 0:
            holes[owner - 1] += 1
    return BettiNumbers(count, tuple(holes))


def compare_off_band(
    a: RasterGrid, b: RasterGrid, curves: Sequence[OrientedJordanCurve], band: float
) -> int:
    """Number of differing cells whose centre is at least band away from every curve"""
    if a.n != b.n or tuple(a.window) != tuple(b.window):
        raise ValueError("Raster grids cover different windows")
    near = _near_mask(a.window, a.n, curves, band)
    return int(np.count_nonzero((a.cells != b.cells) & ~near))
