import numpy as np
import pytest

from fixtures import box, spadjor, square
from src.algebra import meet
from src.models.geometry import Point, Segment
from src.models.spadjor import ONE, ZERO
from src.oracle import (
    RasterGrid,
    brute_intersections,
    compare_off_band,
    flood_betti,
    rasterize,
    winding_numbers,
)
from src.sweep import curve_segments
from src.topology import betti


def test_rasterize_special_values():
    window = (0.0, 0.0, 1.0, 1.0)
    assert not rasterize(ZERO, window, 4).cells.any()
    assert rasterize(ONE, window, 4).cells.all()


def test_rasterize_square(unit_square):
    g = rasterize(unit_square, (-1.0, -1.0, 2.0, 2.0), 3)
    assert g.cells.sum() == 1
    assert g.cells[1, 1]
    assert g.cell_size == pytest.approx(1.0)


def test_rasterize_unbounded_set():
    j = spadjor(square(0, 0, 1, 1, ccw=False))
    outside = rasterize(j, (-1.0, -1.0, 2.0, 2.0), 3)
    assert outside.cells.sum() == 8
    assert not outside.cells[1, 1]


def test_boundary_cells_are_outside():
    # cell centres at 0.5 and 1.5 sit on the edges of [0.5, 1.5]^2
    g = rasterize(box(0.5, 0.5, 1.5, 1.5), (0.0, 0.0, 2.0, 2.0), 2)
    assert not g.cells.any()


def test_winding_numbers(ring):
    w = winding_numbers((-0.5, -0.5, 3.5, 3.5), 8, ring.curves)
    assert w[0, 0] == 0
    assert w[1, 1] == 1
    assert w[3, 3] == 0
    assert w.max() == 1 and w.min() == 0


def test_rasterize_rejects_bad_windows(unit_square):
    with pytest.raises(ValueError):
        rasterize(unit_square, (0.0, 0.0, 1.0, 1.0), 1)
    with pytest.raises(ValueError):
        rasterize(unit_square, (0.0, 0.0, 0.0, 1.0), 8)


def test_flood_betti_of_annulus(ring):
    g = rasterize(ring, (-0.5, -0.5, 3.5, 3.5), 40)
    assert flood_betti(g) == betti(ring)


def test_flood_betti_of_face(face):
    g = rasterize(face, (-1.0, -1.0, 27.0, 13.0), 280)
    result = flood_betti(g)
    assert result.components == betti(face).components == 6
    assert sorted(result.holes_per_component) == [0, 0, 0, 1, 1, 2]


def test_flood_betti_of_touching_curves(seven):
    # x = 10 and y = 3, 7 fall on cell edges, so the touch points do not
    # join the notched curve to the outer square
    g = rasterize(seven, (-1.0, -3.0, 15.0, 13.0), 512)
    result = flood_betti(g)
    assert result.components == 4
    assert sorted(result.holes_per_component) == [0, 0, 0, 3]


def test_flood_betti_of_empty_grid():
    g = RasterGrid((0.0, 0.0, 1.0, 1.0), 4, np.zeros((4, 4), dtype=bool))
    assert flood_betti(g).components == 0


def test_compare_off_band(unit_square):
    window = (-1.0, -1.0, 2.0, 2.0)
    a = rasterize(unit_square, window, 30)
    b = rasterize(box(0, 0, 1.2, 1), window, 30)
    assert compare_off_band(a, b, unit_square.curves, 0.2) == 0
    assert compare_off_band(a, b, unit_square.curves, 0.01) > 0


def test_compare_off_band_needs_matching_grids(unit_square):
    a = rasterize(unit_square, (0.0, 0.0, 1.0, 1.0), 8)
    b = rasterize(unit_square, (0.0, 0.0, 2.0, 2.0), 8)
    with pytest.raises(ValueError):
        compare_off_band(a, b, unit_square.curves, 0.1)


def test_meet_rasterizes_to_cell_intersection(tol):
    j, k = box(0, 0, 2, 2), box(1, 1, 3, 3)
    window = (-0.5, -0.5, 3.5, 3.5)
    expected = rasterize(j, window, 64).cells & rasterize(k, window, 64).cells
    got = rasterize(meet(j, k, tol), window, 64)
    curves = j.curves + k.curves
    assert compare_off_band(got, RasterGrid(window, 64, expected), curves, 0.1) == 0


def test_brute_intersections_of_bare_segments(tol):
    segments = [
        Segment(Point(0, 0), Point(2, 2)),
        Segment(Point(0, 2), Point(2, 0)),
        Segment(Point(5, 5), Point(6, 5)),
    ]
    (record,) = brute_intersections(segments, tol)
    assert record.point.x == pytest.approx(1.0)
    assert record.curves == (0, 1)


def test_brute_intersections_of_curve_edges(tol):
    segments = curve_segments([square(0, 0, 2, 2), square(1, 1, 3, 3)])
    records = brute_intersections(segments, tol)
    assert [(r.point.x, r.point.y) for r in records] == [(1.0, 2.0), (2.0, 1.0)]
