import numpy as np
import pytest

from fixtures import (
    TOL,
    grid_segments,
    parallel_diagonals,
    polygon,
    random_segments,
    seven_curves,
    square,
)
from src.exceptions import MalformedIncidenceError
from src.models.geometry import (
    Incidence,
    IncidenceRecord,
    IntersectionClass,
    Point,
    Segment,
)
from src.oracle import brute_intersections
from src.sweep import (
    EdgeRef,
    TaggedSegment,
    classify_pairs,
    classify_vertex,
    curve_segments,
    find_intersections,
    pair_hits,
    sweep_segments,
)


def points_of(records):
    return [(r.point.x, r.point.y) for r in records]


def test_disjoint_squares_have_no_intersections(tol):
    assert find_intersections([square(0, 0, 1, 1), square(11, 0, 12, 1)], tol) == []


def test_overlapping_squares(tol):
    records = find_intersections([square(0, 0, 2, 2), square(1, 1, 3, 3)], tol)
    assert points_of(records) == [(1.0, 2.0), (2.0, 1.0)]
    for r in records:
        assert r.curves == (0, 1)
        assert r.multiplicity == 2


def test_shared_edge_reports_overlap(tol):
    records = find_intersections([square(0, 0, 1, 1), square(1, 0, 2, 1)], tol)
    assert points_of(records) == [(1.0, 0.0), (1.0, 1.0)]
    for r in records:
        assert r.overlaps
        (c0, _), (c1, _) = r.overlaps[0]
        assert (c0, c1) == (0, 1)


def test_single_simple_curve_has_no_intersections(tol):
    assert find_intersections([square(0, 0, 1, 1)], tol) == []


def test_vertex_on_edge_is_reported(tol):
    triangle = polygon([(1, 0.5), (2, 0), (2, 1)])
    records = find_intersections([square(0, 0, 1, 1), triangle], tol)
    assert points_of(records) == [(1.0, 0.5)]


def test_self_touch_is_reported(tol):
    # vertex (2,0) lies on the curve's own bottom edge
    curve = polygon([(0, 0), (4, 0), (4, 2), (2, 0), (0, 2)])
    records = find_intersections([curve], tol)
    assert points_of(records) == [(2.0, 0.0)]
    assert records[0].curves == (0,)


def test_independent_of_curve_order_and_rotation(tol):
    a = square(0, 0, 2, 2)
    b = polygon([(1, 1), (3, 1), (3, 3), (1, 3)])
    b_rotated = polygon([(3, 3), (1, 3), (1, 1), (3, 1)])
    first = points_of(find_intersections([a, b], tol))
    second = points_of(find_intersections([b_rotated, a], tol))
    assert first == second


@pytest.mark.parametrize("seed", range(10))
def test_sweep_matches_brute_force_random(seed):
    rng = np.random.default_rng(seed)
    segments = random_segments(rng, 200, length=0.15)
    assert sweep_segments(segments, TOL) == brute_intersections(segments, TOL)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(10, 100))
def test_sweep_matches_brute_force_random_many(seed):
    rng = np.random.default_rng(seed)
    segments = random_segments(rng, 200, length=0.15)
    assert sweep_segments(segments, TOL) == brute_intersections(segments, TOL)


@pytest.mark.parametrize("seed", range(10))
def test_sweep_matches_brute_force_degenerate(seed):
    rng = np.random.default_rng(100 + seed)
    segments = grid_segments(rng, 150)
    sweep = sweep_segments(segments, TOL)
    assert sweep == brute_intersections(segments, TOL)
    assert any(r.overlaps for r in sweep)


def test_sweep_matches_brute_force_on_curves(tol):
    segments = curve_segments(seven_curves())
    assert sweep_segments(segments, tol) == brute_intersections(segments, tol)


def test_classify_transversal_crossing_is_proper(tol):
    curves = [square(0, 0, 2, 2), square(1, 1, 3, 3)]
    for record in find_intersections(curves, tol):
        assert classify_vertex(record, curves, tol) is IntersectionClass.PROPER


def test_classify_corner_touch_is_improper(tol):
    curves = [square(0, 0, 1, 1), square(1, 1, 2, 2)]
    (record,) = find_intersections(curves, tol)
    assert record.point == Point(1, 1)
    assert classify_vertex(record, curves, tol) is IntersectionClass.IMPROPER


def test_classify_four_wedges_is_improper(tol):
    # four curves meeting at the origin, one per quadrant
    a = polygon([(0, 0), (1, 0.2), (1, 1), (0.2, 1)])
    b = polygon([(0, 0), (-1, -0.2), (-1, -1), (-0.2, -1)])
    c = polygon([(0, 0), (-0.2, 1), (-1, 1), (-1, 0.2)])
    d = polygon([(0, 0), (0.2, -1), (1, -1), (1, -0.2)])
    curves = [a, b, c, d]
    (record,) = find_intersections(curves, tol)
    assert record.multiplicity == 4
    assert classify_vertex(record, curves, tol) is IntersectionClass.IMPROPER
    pairs = classify_pairs(record, curves, tol)
    assert len(pairs) == 6
    assert all(cls is IntersectionClass.IMPROPER for _, _, cls in pairs)


def test_touch_points_of_nested_configuration_are_improper(tol):
    curves = seven_curves()
    records = find_intersections(curves, tol)
    assert points_of(records) == [(10.0, 3.0), (10.0, 7.0)]
    for record in records:
        assert record.curves == (0, 3)
        assert classify_vertex(record, curves, tol) is IntersectionClass.IMPROPER


def test_classify_pairs_judges_each_curve_pair(tol):
    a = square(0, 0, 2, 2)
    b = polygon([(1, 1), (3, 1), (3, 3), (1, 3)])
    c = polygon([(2, 1), (2.5, 0.5), (2.5, 1.5)])
    curves = [a, b, c]
    records = [r for r in find_intersections(curves, tol) if r.point == Point(2, 1)]
    (record,) = records
    verdicts = {(i, k): cls for i, k, cls in classify_pairs(record, curves, tol)}
    assert verdicts[(0, 1)] is IntersectionClass.PROPER
    assert verdicts[(0, 2)] is IntersectionClass.IMPROPER
    assert verdicts[(1, 2)] is IntersectionClass.PROPER


def test_classify_needs_two_branches(tol):
    curves = [square(0, 0, 1, 1)]
    record = IncidenceRecord(Point(0.5, 0), (Incidence(0, 0, 0.5),))
    with pytest.raises(MalformedIncidenceError):
        classify_vertex(record, curves, tol)


def test_parallel_edges_are_compared_only_with_neighbours(monkeypatch):
    calls = []

    def counting(s1, s2, tol):
        calls.append((s1.ref.curve, s2.ref.curve))
        return pair_hits(s1, s2, tol)

    monkeypatch.setattr("src.sweep.pair_hits", counting)
    n = 400
    assert sweep_segments(parallel_diagonals(n), TOL) == []
    assert len(calls) <= 4 * n
    # only edges next to each other in the sweep order are ever compared
    assert all(abs(a - b) == 1 for a, b in calls)


def test_vertical_edge_crossing_a_stack_of_edges(tol):
    # the vertical meets each horizontal in turn as the sweep climbs it
    segments = [
        TaggedSegment(EdgeRef(0, 0, 1), Segment(Point(0.3, -0.1), Point(0.3, 1.1)))
    ]
    for i in range(10):
        y = i / 10.0
        a, b = Point(0.1, y), Point(0.7, y)
        segments.append(TaggedSegment(EdgeRef(i + 1, 0, 1), Segment(a, b)))
    records = sweep_segments(segments, tol)
    assert records == brute_intersections(segments, tol)
    assert len(records) == 10
    assert all(r.curves[0] == 0 for r in records)
