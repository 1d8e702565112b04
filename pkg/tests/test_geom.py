from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polycover.geom import (
    BOUNDARY,
    COLLINEAR,
    EXTERIOR,
    INTERIOR,
    LEFT,
    RIGHT,
    ConvexPiece,
    Overlap,
    Point,
    Segment,
    SimplePolygon,
    convex_hull,
    convex_region_inside,
    edge_extension,
    edge_param,
    is_convex,
    orientation,
    point_in_polygon,
    segment_in_polygon,
    segment_intersect,
    pt,
)
from polycover.errors import InvalidPolygon


UNIT_SQUARE = SimplePolygon([pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
L_HEXAGON = SimplePolygon(
    [pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)]
)


def test_orientation_basic():
    assert orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == LEFT
    assert orientation(pt(0, 0), pt(1, 0), pt(2, 0)) == COLLINEAR
    # hand cross product: (0,1)x(1,1) = 0*1 - 1*1 = -1 -> Right
    assert orientation(pt(0, 0), pt(0, 1), pt(1, 1)) == RIGHT


coords = st.integers(min_value=-50, max_value=50)
points = st.builds(pt, coords, coords)


@given(points, points, points)
def test_orientation_antisymmetric(a, b, c):
    assert orientation(a, b, c) == -orientation(a, c, b)


@given(points, points, points)
def test_orientation_exact_with_fractions(a, b, c):
    shift = Fraction(1, 3)
    a2 = pt(a.x + shift, a.y + shift)
    b2 = pt(b.x + shift, b.y + shift)
    c2 = pt(c.x + shift, c.y + shift)
    assert orientation(a, b, c) == orientation(a2, b2, c2)


def test_segment_intersect_crossing():
    r = segment_intersect(Segment(pt(0, 0), pt(2, 2)), Segment(pt(0, 2), pt(2, 0)))
    assert r == pt(1, 1)


def test_segment_intersect_disjoint_collinear():
    r = segment_intersect(Segment(pt(0, 0), pt(1, 0)), Segment(pt(2, 0), pt(3, 0)))
    assert r is None


def test_segment_intersect_overlap():
    r = segment_intersect(Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, 0), pt(3, 0)))
    assert isinstance(r, Overlap)
    assert {r.segment.a, r.segment.b} == {pt(1, 0), pt(2, 0)}


def test_segment_intersect_shared_endpoint():
    r = segment_intersect(Segment(pt(0, 0), pt(1, 1)), Segment(pt(1, 1), pt(2, 0)))
    assert r == pt(1, 1)


def test_segment_intersect_endpoint_off_segment():
    # p collinear with ab but outside it; segments do not meet
    r = segment_intersect(Segment(pt(3, 0), pt(3, 2)), Segment(pt(0, 0), pt(2, 0)))
    assert r is None


def test_point_in_polygon_square():
    assert point_in_polygon(pt(Fraction(1, 2), Fraction(1, 2)), UNIT_SQUARE) == INTERIOR
    assert point_in_polygon(pt(0, Fraction(1, 2)), UNIT_SQUARE) == BOUNDARY
    assert point_in_polygon(pt(2, 2), UNIT_SQUARE) == EXTERIOR


def _winding_classification(p, poly):
    # independent oracle: winding number via angle-free signed crossings
    if any(
        orientation(a, b, p) == COLLINEAR
        and min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
        for _, a, b in poly.edges()
    ):
        return BOUNDARY
    wn = 0
    for _, a, b in poly.edges():
        if a.y <= p.y:
            if b.y > p.y and orientation(a, b, p) == LEFT:
                wn += 1
        else:
            if b.y <= p.y and orientation(a, b, p) == RIGHT:
                wn -= 1
    return INTERIOR if wn != 0 else EXTERIOR


@given(
    st.builds(
        pt,
        st.fractions(min_value=-1, max_value=3, max_denominator=7),
        st.fractions(min_value=-1, max_value=3, max_denominator=7),
    )
)
def test_point_in_polygon_matches_winding_oracle(p):
    for poly in (UNIT_SQUARE, L_HEXAGON):
        assert point_in_polygon(p, poly) == _winding_classification(p, poly)


def test_is_convex():
    assert is_convex(UNIT_SQUARE)
    assert not is_convex(L_HEXAGON)


def test_polygon_normalizes_to_ccw():
    cw = SimplePolygon([pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)])
    assert cw.area2() > 0


def test_polygon_validation_rejects_self_intersection():
    with pytest.raises(InvalidPolygon):
        SimplePolygon([pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)], validate=True)


def test_collinear_vertices_flagged():
    p = SimplePolygon([pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2), pt(0, 2)])
    assert p.has_collinear_vertices()
    assert p.strip_collinear().n == 4


def test_edge_extension_convex_exits():
    for i in range(UNIT_SQUARE.n):
        assert edge_extension(UNIT_SQUARE, i, "forward") is None
        assert edge_extension(UNIT_SQUARE, i, "backward") is None


def test_edge_extension_lands_on_opposite_chain():
    # L polygon: edge from (2,1) to (1,1) extended forward crosses to x=0 wall
    poly = L_HEXAGON
    hit = edge_extension(poly, 2, "forward")
    assert hit is not None
    p, edge_idx = hit
    assert p == pt(0, 1)
    assert edge_idx == 5


def test_segment_in_polygon_grazing_allowed():
    # segment along the notch corner of the L: touches boundary but stays inside
    assert segment_in_polygon(pt(0, 0), pt(1, 1), L_HEXAGON)
    # crossing the notch exterior is rejected
    assert not segment_in_polygon(pt(2, 1), pt(1, 2), L_HEXAGON)


def test_segment_through_reflex_vertex():
    assert segment_in_polygon(pt(0, 0), pt(2, 2), L_HEXAGON) is False
    assert segment_in_polygon(pt(Fraction(1, 2), 0), pt(Fraction(1, 2), 2), L_HEXAGON)


def test_convex_hull_ccw():
    h = convex_hull([pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1)])
    assert len(h) == 4
    assert pt(1, 1) not in h


def test_convex_region_inside():
    assert convex_region_inside([pt(0, 0), pt(1, 0), pt(1, 1)], UNIT_SQUARE)
    assert not convex_region_inside([pt(0, 0), pt(2, 0), pt(2, 1)], UNIT_SQUARE)
    # hull poking through the L notch
    assert not convex_region_inside(
        [pt(2, 0), pt(2, 1), pt(1, 2), pt(0, 2)], L_HEXAGON
    )


def test_convex_piece_requires_convexity():
    with pytest.raises(InvalidPolygon):
        ConvexPiece(L_HEXAGON)
    ConvexPiece(UNIT_SQUARE)


def test_edge_param():
    assert edge_param(pt(0, 0), pt(4, 0), pt(1, 0)) == Fraction(1, 4)
