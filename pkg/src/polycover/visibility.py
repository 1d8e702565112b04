"""Visibility primitives over simple polygons.

All decisions are exact.  numpy appears in two roles only: conservative
float bbox prefilters, and exact int64 orientation batches (bit-for-bit
equal to the scalar predicates, just faster) when coordinates fit.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .errors import NotAChord, NotConvexVertex, PointOutside
from .geom import (
    BOUNDARY,
    COLLINEAR,
    EXTERIOR,
    INTERIOR,
    RIGHT,
    Point,
    PolygonWithHoles,
    Segment,
    SimplePolygon,
    convex_region_inside,
    edge_param,
    lerp,
    on_segment,
    orientation,
    point_in_polygon,
    ray_boundary_hit,
    ray_segment_hit,
    segment_in_polygon,
)

ROOT = "root"
LEFT_WINDOW = "left_window"
RIGHT_WINDOW = "right_window"


# ---------------------------------------------------------------------------
# point-to-point visibility


def _segment_in_holed(p: Point, q: Point, P: PolygonWithHoles) -> bool:
    if not segment_in_polygon(p, q, P.outer):
        return False
    if p == q:
        return all(point_in_polygon(p, h) != INTERIOR for h in P.holes)
    rx, ry = q.x - p.x, q.y - p.y
    den = rx * rx + ry * ry
    for hole in P.holes:
        contacts = set()
        for i in range(hole.n):
            a = hole.vertices[i]
            b = hole.vertices[(i + 1) % hole.n]
            d1 = orientation(a, b, p)
            d2 = orientation(a, b, q)
            d3 = orientation(p, q, a)
            d4 = orientation(p, q, b)
            if d1 != d2 and d3 != d4 and COLLINEAR not in (d1, d2, d3, d4):
                return False
            if d3 == COLLINEAR and on_segment(a, p, q):
                contacts.add(Fraction((a.x - p.x) * rx + (a.y - p.y) * ry, den))
            if d4 == COLLINEAR and on_segment(b, p, q):
                contacts.add(Fraction((b.x - p.x) * rx + (b.y - p.y) * ry, den))
            if d1 == COLLINEAR and on_segment(p, a, b):
                contacts.add(Fraction(0))
            if d2 == COLLINEAR and on_segment(q, a, b):
                contacts.add(Fraction(1))
        ts = sorted(contacts | {Fraction(0), Fraction(1)})
        for t0, t1 in zip(ts, ts[1:]):
            if t0 == t1:
                continue
            m = lerp(p, q, (t0 + t1) / 2)
            if point_in_polygon(m, hole) == INTERIOR:
                return False
    return True


def visible(p: Point, q: Point, P) -> bool:
    """True iff segment pq stays inside P; grazing the boundary counts."""
    if isinstance(P, PolygonWithHoles):
        from .geom import point_in_holed

        if point_in_holed(p, P) == EXTERIOR or point_in_holed(q, P) == EXTERIOR:
            raise PointOutside(f"{p} or {q} outside polygon")
        return _segment_in_holed(p, q, P)
    if point_in_polygon(p, P) == EXTERIOR or point_in_polygon(q, P) == EXTERIOR:
        raise PointOutside(f"{p} or {q} outside polygon")
    return segment_in_polygon(p, q, P)


# ---------------------------------------------------------------------------
# all-pairs vertex visibility


def _int_coords(P: SimplePolygon):
    """Exact integer coordinate arrays (common-denominator scaled), or None."""
    denoms = set()
    for v in P.vertices:
        for c in (v.x, v.y):
            if isinstance(c, Fraction):
                denoms.add(c.denominator)
    scale = 1
    for d in denoms:
        scale = scale * d // math.gcd(scale, d)
        if scale > 1 << 24:
            return None
    xs, ys = [], []
    maxc = 0
    for v in P.vertices:
        xs.append(int(v.x * scale))
        ys.append(int(v.y * scale))
        maxc = max(maxc, abs(xs[-1]), abs(ys[-1]))
    if maxc >= 1 << 30:
        return None
    return np.array(xs, dtype=np.int64), np.array(ys, dtype=np.int64)


def _visibility_matrix_scalar(P: SimplePolygon) -> np.ndarray:
    n = P.n
    vis = np.zeros((n, n), dtype=bool)
    for i in range(n):
        vis[i, i] = True
        vis[i, (i + 1) % n] = vis[(i + 1) % n, i] = True
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            r = segment_in_polygon(P.vertices[i], P.vertices[j], P)
            vis[i, j] = vis[j, i] = r
    return vis


def vertex_visibility_matrix(P: SimplePolygon) -> np.ndarray:
    """Symmetric boolean matrix of exact vertex-to-vertex visibility."""
    cached = P._cache.get("vismatrix")
    if cached is not None:
        return cached
    ic = _int_coords(P)
    if ic is None or P.n < 8:
        vis = _visibility_matrix_scalar(P)
        P._cache["vismatrix"] = vis
        return vis
    X, Y = ic
    n = P.n
    AX, AY = X, Y
    EX, EY = np.roll(X, -1) - X, np.roll(Y, -1) - Y
    N1X, N1Y = EX, EY  # outgoing edge vector at each vertex
    N2X, N2Y = np.roll(X, 1) - X, np.roll(Y, 1) - Y  # incoming reversed
    reflex = (N1X * N2Y - N1Y * N2X) < 0

    vis = np.zeros((n, n), dtype=bool)
    suspicious_pairs = []
    for i in range(n):
        dx = X - X[i]
        dy = Y - Y[i]
        c1i = N1X[i] * dy - N1Y[i] * dx
        c2i = dx * N2Y[i] - dy * N2X[i]
        if reflex[i]:
            cone_i = (c1i >= 0) | (c2i >= 0)
        else:
            cone_i = (c1i >= 0) & (c2i >= 0)
        c1k = -(N1X * dy - N1Y * dx)
        c2k = -(dx * N2Y - dy * N2X)
        cone_k = np.where(reflex, (c1k >= 0) | (c2k >= 0), (c1k >= 0) & (c2k >= 0))
        ok = cone_i & cone_k
        ok[i] = False

        # proper crossings of segment (v_i, v_k) with every edge
        o_edge_i = np.sign(EX * (Y[i] - AY) - EY * (X[i] - AX))  # (edge,)
        o_edge_k = np.sign(
            EX[:, None] * (Y[None, :] - AY[:, None])
            - EY[:, None] * (X[None, :] - AX[:, None])
        )  # (edge, k)
        o_seg_w = np.sign(
            dx[:, None] * (Y[None, :] - Y[i]) - dy[:, None] * (X[None, :] - X[i])
        )  # (k, w) = orient(v_i, v_k, v_w)
        o_seg_A = o_seg_w.T  # (w==edge start, k)
        o_seg_B = np.roll(o_seg_w, -1, axis=1).T  # (edge end, k)
        proper = (o_edge_i[:, None] * o_edge_k < 0) & (o_seg_A * o_seg_B < 0)
        ok &= ~proper.any(axis=0)

        # vertices on the open segment need the exact slow path
        wx, wy = X[None, :], Y[None, :]
        between = (
            (o_seg_w == 0)
            & (np.minimum(X[i], X[:, None]) <= wx)
            & (wx <= np.maximum(X[i], X[:, None]))
            & (np.minimum(Y[i], Y[:, None]) <= wy)
            & (wy <= np.maximum(Y[i], Y[:, None]))
        )
        between[:, i] = False
        np.fill_diagonal(between, False)
        suspicious = between.any(axis=1) & ok
        ok &= ~suspicious
        vis[i] = ok
        for k in np.nonzero(suspicious)[0]:
            if k > i:
                suspicious_pairs.append((i, int(k)))

    vis &= vis.T  # both endpoint cones must agree; crossings are symmetric
    np.fill_diagonal(vis, True)
    for i in range(n):
        vis[i, (i + 1) % n] = vis[(i + 1) % n, i] = True
    for i, k in suspicious_pairs:
        if (k - i) % n in (1, n - 1):
            continue
        r = segment_in_polygon(P.vertices[i], P.vertices[k], P)
        vis[i, k] = vis[k, i] = r
    P._cache["vismatrix"] = vis
    return vis


# ---------------------------------------------------------------------------
# seeing a segment: weak visibility of single points


def _segment_view_params(y: Point, A: Point, B: Point, P: SimplePolygon):
    """Critical parameters on AB where visibility from y can switch."""
    crits = set()
    for wi in P.reflex_vertices():
        w = P.vertices[wi]
        if w == y:
            continue
        hit = ray_segment_hit(y, (w.x - y.x, w.y - y.y), A, B)
        if hit is None:
            continue
        t, xpt = hit
        if t < 1:
            continue  # the vertex lies beyond AB, not between
        crits.add(edge_param(A, B, xpt))
    for w in P.vertices:
        if w != A and w != B and on_segment(w, A, B):
            crits.add(edge_param(A, B, w))
    return crits


def weakly_sees_segment(y: Point, A: Point, B: Point, P: SimplePolygon) -> bool:
    """True iff y sees at least one point of the closed segment AB."""
    for x in (Segment(A, B).midpoint(), A, B):
        if segment_in_polygon(y, x, P):
            return True
    crits = _segment_view_params(y, A, B, P)
    params = sorted({Fraction(0), Fraction(1)} | crits)
    for t in sorted(crits):
        if 0 < t < 1 and segment_in_polygon(y, lerp(A, B, t), P):
            return True
    for t0, t1 in zip(params, params[1:]):
        if segment_in_polygon(y, lerp(A, B, (t0 + t1) / 2), P):
            return True
    return False


def sees_into_open_segment(x: Point, A: Point, B: Point, P: SimplePolygon) -> bool:
    """True iff x sees some point strictly interior to segment AB."""
    if A == B:
        return False
    for t in (Fraction(1, 2), Fraction(1, 4), Fraction(3, 4)):
        if segment_in_polygon(x, lerp(A, B, t), P):
            return True
    crits = _segment_view_params(x, A, B, P)
    inner = sorted(c for c in crits if 0 < c < 1)
    for t in inner:
        if segment_in_polygon(x, lerp(A, B, t), P):
            return True
    params = sorted({Fraction(0), Fraction(1)} | set(inner))
    for t0, t1 in zip(params, params[1:]):
        tm = (t0 + t1) / 2
        if 0 < tm < 1 and segment_in_polygon(x, lerp(A, B, tm), P):
            return True
    return False


# ---------------------------------------------------------------------------
# region structure: visibility polygon / weak visibility polygon


@dataclass(frozen=True)
class _Event:
    edge: int
    t: Fraction
    point: Point
    is_vertex: bool


def _boundary_events(P: SimplePolygon, hits) -> list:
    events = {}
    for i, v in enumerate(P.vertices):
        events[(i, Fraction(0))] = _Event(i, Fraction(0), v, True)
    for point, edge_idx in hits:
        a = P.vertices[edge_idx]
        b = P.vertices[(edge_idx + 1) % P.n]
        t = edge_param(a, b, point)
        if t <= 0 or t >= 1:
            continue
        events.setdefault((edge_idx, t), _Event(edge_idx, t, point, False))
    return [events[k] for k in sorted(events.keys())]


def _shadow_hit(P: SimplePolygon, source: Point, w: Point):
    """First boundary point behind w as lit from source, when the ray
    behind w continues through the polygon."""
    d = (w.x - source.x, w.y - source.y)
    if d == (0, 0):
        return None
    hit = ray_boundary_hit(P, w, d)
    if hit is None:
        return None
    t, pnt, edge_idx = hit
    mid = Point(w.x + d[0] * t / 2, w.y + d[1] * t / 2)
    if point_in_polygon(mid, P) == EXTERIOR:
        return None
    return pnt, edge_idx


def _region_structure(P: SimplePolygon, events, point_visible: Callable,
                      arc_visible: Callable):
    """Assemble the visible region and its windows from classified events.

    Returns (region_vertices, windows); each window is a tuple
    (end_event, start_event, hidden_events) meaning the boundary between
    end_event and start_event is hidden and the region boundary jumps
    straight across.
    """
    m = len(events)
    flags = [point_visible(e.point) for e in events]
    arc_vis = []
    for i in range(m):
        j = (i + 1) % m
        if flags[i] and flags[j]:
            a, b = events[i].point, events[j].point
            if a == b:
                arc_vis.append(True)
            else:
                arc_vis.append(arc_visible(Segment(a, b).midpoint()))
        else:
            arc_vis.append(False)
    kept = [i for i in range(m) if arc_vis[i] or arc_vis[(i - 1) % m]]
    if not kept:
        return [], []
    region = []
    windows = []
    K = len(kept)
    for pos in range(K):
        i = kept[pos]
        j = kept[(pos + 1) % K]
        region.append(events[i].point)
        step = (j - i) % m
        direct = step == 1 and arc_vis[i]
        if K == 1:
            direct = False
        if not direct:
            hidden = [events[(i + x) % m] for x in range(1, step)]
            if events[i].point != events[j].point:
                windows.append((events[i], events[j], hidden))
    dedup = []
    for p in region:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    while len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup, windows


def _point_visibility_structure(p: Point, P: SimplePolygon):
    hits = []
    for wi in P.reflex_vertices():
        w = P.vertices[wi]
        if w == p or not segment_in_polygon(p, w, P):
            continue
        h = _shadow_hit(P, p, w)
        if h is not None:
            hits.append(h)
    events = _boundary_events(P, hits)

    def pv(y):
        return segment_in_polygon(p, y, P)

    return _region_structure(P, events, pv, pv)


def visibility_polygon(p: Point, P: SimplePolygon) -> SimplePolygon:
    """The set of points of P visible from p, as a simple polygon."""
    if point_in_polygon(p, P) == EXTERIOR:
        raise PointOutside(f"{p} outside polygon")
    verts, _ = _point_visibility_structure(p, P)
    return SimplePolygon(verts)


def _line_meets_segment(w1: Point, w2: Point, A: Point, B: Point) -> bool:
    oa = orientation(w1, w2, A)
    ob = orientation(w1, w2, B)
    return oa != ob or oa == COLLINEAR


def _weak_events(P: SimplePolygon, A: Point, B: Point) -> list:
    reflex = P.reflex_vertices()
    hits = []
    sources = [A, B] + [
        v for v in P.vertices if v != A and v != B and on_segment(v, A, B)
    ]
    for x in sources:
        for wi in reflex:
            w = P.vertices[wi]
            if w == x or not segment_in_polygon(x, w, P):
                continue
            h = _shadow_hit(P, x, w)
            if h is not None:
                hits.append(h)
    for ii in range(len(reflex)):
        for jj in range(ii + 1, len(reflex)):
            w1 = P.vertices[reflex[ii]]
            w2 = P.vertices[reflex[jj]]
            if not _line_meets_segment(w1, w2, A, B):
                continue
            if not segment_in_polygon(w1, w2, P):
                continue
            for a, b in ((w1, w2), (w2, w1)):
                h = _shadow_hit(P, a, b)
                if h is not None:
                    hits.append(h)
    return _boundary_events(P, hits)


def _weak_structure(P: SimplePolygon, A: Point, B: Point):
    events = _weak_events(P, A, B)

    def pv(y):
        return weakly_sees_segment(y, A, B, P)

    return _region_structure(P, events, pv, pv)


def weak_visibility_polygon(c: Segment, P: SimplePolygon) -> SimplePolygon:
    """All points of P seen by at least one point of the chord or edge c."""
    if (
        point_in_polygon(c.a, P) != BOUNDARY
        or point_in_polygon(c.b, P) != BOUNDARY
        or not segment_in_polygon(c.a, c.b, P)
    ):
        raise NotAChord(f"{c} is not a chord of the polygon")
    verts, _ = _weak_structure(P, c.a, c.b)
    return SimplePolygon(verts)


def weakly_sees_all(P: SimplePolygon, base: int) -> bool:
    """Exact check that edge `base` weakly sees the entire polygon."""
    A = P.vertex(base)
    B = P.vertex(base + 1)
    for v in P.vertices:
        if not weakly_sees_segment(v, A, B, P):
            return False
    events = _weak_events(P, A, B)
    m = len(events)
    for e in events:
        if not e.is_vertex and not weakly_sees_segment(e.point, A, B, P):
            return False
    for i in range(m):
        a, b = events[i].point, events[(i + 1) % m].point
        if a == b:
            continue
        mid = Segment(a, b).midpoint()
        if not weakly_sees_segment(mid, A, B, P):
            return False
    return True


def is_weakly_visible_from_convex_edge(P: SimplePolygon) -> Optional[int]:
    """Some convex edge weakly seeing all of P, or None."""
    for i in range(P.n):
        if P.turn(i) != RIGHT and P.turn(i + 1) != RIGHT:
            if weakly_sees_all(P, i):
                return i
    return None


# ---------------------------------------------------------------------------
# strong edge-to-edge visibility

VERIFY_STRONG_SEES = False


def strongly_sees(i: int, j: int, P: SimplePolygon) -> bool:
    """True iff every point of edge i sees every point of edge j, i.e. the
    convex hull of the four endpoints lies inside P."""
    if i == j:
        raise ValueError("edge indices must differ")
    pts = [P.vertex(i), P.vertex(i + 1), P.vertex(j), P.vertex(j + 1)]
    res = convex_region_inside(pts, P)
    if res and VERIFY_STRONG_SEES:
        for a in pts[:2]:
            for b in pts[2:]:
                assert segment_in_polygon(a, b, P)
    return res


# ---------------------------------------------------------------------------
# shortest path trees


@dataclass(frozen=True)
class ShortestPathTree:
    root: int
    parent: tuple  # parent[v] is the next vertex toward the root; -1 at root
    hops: tuple

    def path_from_root(self, v: int) -> list:
        out = [v]
        while self.parent[out[-1]] != -1:
            out.append(self.parent[out[-1]])
        out.reverse()
        return out


def shortest_path_tree(root: int, P: SimplePolygon) -> ShortestPathTree:
    """Euclidean shortest path tree over the vertex visibility graph.

    Exactness note: geodesics in a simple polygon are unique, so float
    length comparisons settle every non-degenerate instance; ties are
    broken deterministically by vertex index.
    """
    key = ("spt", root)
    cached = P._cache.get(key)
    if cached is not None:
        return cached
    vis = vertex_visibility_matrix(P)
    n = P.n
    fx = [float(v.x) for v in P.vertices]
    fy = [float(v.y) for v in P.vertices]
    dist = [math.inf] * n
    hops = [0] * n
    parent = [-1] * n
    dist[root] = 0.0
    heap = [(0.0, root)]
    done = [False] * n
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        row = vis[u]
        for v in range(n):
            if done[v] or not row[v] or v == u:
                continue
            nd = d + math.hypot(fx[v] - fx[u], fy[v] - fy[u])
            if nd < dist[v] or (nd == dist[v] and parent[v] > u):
                dist[v] = nd
                parent[v] = u
                hops[v] = hops[u] + 1
                heapq.heappush(heap, (nd, v))
    spt = ShortestPathTree(root, tuple(parent), tuple(hops))
    P._cache[key] = spt
    return spt


# ---------------------------------------------------------------------------
# window partition


@dataclass(frozen=True)
class Region:
    polygon: SimplePolygon
    depth: int
    turn: str  # ROOT, LEFT_WINDOW or RIGHT_WINDOW
    window: Optional[Segment]
    base_edge: Optional[int]  # index of the window edge in `polygon`
    real_edges: tuple  # polygon edge indices lying on the original boundary


@dataclass(frozen=True)
class WindowPartition:
    polygon: SimplePolygon
    root: int
    regions: tuple


def _real_edges(region: SimplePolygon, original: SimplePolygon) -> tuple:
    out = []
    for i in range(region.n):
        mid = region.edge(i).midpoint()
        if point_in_polygon(mid, original) == BOUNDARY:
            out.append(i)
    return tuple(out)


def _event_rank(e: _Event) -> Fraction:
    return e.edge + e.t


def _arc_vertex_indices(n: int, rank_from: Fraction, rank_to: Fraction):
    """Integer ranks strictly between rank_from and rank_to, cyclically."""
    length = (rank_to - rank_from) % n
    k = math.floor(rank_from) + 1
    out = []
    while Fraction(k - rank_from) % n < length:
        out.append(k % n)
        k += 1
    return out


def _pocket_polygon(Q: SimplePolygon, E: _Event, S: _Event):
    """Sub-polygon hidden behind the window chord E->S (boundary arc E..S
    plus the closing chord).  Returns (polygon, base_edge_index) or None
    when degenerate."""
    pts = [E.point]
    for k in _arc_vertex_indices(Q.n, _event_rank(E), _event_rank(S)):
        if Q.vertices[k] != pts[-1]:
            pts.append(Q.vertices[k])
    if S.point != pts[-1] and S.point != pts[0]:
        pts.append(S.point)
    if len(pts) < 3:
        return None
    from .geom import polygon_signed_area2

    if polygon_signed_area2(pts) <= 0:
        return None
    poly = SimplePolygon(pts)
    return poly, poly.n - 1  # closing chord S->E is the last edge


def _window_turn(Q: SimplePolygon, E: _Event, S: _Event) -> str:
    """Label by which chord endpoint is the blocking reflex vertex of Q:
    reflex vertex first in region boundary order = right window."""
    e_reflex = E.is_vertex and Q.turn(E.edge) == RIGHT
    s_reflex = S.is_vertex and Q.turn(S.edge) == RIGHT
    if e_reflex and not s_reflex:
        return RIGHT_WINDOW
    if s_reflex and not e_reflex:
        return LEFT_WINDOW
    return RIGHT_WINDOW


def window_partition(P: SimplePolygon, root: int) -> WindowPartition:
    """Recursive link-distance decomposition from a convex root vertex."""
    if P.turn(root) == RIGHT:
        raise NotConvexVertex(f"vertex {root} is reflex")
    regions = []
    p = P.vertices[root]
    verts, windows = _point_visibility_structure(p, P)
    region0 = SimplePolygon(verts)
    regions.append(
        Region(region0, 0, ROOT, None, None, _real_edges(region0, P))
    )
    queue = []
    for E, S, _hidden in windows:
        pocket = _pocket_polygon(P, E, S)
        if pocket is not None:
            queue.append((pocket[0], pocket[1], 1, _window_turn(P, E, S)))
    while queue:
        Q, base_edge, depth, turn = queue.pop()
        A = Q.vertex(base_edge)
        B = Q.vertex(base_edge + 1)
        verts, wins = _weak_structure(Q, A, B)
        region = SimplePolygon(verts)
        regions.append(
            Region(region, depth, turn, Segment(A, B),
                   _find_edge(region, A, B), _real_edges(region, P))
        )
        for E, S, _hidden in wins:
            pocket = _pocket_polygon(Q, E, S)
            if pocket is not None:
                queue.append((pocket[0], pocket[1], depth + 1, _window_turn(Q, E, S)))
    return WindowPartition(P, root, tuple(regions))


def _find_edge(poly: SimplePolygon, a: Point, b: Point) -> Optional[int]:
    for i in range(poly.n):
        e = poly.edge(i)
        if (e.a == a and e.b == b) or (e.a == b and e.b == a):
            return i
    # base may appear subdivided or merged; fall back to midpoint matching
    mid = Segment(a, b).midpoint()
    for i in range(poly.n):
        e = poly.edge(i)
        if on_segment(mid, e.a, e.b) and orientation(e.a, e.b, a) == COLLINEAR:
            return i
    return None
