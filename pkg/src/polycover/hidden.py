"""Hidden sets in polygons weakly visible from a convex edge.

Builds the 2n-2 candidate points (two per non-base edge, pushed toward the
edge endpoints past every pairwise placement constraint) and extracts, for
any antichain of the strong-visibility edge poset, a hidden subset of the
same size by the two-case recursion on the antichain's extreme edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NotAnAntichain, NotWVP
from .geom import (
    LEFT,
    Point,
    SimplePolygon,
    edge_param,
    lerp,
    orientation,
    ray_segment_hit,
    segment_in_polygon,
)
from .poset import Antichain, EdgePoset, build_edge_poset, max_antichain
from .visibility import sees_into_open_segment

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class EdgeCandidates:
    s: Point  # near the edge's start vertex
    t: Point  # near the edge's end vertex
    s_param: Fraction
    t_param: Fraction
    s_constraint: Optional[Point]
    t_constraint: Optional[Point]


@dataclass(frozen=True)
class CandidateSet:
    """Two boundary candidates per non-base edge, indexed by chain position."""

    polygon: SimplePolygon
    base: int
    per_edge: tuple  # EdgeCandidates for positions 0..m-1

    @property
    def size(self) -> int:
        return 2 * len(self.per_edge)

    def points(self):
        for ec in self.per_edge:
            yield ec.s
            yield ec.t


@dataclass(frozen=True)
class HiddenSet:
    points: tuple
    witness: tuple  # violating pairs (i, j) found by the pairwise check

    @property
    def valid(self) -> bool:
        return not self.witness


def pairwise_invisible_violations(points, P) -> list:
    """All index pairs of points that can see each other inside P."""
    from .visibility import _segment_in_holed
    from .geom import PolygonWithHoles

    out = []
    pts = list(points)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if isinstance(P, PolygonWithHoles):
                if _segment_in_holed(pts[i], pts[j], P):
                    out.append((i, j))
            elif segment_in_polygon(pts[i], pts[j], P):
                out.append((i, j))
    return out


def make_hidden_set(points, P) -> HiddenSet:
    return HiddenSet(tuple(points), tuple(pairwise_invisible_violations(points, P)))


# ---------------------------------------------------------------------------
# chain structure and geodesic parents


class ChainStructure:
    """Per-pair geodesic facts for the chain of a weakly visible polygon.

    Chain vertices C[0..n-1] run counterclockwise from the base edge's end
    vertex around to its start vertex; chain edge k is (C[k], C[k+1]).
    For every pair of edges k < l, `parent[(k, l)]` is the chain index of
    the geodesic parent of C[l] on the shortest path from C[k+1]; the
    value k+1 means the path is a straight segment.

    Parents come from an incremental left-turning hull sweep: inside a
    polygon weakly visible from a convex edge, shortest paths between chain
    vertices bend only at chain vertices between them and turn only left,
    so the taut path is the left-turning hull chain of the intermediate
    vertices.
    """

    def __init__(self, P: SimplePolygon, base: int):
        self.polygon = P
        self.base = base
        n = P.n
        self.C = [P.vertex(base + 1 + t) for t in range(n)]
        self.m = n - 1
        self._parent = {}
        C = self.C
        for k in range(self.m):
            stack = [k + 1]
            for l in range(k + 2, self.m):
                while len(stack) >= 2 and orientation(
                    C[stack[-2]], C[stack[-1]], C[l]
                ) != LEFT:
                    stack.pop()
                stack.append(l)
                self._parent[(k, l)] = stack[-2]

    def parent(self, k: int, l: int) -> int:
        if l == k + 1:
            return k + 1
        return self._parent[(k, l)]

    def is_straight(self, k: int, l: int) -> bool:
        return self.parent(k, l) == k + 1

    def edge_points(self, k: int):
        return self.C[k], self.C[k + 1]


def build_candidate_set(P: SimplePolygon, base: int, spt=None) -> CandidateSet:
    """Candidate points s_k, t_k on every non-base edge.

    Every ordered edge pair (k, l), k < l contributes up to two constraints:
    when the path from C[k+1] to C[l] is straight, the backward extension of
    edge l crossing edge k caps t_k, and the forward extension of edge k
    crossing edge l caps s_l; when the path bends at a vertex u, the line
    through u parallel to C[k+1]C[l] caps both.  Candidates sit halfway
    between the tightest cap and their vertex (edge midpoint when uncapped,
    1/4 and 3/4 when both candidates are uncapped).

    `spt` optionally supplies geodesic parents as a mapping
    (vertex_index_root -> ShortestPathTree); by default the exact
    left-hull sweep is used.
    """
    chain = ChainStructure(P, base)
    m = chain.m
    C = chain.C
    n = P.n

    def parent_of(k, l):
        if spt is not None:
            root_v = (base + 1 + (k + 1)) % n
            target_v = (base + 1 + l) % n
            pv = spt[root_v].parent[target_v]
            if pv == -1 or pv == root_v:
                return k + 1
            return (pv - base - 1) % n
        return chain.parent(k, l)

    # tightest cap per candidate, measured as edge parameter distance to the
    # owning vertex; None = uncapped
    t_cap = [None] * m  # (dist_to_end_vertex, cap_point)
    s_cap = [None] * m  # (dist_to_start_vertex, cap_point)

    def cap_t(k, point):
        a, b = chain.edge_points(k)
        d = 1 - edge_param(a, b, point)
        if d <= 0:
            return  # degenerate zero-distance cap; no interior point satisfies it
        if t_cap[k] is None or d < t_cap[k][0]:
            t_cap[k] = (d, point)

    def cap_s(k, point):
        a, b = chain.edge_points(k)
        d = edge_param(a, b, point)
        if d <= 0:
            return
        if s_cap[k] is None or d < s_cap[k][0]:
            s_cap[k] = (d, point)

    for k in range(m):
        ak, bk = chain.edge_points(k)
        for l in range(k + 1, m):
            al, bl = chain.edge_points(l)
            u = parent_of(k, l)
            if u == k + 1:
                # straight path: edge extensions
                hit = ray_segment_hit(al, (al.x - bl.x, al.y - bl.y), ak, bk)
                if hit is not None:
                    cap_t(k, hit[1])
                hit = ray_segment_hit(bk, (bk.x - ak.x, bk.y - ak.y), al, bl)
                if hit is not None:
                    cap_s(l, hit[1])
            else:
                # bent path: line through the bend parallel to C[k+1]C[l]
                d = (C[l].x - C[k + 1].x, C[l].y - C[k + 1].y)
                from .geom import line_segment_hit

                hit = line_segment_hit(C[u], d, ak, bk)
                if hit is not None:
                    cap_t(k, hit)
                hit = line_segment_hit(C[u], d, al, bl)
                if hit is not None:
                    cap_s(l, hit)

    per_edge = []
    for k in range(m):
        a, b = chain.edge_points(k)
        if t_cap[k] is None and s_cap[k] is None:
            sp, tp = QUARTER, 3 * QUARTER
        else:
            tp = 1 - t_cap[k][0] / 2 if t_cap[k] is not None else HALF
            sp = s_cap[k][0] / 2 if s_cap[k] is not None else HALF
            if sp >= tp:
                sp = tp / 2
        per_edge.append(
            EdgeCandidates(
                s=lerp(a, b, sp),
                t=lerp(a, b, tp),
                s_param=sp,
                t_param=tp,
                s_constraint=s_cap[k][1] if s_cap[k] else None,
                t_constraint=t_cap[k][1] if t_cap[k] else None,
            )
        )
    return CandidateSet(P, base, tuple(per_edge))


# ---------------------------------------------------------------------------
# extraction


def extract_hidden_subset(I: Antichain, S: CandidateSet, P: SimplePolygon) -> HiddenSet:
    """A hidden subset of the candidate set with one point per antichain edge."""
    chain = ChainStructure(P, S.base)
    G = None  # validity of I against the poset is the caller's concern
    positions = tuple(sorted(I.edges))
    if len(set(positions)) != len(positions) or any(
        not 0 <= p < chain.m for p in positions
    ):
        raise NotAnAntichain(f"bad positions {positions}")
    pts = _extract(positions, S, chain, "B")
    return make_hidden_set(pts, P)


def _extract(positions, S: CandidateSet, chain: ChainStructure, need: str):
    if not positions:
        return []
    if len(positions) == 1:
        ec = S.per_edge[positions[0]]
        return [ec.t if need == "B" else ec.s]
    i1, iL = positions[0], positions[-1]
    A = chain.C[i1 + 1]
    B = chain.C[iL]
    if chain.is_straight(i1, iL):
        t1 = S.per_edge[i1].t
        if A != B and sees_into_open_segment(t1, A, B, chain.polygon):
            rest = _extract(positions[:-1], S, chain, "B")
            return rest + [S.per_edge[iL].s]
        rest = _extract(positions[1:], S, chain, "C")
        return [t1] + rest
    u = chain.parent(i1, iL)
    left = tuple(p for p in positions if p < u)
    right = tuple(p for p in positions if p >= u)
    if not left or not right:
        raise NotAnAntichain(
            f"geodesic bend at {u} does not split antichain {positions}"
        )
    return _extract(left, S, chain, "B") + _extract(right, S, chain, "C")


def wvp_hidden_set(P: SimplePolygon, base: int, exclude_edges=()) -> HiddenSet:
    """Hidden set of size >= the maximum antichain of the edge poset.

    No hidden point lies on the base edge; `exclude_edges` (polygon edge
    indices) additionally keeps candidates off those edges, restricting the
    antichain to the remaining ones.
    """
    G = build_edge_poset(P, base)
    allowed = [p for p in range(G.m) if G.elements[p] not in set(exclude_edges)]
    if not allowed:
        return HiddenSet((), ())
    if len(allowed) == G.m:
        A = max_antichain(G)
    else:
        idx = {p: i for i, p in enumerate(allowed)}
        sub_arcs = {
            (idx[a], idx[b]) for (a, b) in G.arcs if a in idx and b in idx
        }
        sub = EdgePoset(len(allowed), frozenset(sub_arcs), tuple(allowed))
        A_sub = max_antichain(sub)
        A = Antichain(tuple(sorted(allowed[p] for p in A_sub.edges)))
    S = build_candidate_set(P, base)
    H = extract_hidden_subset(A, S, P)
    if not H.valid:
        raise NotWVP(
            f"extracted set is not hidden (violations {H.witness}); "
            "input is not a valid weakly visible polygon"
        )
    if len(H.points) < len(A.edges):
        raise NotWVP("extraction lost antichain points")
    return H
