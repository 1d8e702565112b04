"""Strong-visibility poset over the edges of a polygon weakly visible from a
convex edge, plus maximum antichain / minimum chain cover via bipartite
matching (Dilworth through Koenig's theorem)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import NotWVP
from .geom import RIGHT, SimplePolygon
from .visibility import strongly_sees

LEX_MIN_LIMIT = 64


@dataclass(frozen=True)
class EdgePoset:
    """Transitively closed DAG on chain positions 0..m-1.

    `elements` maps position -> polygon edge index (counterclockwise after
    the base edge); synthetic posets may leave it as identity.
    """

    m: int
    arcs: frozenset  # ordered pairs (i, j), i < j, comparable positions
    elements: tuple

    @staticmethod
    def from_arcs(m: int, arcs, elements=None, close: bool = True) -> "EdgePoset":
        arcs = {(min(a, b), max(a, b)) for a, b in arcs if a != b}
        if close:
            arcs = _transitive_closure(m, arcs)
        return EdgePoset(m, frozenset(arcs), tuple(elements or range(m)))

    def comparable(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return (min(i, j), max(i, j)) in self.arcs

    def successors(self, i: int):
        return [j for j in range(i + 1, self.m) if (i, j) in self.arcs]


@dataclass(frozen=True)
class Antichain:
    edges: tuple  # sorted positions, pairwise incomparable


@dataclass(frozen=True)
class ChainCover:
    chains: tuple  # tuple of sorted position tuples partitioning 0..m-1


def _transitive_closure(m: int, arcs) -> set:
    adj = np.zeros((m, m), dtype=bool)
    for a, b in arcs:
        adj[a, b] = True
    reach = adj.copy()
    while True:
        nxt = reach | (reach @ reach)
        if (nxt == reach).all():
            break
        reach = nxt
    return {(i, j) for i in range(m) for j in range(i + 1, m) if reach[i, j]}


def _is_transitively_closed(m: int, arcs) -> bool:
    adj = np.zeros((m, m), dtype=bool)
    for a, b in arcs:
        adj[a, b] = True
    two_step = adj @ adj
    return not (two_step & ~adj).any()


def build_edge_poset(P: SimplePolygon, base: int) -> EdgePoset:
    """Arcs between all strongly-seeing pairs among the non-base edges.

    The relation on a polygon weakly visible from a convex edge is
    transitive; if the computed arcs are not transitively closed the input
    was not a valid instance.
    """
    n = P.n
    if P.turn(base) == RIGHT or P.turn(base + 1) == RIGHT:
        raise NotWVP(f"edge {base} is not a convex edge")
    elements = [(base + 1 + k) % n for k in range(n - 1)]
    m = len(elements)
    arcs = set()
    for i in range(m):
        for j in range(i + 1, m):
            if strongly_sees(elements[i], elements[j], P):
                arcs.add((i, j))
    if not _is_transitively_closed(m, arcs):
        raise NotWVP("strong visibility relation is not transitive; "
                     "polygon is not weakly visible from the given edge")
    return EdgePoset(m, frozenset(arcs), tuple(elements))


# ---------------------------------------------------------------------------
# Hopcroft-Karp matching on the comparability bipartite graph

_INF = float("inf")


def _hopcroft_karp(m: int, succ) -> dict:
    """Maximum matching left->right on edges (i, j) with j in succ[i]."""
    match_l = {}
    match_r = {}
    while True:
        dist = {}
        q = deque()
        for u in range(m):
            if u not in match_l:
                dist[u] = 0
                q.append(u)
        found = False
        while q:
            u = q.popleft()
            for v in succ[u]:
                w = match_r.get(v)
                if w is None:
                    found = True
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        if not found:
            break

        def dfs(u):
            for v in succ[u]:
                w = match_r.get(v)
                if w is None or (dist.get(w) == dist[u] + 1 and dfs(w)):
                    match_l[u] = v
                    match_r[v] = u
                    return True
            dist[u] = None
            return False

        for u in range(m):
            if u not in match_l:
                dfs(u)
    return match_l


def _koenig_antichain(G: EdgePoset):
    """Maximum antichain from the minimum vertex cover of the matching."""
    succ = [G.successors(i) for i in range(G.m)]
    match_l = _hopcroft_karp(G.m, succ)
    match_r = {v: u for u, v in match_l.items()}
    # alternating reachability from unmatched left vertices
    visited_l, visited_r = set(), set()
    q = deque(u for u in range(G.m) if u not in match_l)
    visited_l.update(q)
    while q:
        u = q.popleft()
        for v in succ[u]:
            if v in visited_r:
                continue
            visited_r.add(v)
            w = match_r.get(v)
            if w is not None and w not in visited_l:
                visited_l.add(w)
                q.append(w)
    # vertex cover = (L \ visited_l) + (R & visited_r)
    in_cover_l = set(range(G.m)) - visited_l
    in_cover_r = visited_r
    antichain = [i for i in range(G.m) if i not in in_cover_l and i not in in_cover_r]
    return antichain, match_l


def _max_antichain_size(m: int, arcs) -> int:
    succ = [[j for j in range(i + 1, m) if (i, j) in arcs] for i in range(m)]
    return m - len(_hopcroft_karp(m, succ))


def max_antichain(G: EdgePoset) -> Antichain:
    """A maximum antichain; lexicographically smallest position set when the
    poset is small enough for the refinement to be cheap."""
    antichain, _ = _koenig_antichain(G)
    if G.m > LEX_MIN_LIMIT:
        return Antichain(tuple(sorted(antichain)))
    target = len(antichain)
    chosen = []
    alive = set(range(G.m))
    for k in range(G.m):
        if k not in alive:
            continue
        rest = {x for x in alive if x != k and not G.comparable(x, k)}
        sub = sorted(rest)
        idx = {x: i for i, x in enumerate(sub)}
        sub_arcs = {
            (idx[a], idx[b]) for (a, b) in G.arcs if a in idx and b in idx
        }
        best_rest = _max_antichain_size(len(sub), sub_arcs)
        if len(chosen) + 1 + best_rest >= target:
            chosen.append(k)
            alive = rest
    assert len(chosen) == target
    return Antichain(tuple(sorted(chosen)))


def min_chain_cover(G: EdgePoset) -> ChainCover:
    """Minimum number of chains partitioning the positions; by Dilworth its
    size equals the maximum antichain size."""
    succ = [G.successors(i) for i in range(G.m)]
    match_l = _hopcroft_karp(G.m, succ)
    match_r = {v: u for u, v in match_l.items()}
    chains = []
    for start in range(G.m):
        if start in match_r:
            continue
        chain = [start]
        cur = start
        while cur in match_l:
            cur = match_l[cur]
            chain.append(cur)
        chains.append(tuple(chain))
    cover = ChainCover(tuple(sorted(chains)))
    total = sum(len(c) for c in cover.chains)
    assert total == G.m
    return cover


def enumerate_antichains(G: EdgePoset, cap: int = 100000):
    """All antichains (as sorted tuples, including the empty one) in
    lexicographic DFS order, stopping at `cap`."""
    out = []

    def rec(prefix, start):
        if len(out) >= cap:
            return
        out.append(tuple(prefix))
        for k in range(start, G.m):
            if all(not G.comparable(k, p) for p in prefix):
                prefix.append(k)
                rec(prefix, k + 1)
                prefix.pop()
                if len(out) >= cap:
                    return

    rec([], 0)
    return out
