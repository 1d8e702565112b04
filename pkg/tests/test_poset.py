import itertools
import random

from hypothesis import given, settings, strategies as st

from polycover.geom import SimplePolygon, pt
from polycover.poset import (
    Antichain,
    ChainCover,
    EdgePoset,
    build_edge_poset,
    enumerate_antichains,
    max_antichain,
    min_chain_cover,
)

MOUNTAIN = SimplePolygon(
    [pt(0, 0), pt(12, 0), pt(11, 4), pt(10, 1), pt(7, 5), pt(6, 1), pt(3, 6), pt(1, 1)]
)


def brute_max_antichain_size(G: EdgePoset) -> int:
    best = 0
    for r in range(G.m, 0, -1):
        if r <= best:
            break
        for comb in itertools.combinations(range(G.m), r):
            if all(not G.comparable(a, b) for a, b in itertools.combinations(comb, 2)):
                best = max(best, r)
                break
    return best


def test_empty_arcs_antichain_is_everything():
    G = EdgePoset.from_arcs(5, [])
    assert max_antichain(G).edges == (0, 1, 2, 3, 4)
    assert len(min_chain_cover(G).chains) == 5


def test_total_order():
    arcs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    G = EdgePoset.from_arcs(5, arcs)
    assert len(max_antichain(G).edges) == 1
    cover = min_chain_cover(G)
    assert len(cover.chains) == 1
    assert cover.chains[0] == (0, 1, 2, 3, 4)


def test_transitive_closure_applied():
    G = EdgePoset.from_arcs(3, [(0, 1), (1, 2)])
    assert G.comparable(0, 2)


def test_convex_polygon_poset_complete():
    square = SimplePolygon([pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)])
    G = build_edge_poset(square, 0)
    assert G.m == 3
    assert len(G.arcs) == 3  # complete order on 3 edges
    assert len(max_antichain(G).edges) == 1


def test_mountain_poset_brute_force_agreement():
    G = build_edge_poset(MOUNTAIN, 0)
    assert G.m == 7
    assert len(max_antichain(G).edges) == brute_max_antichain_size(G)
    assert len(max_antichain(G).edges) == len(min_chain_cover(G).chains)


def test_antichain_validity_and_chain_validity():
    rng = random.Random(7)
    for _ in range(60):
        m = rng.randint(1, 14)
        arcs = [
            (i, j)
            for i in range(m)
            for j in range(i + 1, m)
            if rng.random() < 0.3
        ]
        G = EdgePoset.from_arcs(m, arcs)
        A = max_antichain(G)
        for a, b in itertools.combinations(A.edges, 2):
            assert not G.comparable(a, b)
        C = min_chain_cover(G)
        seen = set()
        for chain in C.chains:
            for a, b in zip(chain, chain[1:]):
                assert G.comparable(a, b)
            seen.update(chain)
        assert seen == set(range(m))
        assert len(A.edges) == len(C.chains)
        if m <= 12:
            assert len(A.edges) == brute_max_antichain_size(G)


@settings(max_examples=120, deadline=None)
@given(
    st.integers(min_value=1, max_value=11),
    st.lists(st.tuples(st.integers(0, 10), st.integers(0, 10)), max_size=30),
    st.randoms(),
)
def test_dilworth_equality_hypothesis(m, raw_arcs, rnd):
    arcs = [(min(a, b) % m, max(a, b) % m) for a, b in raw_arcs]
    arcs = [(a, b) for a, b in arcs if a < b]
    G = EdgePoset.from_arcs(m, arcs)
    A = max_antichain(G)
    C = min_chain_cover(G)
    assert len(A.edges) == len(C.chains) == brute_max_antichain_size(G)


def test_lexicographically_smallest_antichain():
    # two maximum antichains {0,2} and {1,2}: expect {0,2}
    G = EdgePoset.from_arcs(3, [(0, 1)])
    assert max_antichain(G).edges == (0, 2)


def test_enumerate_antichains():
    G = EdgePoset.from_arcs(3, [(0, 1)])
    chains = enumerate_antichains(G)
    assert () in chains
    assert (0, 1) not in chains
    assert (0, 2) in chains and (1, 2) in chains
