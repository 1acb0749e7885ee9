import math
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coprime_lab.graph import (
    INF,
    build,
    diameter,
    every_vertex_on_triangle,
    girth,
    is_bipartite,
    is_chordal,
    is_chordless_cycle,
    is_cycle,
    to_dot,
)
from coprime_lab.graph.core import default_triangle, lex_bfs

from .conftest import nx_coprime_graph


def _has_induced_cycle(g, min_len=4):
    """Brute force: some vertex subset induces a cycle of length >= min_len."""
    for k in range(min_len, g.n + 1):
        for vs in combinations(range(1, g.n + 1), k):
            deg = [sum(g.adjacent(u, w) for w in vs if w != u) for u in vs]
            if all(d == 2 for d in deg) and nx.is_connected(nx.Graph([(u, w) for u, w in combinations(vs, 2) if g.adjacent(u, w)])):
                return True
    return False


def test_build_small_cases():
    assert build(3).is_complete()
    assert build(7).edge_count == 17
    g4 = build(4)
    assert g4.edges() == [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]


def test_build_rejects_zero():
    with pytest.raises(ValueError):
        build(0)


@pytest.mark.parametrize("n", [1, 2, 5, 64, 65, 300])
def test_adjacency_matches_gcd(n):
    g = build(n)
    for i in range(1, n + 1):
        assert not g.adjacent(i, i)
        for j in range(1, n + 1):
            if i != j:
                assert g.adjacent(i, j) == (math.gcd(i, j) == 1) == g.adjacent(j, i)
    assert g.row(1) == g.full & ~1


def test_induced_prefix_is_smaller_coprime_graph():
    big = build(120)
    for k in (1, 2, 7, 64, 119):
        assert big.prefix(k) == build(k)


@pytest.mark.parametrize("n,expected", [(7, 2), (2, 1), (3, 1), (1, 0), (4, 2)])
def test_diameter_examples(n, expected):
    assert diameter(build(n)) == expected


def test_diameter_disconnected_is_inf():
    from coprime_lab.graph import CoprimeGraph

    assert diameter(CoprimeGraph(3, (0b010, 0b001, 0))) == INF


def test_diameter_matches_networkx():
    for n in range(2, 40):
        assert diameter(build(n)) == nx.diameter(nx_coprime_graph(n))


@pytest.mark.parametrize("n,expected", [(3, 3), (2, INF), (1, INF), (5, 3), (100, 3)])
def test_girth_examples(n, expected):
    assert girth(build(n)) == expected


def test_girth_on_longer_cycle():
    from coprime_lab.graph import CoprimeGraph
    from coprime_lab.graph.core import mask_of

    # a 5-cycle 1-2-3-4-5-1 is not a coprime graph, but the BFS is generic
    ring = {1: (2, 5), 2: (1, 3), 3: (2, 4), 4: (3, 5), 5: (4, 1)}
    g = CoprimeGraph(5, tuple(mask_of(ring[v]) for v in range(1, 6)))
    assert girth(g) == 5
    assert not is_bipartite(g)
    assert len(is_bipartite(g).odd_cycle) == 5


def test_bipartite_examples():
    res = is_bipartite(build(3))
    assert not res and sorted(res.odd_cycle) == [1, 2, 3]
    assert is_bipartite(build(2))
    assert is_bipartite(build(1))
    res12 = is_bipartite(build(12))
    assert not res12 and len(res12.odd_cycle) % 2 == 1 and is_cycle(build(12), res12.odd_cycle)


def test_triangle_examples():
    cov = every_vertex_on_triangle(build(5))
    assert cov and cov.witnesses[5] == (1, 4, 5)
    cov3 = every_vertex_on_triangle(build(3))
    assert cov3 and set(cov3.witnesses.values()) == {(1, 2, 3)}
    assert every_vertex_on_triangle(build(7))
    with pytest.raises(ValueError):
        every_vertex_on_triangle(build(2))


def test_default_triangle_always_valid():
    g = build(1000)
    for m in range(1, 1001):
        assert g.is_clique(default_triangle(m))


def test_chordal_tcg7_by_enumeration():
    g = build(7)
    assert not _has_induced_cycle(g)
    assert is_chordal(g)


def test_chordal_tcg15_witness():
    g = build(15)
    assert is_chordless_cycle(g, (4, 9, 8, 15))
    res = is_chordal(g)
    assert not res
    assert is_chordless_cycle(g, res.chordless_cycle)


def test_chordal_matches_enumeration_small_n():
    for n in range(1, 13):
        g = build(n)
        assert bool(is_chordal(g)) == (not _has_induced_cycle(g)), n


def test_chordal_matches_networkx():
    for n in range(3, 80):
        g = build(n)
        res = is_chordal(g)
        assert bool(res) == nx.is_chordal(nx_coprime_graph(n))
        if not res:
            assert is_chordless_cycle(g, res.chordless_cycle)


def test_lex_bfs_is_a_permutation():
    order = lex_bfs(build(30))
    assert sorted(order) == list(range(1, 31))


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 400))
def test_structure_properties(n):
    g = build(n)
    assert diameter(g) == 2
    assert girth(g) == 3
    assert not is_bipartite(g)
    assert every_vertex_on_triangle(g)


def test_dot_export():
    dot = to_dot(build(7))
    assert dot.startswith("graph TCG_7 {")
    assert dot.count(" -- ") == 17
    assert sum(1 for line in dot.splitlines() if line.strip().rstrip(";").isdigit()) == 7
    dot2 = to_dot(build(2))
    assert dot2.count(" -- ") == 1 and "  1 -- 2;" in dot2
