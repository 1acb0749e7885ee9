import networkx as nx
import pytest

from coprime_lab.errors import CapExceededError
from coprime_lab.graph import build, find_kuratowski_subgraph, planarity_status, tcg7_crossing_witnesses

from .conftest import nx_coprime_graph


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_small_coprime_graphs_planar(n):
    res = planarity_status(build(n))
    assert res.planar and res.status == "planar"
    assert nx.check_planarity(nx_coprime_graph(n))[0]


@pytest.mark.parametrize("n", [7, 8, 100])
def test_nonplanar_from_seven(n):
    res = planarity_status(build(n))
    assert not res.planar and res.kind == "K5"
    assert res.witness_vertices == (1, 2, 3, 5, 7)


def test_tcg4_edge_bound():
    g = build(4)
    assert g.edge_count <= 3 * 4 - 6


def test_kuratowski_search_finds_k5_and_k33():
    k5 = [(a, b) for a in range(1, 6) for b in range(a + 1, 6)]
    assert find_kuratowski_subgraph(k5)[0] == "K5"
    k33 = [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)]
    assert find_kuratowski_subgraph(k33)[0] == "K3,3"
    # subdivide one K3,3 edge
    sub = [e for e in k33 if e != (1, 4)] + [(1, 7), (7, 4)]
    kind, edges = find_kuratowski_subgraph(sub)
    assert kind == "K3,3" and len(edges) == 10
    # the triangular prism is 3-regular on 6 vertices but planar
    prism = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)]
    assert find_kuratowski_subgraph(prism) is None


def test_kuratowski_search_cap():
    with pytest.raises(CapExceededError):
        find_kuratowski_subgraph([(i, i + 1) for i in range(30)])


def test_tcg7_crossing_witnesses():
    w = tcg7_crossing_witnesses(build(7))
    assert w.edge_count == 17
    assert w.edges_after_one_removal == 16 and w.planar_edge_bound == 15
    assert w.one_crossing_impossible
    assert w.k5_sets == {(1, 2, 3, 5, 7): True, (1, 3, 4, 5, 7): True}
    assert w.all_k5 == ((1, 2, 3, 5, 7), (1, 3, 4, 5, 7))
    assert w.k5_sets_avoid_2_and_4
    assert w.k33_parts == ((1, 5, 7), (2, 4, 6)) and w.k33_cross_edges_present == 9
    assert w.all_hold


def test_crossing_witnesses_only_for_seven():
    with pytest.raises(ValueError):
        tcg7_crossing_witnesses(build(8))
