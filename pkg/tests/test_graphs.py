from __future__ import annotations

import itertools

import networkx as nx
import pytest

from fsgraphs import graphs
from fsgraphs.graphs import GraphError, SimpleGraph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return h


def test_star_and_star_plus():
    s = graphs.star(5)
    assert s.edges() == [(1, 5), (2, 5), (3, 5), (4, 5)]
    assert graphs.star_plus(5).edges() == [(1, 2), (1, 5), (2, 5), (3, 5), (4, 5)]


def test_theta0_shape():
    t = graphs.theta0()
    assert (t.n, t.m) == (7, 8)
    assert sorted(t.degrees()) == [2, 2, 2, 2, 2, 3, 3]
    assert graphs.is_bipartite(t) is None  # has a 5-cycle 1-2-3-4-5


def test_starcle_edges():
    g = graphs.starcle(7, (4,))
    assert set(g.edges()) == {(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 7), (4, 7)}


@pytest.mark.parametrize("n,diag", [(3, ()), (7, (1,)), (7, (6,)), (7, (4, 3)), (7, (2, 2))])
def test_starcle_rejects_bad_tuples(n, diag):
    with pytest.raises(GraphError):
        graphs.starcle(n, diag)


def test_grid_matches_networkx():
    g = graphs.grid(3, 4)
    ref = nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 4), first_label=1,
                                             ordering="sorted")
    assert sorted(tuple(sorted(e)) for e in ref.edges()) == g.edges()


def test_gnp_frozen_fixture():
    g = graphs.gnp(8, 0.5, 12345)
    assert g.m == 14
    assert g.edges()[:4] == [(1, 5), (1, 6), (2, 3), (2, 6)]


def test_gnp_boundaries_and_nesting():
    assert graphs.gnp(6, 0.0, 1).m == 0
    assert graphs.gnp(6, 1.0, 1).m == 15
    lo = set(graphs.gnp(9, 0.3, 99).edges())
    hi = set(graphs.gnp(9, 0.6, 99).edges())
    assert lo <= hi


def test_dsl_parsing():
    assert graphs.parse_family("star:7") == graphs.star(7)
    assert graphs.parse_family("starcle:9:3,5") == graphs.starcle(9, (3, 5))
    assert graphs.parse_family("grid:4x4") == graphs.grid(4, 4)
    assert graphs.parse_family("gnp:8:0.5:12345") == graphs.gnp(8, 0.5, 12345)
    assert graphs.parse_family("theta0") == graphs.theta0()
    assert graphs.parse_family("star-plus:5") == graphs.star_plus(5)
    for bad in ("star", "nope:3", "grid:4", "gnp:8:0.5", "cycle:x"):
        with pytest.raises(GraphError):
            graphs.parse_family(bad)


def test_edge_list_round_trip(tmp_path):
    g = graphs.starcle(8, (3,))
    text = graphs.format_edge_list(g)
    assert graphs.parse_edge_list(text) == g
    f = tmp_path / "g.txt"
    f.write_text(text)
    assert graphs.load_graph(f"@{f}") == g


@pytest.mark.parametrize("text", ["3\n1 1\n", "3\n2 1\n", "3\n1 2\n1 2\n", "3\n1 4\n", "x\n"])
def test_edge_list_rejects(text):
    with pytest.raises(GraphError):
        graphs.parse_edge_list(text)


def test_vertex_limit():
    with pytest.raises(GraphError):
        graphs.empty(65)
    assert SimpleGraph(70, [], limit=None).n == 70


def test_components_and_bipartite_against_networkx():
    for g in itertools.islice(graphs.all_labeled_graphs(5), 0, 1024, 7):
        ref = to_nx(g)
        assert sorted(map(sorted, nx.connected_components(ref))) == graphs.components(g)
        bip = graphs.is_bipartite(g)
        assert (bip is not None) == nx.is_bipartite(ref)
        if bip is not None:
            a, b = bip
            assert all((u in a) != (v in a) for u, v in g.edges())
            assert 1 in a


def test_induced_subgraph_labels():
    g = graphs.cycle(6)
    sub, label = graphs.induced_subgraph(g, [2, 3, 4, 6])
    assert label == [0, 2, 3, 4, 6]
    assert sub.edges() == [(1, 2), (2, 3)]


def test_isomorphism_and_automorphisms():
    c = graphs.cycle(5)
    shuffled = graphs.relabel(c, {1: 3, 2: 5, 3: 2, 4: 4, 5: 1})
    assert graphs.is_isomorphic(c, shuffled)
    assert not graphs.is_isomorphic(c, graphs.path(5))
    assert len(graphs.automorphisms(c)) == 10
    assert len(graphs.automorphisms(graphs.theta0())) == 4
