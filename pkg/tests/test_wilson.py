from __future__ import annotations

import math

import numpy as np

from fsgraphs import fs, graphs
from fsgraphs.fs import star_instance
from fsgraphs.graphs import SimpleGraph
from fsgraphs.structure import (WilsonTag, classify_block, is_theta0, is_wilsonian,
                                predict_component_size)

K23 = SimpleGraph(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])


def test_classify_examples():
    assert classify_block(graphs.theta0()).value == 120
    assert classify_block(graphs.cycle(6)).value == 5
    assert classify_block(graphs.path(2)).tag is WilsonTag.CYCLE_OR_P2
    assert classify_block(graphs.path(2)).value == 1
    assert classify_block(graphs.complete(3)).value == 2  # a triangle is a cycle
    assert classify_block(K23) == classify_block(K23)
    assert classify_block(K23).value == math.factorial(4) // 2
    assert classify_block(graphs.complete(5)).value == math.factorial(4)


def test_theta0_recognised_after_relabelling():
    g = graphs.relabel(graphs.theta0(), {1: 4, 2: 7, 3: 1, 4: 2, 5: 3, 6: 5, 7: 6})
    assert is_theta0(g)
    assert not is_theta0(graphs.cycle(7))


def test_block_value_times_order_is_measured_size():
    for b in [graphs.cycle(4), graphs.cycle(5), graphs.complete(4), K23, graphs.theta0(),
              graphs.path(2), graphs.starcle(6, (3,))]:
        sizes = {c.size for c in fs.fs_components(star_instance(b))}
        assert sizes == {b.n * classify_block(b).value}


def test_prediction_matches_bfs_on_random_graphs():
    rng = np.random.default_rng(21)
    for _ in range(60):
        x = graphs.random_connected_graph(int(rng.integers(2, 7)), rng)
        comps = fs.fs_components(star_instance(x))
        size = predict_component_size(x).size
        assert {c.size for c in comps} == {size}
        assert len(comps) * size == math.factorial(x.n)


def test_disconnected_prediction_depends_on_anchor():
    # triangle on 1..3 plus path 4-5-6
    x = SimpleGraph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6)])
    assert predict_component_size(x, 1).size == 6
    assert predict_component_size(x, 6).size == 3
    assert predict_component_size(x).size == 3
    measured = {c.size for c in fs.fs_components(star_instance(x))}
    assert measured == {3, 6}
    lone = SimpleGraph(3, [(1, 2)])
    assert predict_component_size(lone, 3).size == 1


def test_wilson_report():
    assert is_wilsonian(graphs.complete(4))
    rep = is_wilsonian(graphs.cycle(6))
    assert not rep and set(rep.failed) == {"not_bipartite", "not_cycle"}
    assert is_wilsonian(graphs.complete(3))  # C_3 is allowed
    assert is_wilsonian(graphs.theta0()).failed == ["not_theta0"]
