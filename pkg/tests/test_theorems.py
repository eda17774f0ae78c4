from __future__ import annotations

import itertools

import numpy as np
import pytest

import oracles
from fsgraphs import graphs
from fsgraphs import perms as P
from fsgraphs import theorems as T
from fsgraphs.fs import FSInstance, component_labels, fs_components
from fsgraphs.graphs import SimpleGraph

K23 = SimpleGraph(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])


def test_parity_values():
    c4 = graphs.cycle(4)
    assert T.parity_p(c4, c4, (1, 2, 3, 4)) == 3
    s = P.swap((1, 2, 3, 4), 1, 2)
    # person 2 now on vertex 1 (not in A_Y), person 3 stays on vertex 3
    assert T.parity_p(c4, c4, s) == 1 + 0
    with pytest.raises(ValueError):
        T.parity_p(graphs.complete(3), graphs.path(3), (1, 2, 3))


def test_parity_table_matches_pointwise():
    inst = FSInstance(graphs.path(5), graphs.cycle(4).__class__(5, graphs.star(5).edges()))
    table = T.parity_table(inst)
    for r, s in enumerate(P.all_perms(5)):
        assert table[r] == T.parity_p(inst.X, inst.Y, tuple(int(v) for v in s))


def test_parity_invariant_c4():
    res = T.check_parity_invariant(FSInstance(graphs.cycle(4), graphs.cycle(4)))
    assert res.holds and res.components >= 2 and set(res.parities) == {0, 1}


def test_supplied_bipartition_checked():
    with pytest.raises(ValueError):
        T.parity_p(graphs.path(3), graphs.path(3), (1, 2, 3), bip_x={1, 2})
    assert T.parity_p(graphs.path(3), graphs.path(3), (1, 2, 3), bip_x={2}, bip_y={2}) == 2


def test_matrix_count_examples():
    assert T.matrix_count([2], [1, 1]) == 1
    assert T.matrix_count([1, 1], [1, 1]) == 2
    assert T.matrix_count([2, 1], [1, 1, 1]) == 3
    with pytest.raises(ValueError):
        T.matrix_count([2], [1])
    with pytest.raises(ValueError):
        T.matrix_count([], [])
    with pytest.raises(ValueError):
        T.matrix_count([31], [31])


def test_matrix_count_against_enumeration():
    for rows in [(1, 2), (3,), (2, 2), (1, 1, 1), (3, 1)]:
        total = sum(rows)
        for cols in [(total,), (total - 1, 1), (1,) * total]:
            assert T.matrix_count(rows, cols) == oracles.brute_matrix_count(rows, cols)
            assert T.matrix_count(rows, cols) == T.matrix_count(cols, rows)


def test_cut_vertex_bound():
    b = T.cut_vertex_bound(graphs.path(4), graphs.path(4))
    assert b.bound >= 2
    assert len(fs_components(FSInstance(graphs.path(4), graphs.path(4)))) >= b.bound
    assert T.cut_vertex_bound(graphs.cycle(4), graphs.path(4)) is None


def test_star_k_conditions():
    assert T.star_k_conditions(graphs.complete(5), 4).verdict
    assert set(T.star_k_conditions(graphs.cycle(6), 2).failed) == {"not_bipartite", "not_cycle"}
    assert T.star_k_conditions(graphs.theta0(), 2).failed == ["not_theta0"]


def test_star_plus_k_conditions():
    assert T.star_plus_k_conditions(K23, 2).verdict
    assert T.star_plus_k_conditions(graphs.cycle(7), 2).failed == ["not_cycle"]
    assert T.star_plus_k_conditions(graphs.complete(4), 3).verdict


def test_dense_degree_arithmetic():
    rep = T.dense_degree_arithmetic(50, 28, 34, 2)
    assert rep.verdict
    slack = {h.name: h.slack for h in rep.hypotheses}
    assert slack["weighted_degree_bound"] == 56 + 102 - 150
    assert slack["n_large_enough"] == 0
    # 2*30 + 3*30 = 150 meets 3n + 2k - 4 = 150 exactly
    assert T.dense_degree_arithmetic(50, 30, 30, 2).verdict
    assert not T.dense_degree_arithmetic(50, 29, 30, 2).verdict
    assert T.dense_degree_arithmetic(49, 40, 40, 2).failed == ["n_large_enough"]


def test_min_degree_conditions():
    assert T.kban2_conditions(graphs.complete(6), graphs.complete(6), 2).verdict
    rep = T.kban2_conditions(graphs.cycle(6), graphs.cycle(6), 2)
    assert "degree_sum_bound" in rep.failed
    cocktail = SimpleGraph(6, [e for e in itertools.combinations(range(1, 7), 2)
                               if e not in {(1, 2), (3, 4), (5, 6)}])
    assert T.kban2_conditions(cocktail, graphs.complete(6), 2).verdict


def test_verify_examples():
    v = T.verify_theorem("1.3", graphs.path(3))
    assert v.passed and v.measured == {"connectivity": 2, "min_degree": 2}
    assert T.verify_theorem("star-component-connectivity", graphs.complete(4)).measured == [3]
    v = T.verify_theorem("thm-1.6", graphs.theta0())
    assert v.passed and v.claimed == 840 == v.measured
    assert T.verify_theorem("1.6", graphs.cycle(6)).measured == 30
    assert T.verify_theorem("3.9", graphs.cycle(6)).status == "hypotheses not satisfied"
    assert T.verify_theorem("3.11", K23).passed
    assert T.verify_theorem("1.7", graphs.complete(6), graphs.complete(6)).status == \
        "hypotheses not satisfied"
    assert T.verify_theorem("1.4", graphs.complete(4), graphs.complete(4), 3).passed
    with pytest.raises(KeyError):
        T.resolve_theorem("9.9")


def test_verify_size_on_disconnected_x():
    x = SimpleGraph(5, [(1, 2), (2, 3), (1, 3), (4, 5)])
    assert T.verify_theorem("1.6", x).passed


def test_starcle_check():
    res = T.starcle_disjoint_paths_check(7, (4,), 2)
    assert res.holds and res.mode == "exhaustive" and res.pairs_checked == 720 * 719 // 2
    assert T.starcle_disjoint_paths_check(7, (4,), 1, sample_size=30, seed=1).holds
    with pytest.raises(T.HypothesisError):
        T.starcle_disjoint_paths_check(8, (3, 5), 2)  # every gap is 2
    with pytest.raises(T.HypothesisError):
        T.starcle_disjoint_paths_check(7, (4,), 3)


def test_parity_components_match_bfs_labels():
    inst = FSInstance(graphs.cycle(4), graphs.star(4))
    labels = component_labels(inst)
    par = T.parity_table(inst) % 2
    for c in range(labels.max() + 1):
        assert len(set(par[labels == c].tolist())) == 1
