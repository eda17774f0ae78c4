from __future__ import annotations

import numpy as np
import pytest

from fsgraphs import fs, graphs
from fsgraphs import perms as P
from fsgraphs.fs import star_instance
from fsgraphs.structure.routing import IllegalSwap, replay, route_in_star_fs


def test_p3_single_swap():
    s = (1, 2, 3)
    t = P.swap(s, 2, 3)
    assert route_in_star_fs(graphs.path(3), s, t) == [(2, 3)]


def test_c4_all_pairs_in_identity_component():
    x = graphs.cycle(4)
    ranks = fs.fs_component_ranks(star_instance(x), P.identity(4))
    states = [tuple(int(v) for v in P.all_perms(4)[r]) for r in ranks]
    for s in states:
        for t in states:
            seq = route_in_star_fs(x, s, t)
            assert replay(x, s, seq) == t


def test_different_components_give_none():
    x = graphs.cycle(4)
    assert route_in_star_fs(x, (1, 2, 3, 4), (2, 1, 3, 4)) is None
    assert route_in_star_fs(x, (1, 2, 3, 4), (2, 1, 3, 4), method="bfs") is None


def test_block_routing_agrees_with_bfs_reachability():
    rng = np.random.default_rng(2)
    for _ in range(60):
        n = int(rng.integers(3, 7))
        x = graphs.random_connected_graph(n, rng)
        for _ in range(4):
            s = tuple(int(v) for v in rng.permutation(n) + 1)
            t = tuple(int(v) for v in rng.permutation(n) + 1)
            a = route_in_star_fs(x, s, t)
            b = route_in_star_fs(x, s, t, method="bfs")
            assert (a is None) == (b is None)
            if a is not None:
                assert replay(x, s, a) == t
                assert len(a) >= len(b)


def test_replay_rejects_illegal_swaps():
    x = graphs.path(3)
    with pytest.raises(IllegalSwap):
        replay(x, (1, 2, 3), [(1, 3)])
    with pytest.raises(IllegalSwap):
        replay(x, (1, 2, 3), [(1, 2)])  # neither person is 3
