from __future__ import annotations

import itertools

import numpy as np
import pytest

from fsgraphs import graphs
from fsgraphs.graphs import SimpleGraph
from fsgraphs.structure import StructureError, atomic_parts
from fsgraphs.structure.atomic import adjacency_violations


def test_cycle6():
    part = atomic_parts(graphs.cycle(6))
    assert (part.kappa, part.rho) == (2, 1)
    assert part.parts == [frozenset({v}) for v in range(1, 7)]


def test_star5():
    part = atomic_parts(graphs.star(5))
    assert (part.kappa, part.rho) == (1, 1)
    assert part.parts == [frozenset({v}) for v in range(1, 5)]


def test_k4_minus_edge():
    part = atomic_parts(SimpleGraph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]))
    assert (part.kappa, part.rho) == (2, 1)
    assert part.parts == [frozenset({3}), frozenset({4})]


def test_errors():
    with pytest.raises(StructureError):
        atomic_parts(graphs.complete(4))
    with pytest.raises(StructureError):
        atomic_parts(graphs.cycle(13))
    with pytest.raises(StructureError):
        atomic_parts(graphs.empty(3))


def test_disjoint_and_adjacency_property():
    rng = np.random.default_rng(5)
    for _ in range(100):
        g = graphs.random_connected_graph(int(rng.integers(3, 8)), rng)
        if graphs.is_complete(g):
            continue
        part = atomic_parts(g)
        for a, b in itertools.combinations(part.parts, 2):
            assert not a & b
        assert adjacency_violations(g, part.parts) == []
