"""Atomic parts: smallest components left behind by minimum vertex cutsets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .. import graphs
from ..connectivity import vertex_connectivity
from ..graphs import SimpleGraph
from .blocks import StructureError

CUTSET_LIMIT = 12


@dataclass(frozen=True)
class AtomicPartition:
    kappa: int
    rho: int
    parts: list[frozenset[int]]

    def to_json(self) -> dict:
        return {"kappa": self.kappa, "rho": self.rho,
                "atomic_parts": [sorted(p) for p in self.parts]}


def min_cutsets(g: SimpleGraph) -> tuple[int, list[tuple[int, ...]]]:
    """kappa and every kappa-subset whose removal disconnects g."""
    if graphs.is_complete(g):
        raise StructureError("complete graphs have no vertex cutset")
    kappa = vertex_connectivity(g)
    cuts = [c for c in itertools.combinations(g.vertices(), kappa)
            if not graphs.is_connected(graphs.remove_vertices(g, c)[0])]
    return kappa, cuts


def neighbourhood(g: SimpleGraph, part) -> set[int]:
    """Vertices outside ``part`` adjacent to it."""
    out: set[int] = set()
    for v in part:
        out |= g.adj[v]
    return out - set(part)


def adjacency_violations(g: SimpleGraph, parts) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Pairs (A, A') with A' meeting N(A) without lying inside it."""
    bad = []
    for a, b in itertools.permutations(parts, 2):
        nb = neighbourhood(g, a)
        if b & nb and not b <= nb:
            bad.append((a, b))
    return bad


def atomic_parts(g: SimpleGraph, limit: int | None = CUTSET_LIMIT) -> AtomicPartition:
    if limit is not None and g.n > limit:
        raise StructureError(f"n={g.n} exceeds cutset enumeration limit {limit}")
    if not graphs.is_connected(g):
        raise StructureError("atomic parts need a connected graph")
    kappa, cuts = min_cutsets(g)
    found: list[list[int]] = []
    for c in cuts:
        rest, label = graphs.remove_vertices(g, c)
        for comp in graphs.components(rest):
            found.append([label[v] for v in comp])
    rho = min(len(c) for c in found)
    parts = sorted({frozenset(c) for c in found if len(c) == rho}, key=sorted)
    for a, b in itertools.combinations(parts, 2):
        if a & b:
            raise AssertionError(f"atomic parts {sorted(a)} and {sorted(b)} overlap")
    return AtomicPartition(kappa, rho, parts)
