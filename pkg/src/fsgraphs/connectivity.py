"""Vertex connectivity through unit-capacity flows on the vertex-split graph.

Each vertex v becomes v_in -> v_out with capacity one; each edge {u, v}
becomes u_out -> v_in and v_out -> u_in.  An s-t flow from s_out to t_in then
counts internally vertex-disjoint s-t paths, a direct edge counting once.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from . import graphs
from . import perms as P
from .fs import EXPLICIT_BUDGET, FSInstance, fs_component_of, fs_whole_graph
from .graphs import SimpleGraph


class PathCertificateError(AssertionError):
    """A reported path family failed its own disjointness check."""


class _UnitVertexFlow:
    """Augmenting-path max flow between s and t on the split graph.

    Searches are breadth first and scan neighbours in increasing vertex
    order, so the resulting path family is deterministic.
    """

    def __init__(self, g: SimpleGraph, s: int, t: int):
        self.g, self.s, self.t = g, s, t
        self.nbrs = [sorted(a) for a in g.adj]
        self.through = [False] * (g.n + 1)
        self.succ: list[set[int]] = [set() for _ in range(g.n + 1)]
        self.pred: list[set[int]] = [set() for _ in range(g.n + 1)]
        self.value = 0
        self.reached: set[tuple[int, int]] = set()

    def _augment(self) -> bool:
        s, t = self.s, self.t
        start = (s, 1)
        parent = {start: None}
        queue = deque([start])
        goal = None
        while queue and goal is None:
            node = queue.popleft()
            x, side = node
            if side == 1:
                steps = []
                for y in self.nbrs[x]:
                    if y == s or (x == s and y == t and t in self.succ[s]):
                        continue
                    steps.append((y, 0))
                if x != s and self.through[x]:
                    steps.append((x, 0))
            else:
                steps = []
                if x != t and not self.through[x]:
                    steps.append((x, 1))
                steps.extend((w, 1) for w in sorted(self.pred[x]))
            for nxt in steps:
                if nxt in parent:
                    continue
                parent[nxt] = node
                if nxt == (t, 0):
                    goal = nxt
                    break
                queue.append(nxt)
        if goal is None:
            self.reached = set(parent)
            return False
        node = goal
        while parent[node] is not None:
            prev = parent[node]
            (a, sa), (b, sb) = prev, node
            if a == b:
                # internal arc: forward if in->out, cancellation if out->in
                self.through[a] = sa == 0
            elif sa == 1:
                # edge arc a_out -> b_in
                if a in self.succ[b]:
                    self.succ[b].discard(a)
                    self.pred[a].discard(b)
                else:
                    self.succ[a].add(b)
                    self.pred[b].add(a)
            else:
                # walking a_in back to b_out cancels flow on b_out -> a_in
                self.succ[b].discard(a)
                self.pred[a].discard(b)
            node = prev
        self.value += 1
        return True

    def run(self, cutoff: int | None = None) -> int:
        while cutoff is None or self.value < cutoff:
            if not self._augment():
                break
        return self.value

    def paths(self) -> list[list[int]]:
        out = []
        for y in sorted(self.succ[self.s]):
            p = [self.s, y]
            while p[-1] != self.t:
                (nxt,) = self.succ[p[-1]]
                p.append(nxt)
            out.append(p)
        return out

    def min_cut(self) -> set[int]:
        """Vertices whose in-side is reachable and out-side is not (after a full run)."""
        return {x for (x, side) in self.reached
                if side == 0 and (x, 1) not in self.reached and x not in (self.s, self.t)}


def check_disjoint_paths(g: SimpleGraph, u: int, v: int, paths: Sequence[Sequence[int]]) -> None:
    """Raise unless paths are valid u-v paths sharing no internal vertex."""
    used: set[int] = set()
    direct = 0
    for p in paths:
        if p[0] != u or p[-1] != v:
            raise PathCertificateError(f"path {p} does not join {u} and {v}")
        if len(set(p)) != len(p):
            raise PathCertificateError(f"path {p} repeats a vertex")
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                raise PathCertificateError(f"({a},{b}) is not an edge")
        inner = set(p[1:-1])
        if inner & used:
            raise PathCertificateError(f"path {p} meets an earlier path")
        used |= inner
        direct += len(p) == 2
    if direct > 1:
        raise PathCertificateError("direct edge used twice")


def max_disjoint_paths(g: SimpleGraph, u: int, v: int,
                       cutoff: int | None = None) -> tuple[int, list[list[int]]]:
    """Maximum number of internally vertex-disjoint u-v paths, with the paths.

    ``cutoff`` stops the search once that many paths are found.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    flow = _UnitVertexFlow(g, u, v)
    count = flow.run(cutoff)
    paths = flow.paths()
    check_disjoint_paths(g, u, v, paths)
    assert len(paths) == count
    return count, paths


def disjoint_fan(g: SimpleGraph, u: int, targets: Sequence[int]) -> list[list[int]] | None:
    """Paths from u to each target, pairwise sharing only u, or None.

    Adds an auxiliary vertex joined to every target and asks for len(targets)
    disjoint paths from u to it.
    """
    targets = list(targets)
    if len(set(targets)) != len(targets) or u in targets:
        raise ValueError("targets must be distinct and differ from u")
    if not targets:
        return []
    aux = g.n + 1
    h = SimpleGraph(aux, g.edges() + [(x, aux) for x in targets], limit=None)
    count, paths = max_disjoint_paths(h, u, aux)
    if count < len(targets):
        return None
    fan = sorted((p[:-1] for p in paths), key=lambda p: targets.index(p[-1]))
    return fan


# ---------------------------------------------------------------------------
# global connectivity

class _ScipyFlow:
    """Split network held as CSR so repeated s-t values reuse one matrix."""

    def __init__(self, g: SimpleGraph):
        rows, cols = [], []
        for v in g.vertices():
            rows.append(2 * v - 2)
            cols.append(2 * v - 1)
        for a, b in g.edges():
            rows += [2 * a - 1, 2 * b - 1]
            cols += [2 * b - 2, 2 * a - 2]
        data = np.ones(len(rows), dtype=np.int32)
        self.net = csr_matrix((data, (rows, cols)), shape=(2 * g.n, 2 * g.n))

    def value(self, s: int, t: int) -> int:
        return int(maximum_flow(self.net, 2 * s - 1, 2 * t - 2).flow_value)


def _pair_cover(g: SimpleGraph):
    """Vertex pairs whose local connectivities determine kappa.

    With s of minimum degree: s against every non-neighbour, then every
    non-adjacent pair of neighbours of s.
    """
    s = min(g.vertices(), key=lambda v: (g.degree(v), v))
    yield from ((s, t) for t in g.vertices() if t != s and not g.has_edge(s, t))
    for x, y in itertools.combinations(sorted(g.adj[s]), 2):
        if not g.has_edge(x, y):
            yield (x, y)


def _scan(g: SimpleGraph, engine: str, threshold: int | None = None):
    """(kappa, minimising pair or None).

    With ``threshold`` the scan stops at the first pair below it, so the
    returned value is exact only when it is >= threshold.
    """
    if g.n <= 1:
        return 0, None
    if not graphs.is_connected(g):
        return 0, None
    if graphs.is_complete(g):
        return g.n - 1, None
    best = graphs.min_degree(g)
    pair = None
    if engine == "scipy":
        flow = _ScipyFlow(g)
        local = lambda a, b, cap: flow.value(a, b)  # noqa: E731
    elif engine == "python":
        local = lambda a, b, cap: _UnitVertexFlow(g, a, b).run(cap)  # noqa: E731
    else:
        raise ValueError(f"unknown engine {engine!r}")
    for a, b in _pair_cover(g):
        val = local(a, b, best)
        if val < best:
            best, pair = val, (a, b)
            if threshold is not None and best < threshold:
                break
    return best, pair


def vertex_connectivity(g: SimpleGraph, engine: str = "scipy") -> int:
    """Exact vertex connectivity; n-1 for complete graphs, 0 if disconnected."""
    return _scan(g, engine)[0]


def min_vertex_cut(g: SimpleGraph) -> set[int] | None:
    """A minimum vertex cutset, or None for complete graphs (which have none)."""
    if g.n <= 1 or graphs.is_complete(g):
        return None
    if not graphs.is_connected(g):
        return set()
    kappa, pair = _scan(g, "scipy")
    if pair is None:
        s = min(g.vertices(), key=lambda v: (g.degree(v), v))
        return set(g.adj[s])
    flow = _UnitVertexFlow(g, *pair)
    flow.run()
    cut = flow.min_cut()
    assert len(cut) == kappa
    return cut


def is_k_connected(g: SimpleGraph, k: int, engine: str = "scipy") -> bool:
    """kappa(G) >= k."""
    if k <= 0:
        return True
    if g.n < k + 1:
        return False
    if k == 1:
        return graphs.is_connected(g)
    if k == 2:
        from .structure.blocks import cut_vertices
        return graphs.is_connected(g) and not cut_vertices(g)
    return _scan(g, engine, threshold=k)[0] >= k


# ---------------------------------------------------------------------------
# FS-specific

def fs_component_connectivity(inst: FSInstance, s, budget: int = EXPLICIT_BUDGET) -> int:
    """Exact connectivity of the FS component containing s."""
    comp = fs_component_of(inst, s, budget=budget)
    return vertex_connectivity(comp.graph)


@dataclass
class ExchangeVerdict:
    holds: bool
    k: int
    checked: int
    counterexample: tuple[P.Perm, tuple[int, int], int] | None = None

    def to_json(self) -> dict:
        out = {"holds": self.holds, "k": self.k, "checked": self.checked}
        if self.counterexample:
            s, e, c = self.counterexample
            out["counterexample"] = {"state": list(s), "edge": list(e), "paths": c}
        return out


def _orbit_representatives(inst: FSInstance) -> list[int]:
    """One rank per orbit of Aut(X) x Aut(Y) acting by s -> b o s o a^-1."""
    n = inst.n
    aut_x = [P.inverse(a) for a in graphs.automorphisms(inst.X)]
    aut_y = graphs.automorphisms(inst.Y)
    seen = np.zeros(inst.size, dtype=bool)
    reps = []
    allp = P.all_perms(n)
    for r in range(inst.size):
        if seen[r]:
            continue
        reps.append(r)
        s = tuple(int(x) for x in allp[r])
        images = np.array([P.compose(b, P.compose(s, ainv))
                           for ainv in aut_x for b in aut_y], dtype=np.int8)
        seen[P.ranks_of(images)] = True
    return reps


def check_local_exchangeability(inst: FSInstance, k: int, friendly_only: bool = False,
                                use_symmetry: bool = False,
                                budget: int = EXPLICIT_BUDGET) -> ExchangeVerdict:
    """Do k disjoint FS paths join every s and s o (u', v') for (u', v') in E(X)?

    A positive verdict certifies that FS(X, Y) is k-connected (given n >= k+1).
    ``friendly_only`` restricts to pairs that are themselves FS-adjacent.
    ``use_symmetry`` checks one state per orbit of Aut(X) x Aut(Y); the property
    is invariant under that action, so this is sound for any X and Y.
    """
    if inst.n < k + 1:
        raise ValueError(f"need n >= k+1, got n={inst.n}, k={k}")
    whole = fs_whole_graph(inst, budget=budget)
    g = whole.graph
    allp = P.all_perms(inst.n)
    states = _orbit_representatives(inst) if use_symmetry else range(inst.size)
    checked = 0
    for r in states:
        s = tuple(int(x) for x in allp[r])
        for i, j in inst.X.edges():
            if friendly_only and not inst.Y.has_edge(s[i - 1], s[j - 1]):
                continue
            t = P.swap(s, i, j)
            count, _ = max_disjoint_paths(g, r + 1, P.rank(t) + 1, cutoff=k)
            checked += 1
            if count < k:
                return ExchangeVerdict(False, k, checked, (s, (i, j), count))
    return ExchangeVerdict(True, k, checked)


def independent_set_linked(g: SimpleGraph, vertices: Sequence[int], k: int):
    """Does every pair of ``vertices`` (an independent set) have k disjoint paths?

    Returns None on success, else a failing (u, v, count).  Only k pivots are
    checked against the rest: a separator of fewer than k vertices between
    u and v misses some pivot, and then separates that pivot from u or v.
    """
    vs = sorted(set(vertices))
    if any(g.has_edge(a, b) for a, b in itertools.combinations(vs, 2)):
        raise ValueError("vertex set is not independent")
    flow = _ScipyFlow(g)
    pivots = vs[:k]
    for p in pivots:
        for q in vs:
            if q == p or (q in pivots and q < p):
                continue
            count = flow.value(p, q)
            if count < k:
                return p, q, count
    return None
