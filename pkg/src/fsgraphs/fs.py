"""The friends-and-strangers graph FS(X, Y) as an implicit graph on S_n.

States are permutations sigma with sigma[i'-1] = person standing on position
i'.  Two states are adjacent when they differ by swapping the people on the
ends of an X-edge, provided those two people are adjacent in Y.

Whole-space work runs on dense rank-indexed numpy tables (see ``perms``).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import graphs
from . import perms as P
from .graphs import SimpleGraph

ENUMERATION_CAP = 10
EXPLICIT_BUDGET = 40320
# above this many candidate arcs the partition switches from a sparse
# connected-components pass to per-component level BFS
ARC_BUDGET = 20_000_000


class BudgetError(RuntimeError):
    """Instance too large for the requested exhaustive operation."""


@dataclass(frozen=True)
class FSInstance:
    X: SimpleGraph
    Y: SimpleGraph

    def __post_init__(self):
        if self.X.n != self.Y.n:
            raise ValueError(f"|V(X)|={self.X.n} but |V(Y)|={self.Y.n}")

    @property
    def n(self) -> int:
        return self.X.n

    @property
    def size(self) -> int:
        return math.factorial(self.n)


def star_instance(x: SimpleGraph) -> FSInstance:
    return FSInstance(x, graphs.star(x.n))


@dataclass
class ComponentSummary:
    id: int
    size: int
    representative: P.Perm
    types: dict[int, int] | None = None

    def to_json(self) -> dict:
        out = {"size": self.size, "representative": list(self.representative)}
        if self.types is not None:
            out["types"] = {str(k): v for k, v in sorted(self.types.items())}
        return out


@dataclass
class ComponentGraph:
    """Explicit induced subgraph of FS(X, Y) on one component.

    Vertex i of ``graph`` (1-based) is the state of rank ``ranks[i - 1]``;
    ranks are increasing.
    """
    n: int
    ranks: np.ndarray
    graph: SimpleGraph = field(repr=False)

    def state(self, i: int) -> P.Perm:
        return tuple(int(x) for x in P.all_perms(self.n)[self.ranks[i - 1]])

    def index_of(self, s) -> int:
        r = P.rank(s)
        i = int(np.searchsorted(self.ranks, r))
        if i >= len(self.ranks) or self.ranks[i] != r:
            raise KeyError(f"{P.fmt(s)} not in this component")
        return i + 1

    def __len__(self) -> int:
        return len(self.ranks)


def _require_cap(inst: FSInstance, cap: int) -> None:
    if inst.n > cap:
        raise BudgetError(f"n={inst.n} exceeds enumeration cap {cap}")


# ---------------------------------------------------------------------------
# single-state operations

def fs_neighbors(inst: FSInstance, s) -> list[tuple[tuple[int, int], P.Perm]]:
    """(X-edge, neighbour) for every (X, Y)-friendly swap available at s."""
    s = P.check(s)
    if len(s) != inst.n:
        raise ValueError(f"state has length {len(s)}, expected {inst.n}")
    out = []
    for i, j in inst.X.edges():
        if inst.Y.has_edge(s[i - 1], s[j - 1]):
            out.append(((i, j), P.swap(s, i, j)))
    return out


def fs_degree(inst: FSInstance, s) -> int:
    return sum(1 for i, j in inst.X.edges() if inst.Y.has_edge(s[i - 1], s[j - 1]))


def is_friendly(inst: FSInstance, s, i: int, j: int) -> bool:
    return inst.X.has_edge(i, j) and inst.Y.has_edge(s[i - 1], s[j - 1])


def fs_shortest_path(inst: FSInstance, s, t) -> list[tuple[int, int]] | None:
    """Shortest sequence of X-edges whose friendly swaps turn s into t, or None."""
    s, t = P.check(s), P.check(t)
    if s == t:
        return []
    parent: dict[P.Perm, tuple[P.Perm, tuple[int, int]] | None] = {s: None}
    queue = deque([s])
    edges = inst.X.edges()
    yadj = inst.Y.rows
    while queue:
        cur = queue.popleft()
        for i, j in edges:
            a, b = cur[i - 1], cur[j - 1]
            if not (yadj[a] >> b) & 1:
                continue
            nxt = P.swap(cur, i, j)
            if nxt in parent:
                continue
            parent[nxt] = (cur, (i, j))
            if nxt == t:
                seq = []
                while parent[nxt] is not None:
                    nxt, e = parent[nxt]
                    seq.append(e)
                return seq[::-1]
            queue.append(nxt)
    return None


# ---------------------------------------------------------------------------
# dense kernels

class _Kernel:
    """Vectorised neighbour generation over rank arrays."""

    def __init__(self, inst: FSInstance):
        n = inst.n
        self.n = n
        self.perms = P.all_perms(n)
        self.keys = P.all_keys(n)
        w = P.place_weights(n)
        self.yadj = inst.Y.adjacency_matrix()
        # (i0, j0, key shift per unit of (b - a))
        self.edges = [(i - 1, j - 1, int(w[i - 1] - w[j - 1])) for i, j in inst.X.edges()]

    def neighbours(self, ranks: np.ndarray):
        """Yield (friendly mask, neighbour ranks) per X-edge, aligned with ranks."""
        rows = self.perms[ranks]
        base = self.keys[ranks]
        for i0, j0, shift in self.edges:
            a = rows[:, i0]
            b = rows[:, j0]
            mask = self.yadj[a, b]
            nkey = base + (b.astype(np.int64) - a) * shift
            yield mask, np.searchsorted(self.keys, nkey)

    def degrees(self, ranks: np.ndarray) -> np.ndarray:
        rows = self.perms[ranks]
        deg = np.zeros(len(ranks), dtype=np.int32)
        for i0, j0, _ in self.edges:
            deg += self.yadj[rows[:, i0], rows[:, j0]]
        return deg

    def bfs(self, start: int, visited: np.ndarray) -> np.ndarray:
        """Level-synchronous BFS from one rank; marks and returns the component."""
        visited[start] = True
        frontier = np.array([start], dtype=np.int64)
        found = [frontier]
        while len(frontier):
            nxt = []
            for mask, nbr in self.neighbours(frontier):
                cand = nbr[mask]
                cand = cand[~visited[cand]]
                if len(cand):
                    cand = np.unique(cand)
                    visited[cand] = True
                    nxt.append(cand)
            frontier = np.concatenate(nxt) if nxt else np.empty(0, dtype=np.int64)
            found.append(frontier)
        return np.sort(np.concatenate(found))


def _chunks(total: int, size: int = 1 << 20):
    for lo in range(0, total, size):
        yield np.arange(lo, min(total, lo + size), dtype=np.int64)


def component_labels(inst: FSInstance, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """Component label per rank; labels are numbered by least member rank."""
    _require_cap(inst, cap)
    total = inst.size
    kern = _Kernel(inst)
    if total * max(1, len(kern.edges)) <= ARC_BUDGET:
        ranks = np.arange(total, dtype=np.int64)
        src, dst = [], []
        for mask, nbr in kern.neighbours(ranks):
            src.append(ranks[mask])
            dst.append(nbr[mask])
        src = np.concatenate(src) if src else np.empty(0, dtype=np.int64)
        dst = np.concatenate(dst) if dst else np.empty(0, dtype=np.int64)
        adj = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)),
                         shape=(total, total)).tocsr()
        _, raw = connected_components(adj, directed=False)
        # relabel so that labels increase with each component's least rank
        _, first = np.unique(raw, return_index=True)
        order = np.argsort(first)
        relabel = np.empty_like(order)
        relabel[order] = np.arange(len(order))
        return relabel[raw]

    labels = np.full(total, -1, dtype=np.int64)
    visited = np.zeros(total, dtype=bool)
    for chunk in _chunks(total):
        isolated = chunk[kern.degrees(chunk) == 0]
        visited[isolated] = True
    next_label = 0
    for r in range(total):
        if labels[r] != -1:
            continue
        if visited[r]:
            labels[r] = next_label
        else:
            labels[kern.bfs(r, visited)] = next_label
        next_label += 1
    return labels


def fs_components(inst: FSInstance, with_types: bool = False,
                  cap: int = ENUMERATION_CAP) -> list[ComponentSummary]:
    """Partition all n! states into components, ordered by representative rank.

    With ``with_types`` each summary carries the count of states per position
    of person n (meaningful for star instances).
    """
    labels = component_labels(inst, cap)
    sizes = np.bincount(labels)
    _, first = np.unique(labels, return_index=True)
    allp = P.all_perms(inst.n)
    type_counts = None
    if with_types:
        where_n = np.argmax(allp == inst.n, axis=1) + 1
        type_counts = np.zeros((len(sizes), inst.n + 1), dtype=np.int64)
        np.add.at(type_counts, (labels, where_n), 1)
    out = []
    for cid, (size, rep) in enumerate(zip(sizes, first)):
        types = None
        if type_counts is not None:
            types = {v: int(type_counts[cid, v]) for v in range(1, inst.n + 1)
                     if type_counts[cid, v]}
        out.append(ComponentSummary(cid, int(size), tuple(int(x) for x in allp[rep]), types))
    return out


def fs_component_ranks(inst: FSInstance, s, cap: int = ENUMERATION_CAP) -> np.ndarray:
    _require_cap(inst, cap)
    kern = _Kernel(inst)
    visited = np.zeros(inst.size, dtype=bool)
    return kern.bfs(P.rank(P.check(s)), visited)


def explicit_graph(inst: FSInstance, ranks: np.ndarray) -> SimpleGraph:
    """Induced FS subgraph on a sorted, neighbour-closed set of ranks."""
    kern = _Kernel(inst)
    local = np.arange(1, len(ranks) + 1)
    nbrs: list[set[int]] = [set() for _ in range(len(ranks) + 1)]
    for mask, nbr in kern.neighbours(ranks):
        src = local[mask]
        pos = np.searchsorted(ranks, nbr[mask])
        if len(pos) and (pos.max() >= len(ranks) or (ranks[pos] != nbr[mask]).any()):
            raise ValueError("rank set is not closed under friendly swaps")
        for u, v in zip(src.tolist(), (pos + 1).tolist()):
            nbrs[u].add(v)
    return SimpleGraph(len(ranks), ((u, v) for u in range(1, len(nbrs))
                                    for v in nbrs[u] if u < v), limit=None)


def fs_component_of(inst: FSInstance, s, budget: int = EXPLICIT_BUDGET,
                    cap: int = ENUMERATION_CAP) -> ComponentGraph:
    """The component containing s as an explicit graph, vertices numbered by rank."""
    ranks = fs_component_ranks(inst, s, cap)
    if len(ranks) > budget:
        raise BudgetError(f"component has {len(ranks)} states, budget {budget}")
    return ComponentGraph(inst.n, ranks, explicit_graph(inst, ranks))


def fs_whole_graph(inst: FSInstance, budget: int = EXPLICIT_BUDGET,
                   cap: int = ENUMERATION_CAP) -> ComponentGraph:
    """All n! states as one explicit (possibly disconnected) graph."""
    _require_cap(inst, cap)
    if inst.size > budget:
        raise BudgetError(f"{inst.size} states exceed budget {budget}")
    ranks = np.arange(inst.size, dtype=np.int64)
    return ComponentGraph(inst.n, ranks, explicit_graph(inst, ranks))


def has_isolated_vertex(inst: FSInstance, cap: int = ENUMERATION_CAP) -> P.Perm | None:
    """Least-rank state with no friendly swap, or None."""
    _require_cap(inst, cap)
    kern = _Kernel(inst)
    for chunk in _chunks(inst.size):
        hits = chunk[kern.degrees(chunk) == 0]
        if len(hits):
            return tuple(int(x) for x in kern.perms[hits[0]])
    return None


def fs_is_connected(inst: FSInstance, cap: int = ENUMERATION_CAP) -> bool:
    _require_cap(inst, cap)
    return len(fs_component_ranks(inst, P.identity(inst.n), cap)) == inst.size


def min_fs_degree(inst: FSInstance, cap: int = ENUMERATION_CAP) -> int:
    _require_cap(inst, cap)
    kern = _Kernel(inst)
    return int(min(kern.degrees(c).min() for c in _chunks(inst.size)))


def components_report(inst: FSInstance, comps: list[ComponentSummary]) -> dict:
    return {"n": inst.n, "componentCount": len(comps),
            "components": [c.to_json() for c in comps]}
