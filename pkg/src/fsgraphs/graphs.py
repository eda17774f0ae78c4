"""Simple undirected graphs on vertices 1..n and the named families.

A graph is immutable once built.  Adjacency is kept twice: as frozensets for
iteration and as integer bit rows for fast neighbourhood intersection.
"""

from __future__ import annotations

import itertools
from collections import deque
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

DEFAULT_VERTEX_LIMIT = 64

FAMILIES = (
    "complete", "star", "star_plus", "path", "cycle", "theta0",
    "starcle", "grid", "gnp", "empty",
)


class GraphError(ValueError):
    """Invalid graph, family parameter or edge-list input."""


class SimpleGraph:
    """Undirected simple graph with vertex set {1, ..., n}."""

    __slots__ = ("n", "adj", "rows", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 limit: int | None = DEFAULT_VERTEX_LIMIT):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        if limit is not None and n > limit:
            raise GraphError(f"vertex count {n} exceeds limit {limit}")
        nbrs: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge ({u},{v}) outside 1..{n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in nbrs)
        self.rows = tuple(sum(1 << w for w in s) for s in nbrs)
        self._edges = None

    # basic queries -------------------------------------------------------
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with u < v."""
        if self._edges is None:
            self._edges = [(u, v) for u in range(1, self.n + 1)
                           for v in sorted(self.adj[u]) if u < v]
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges())

    def degrees(self) -> list[int]:
        return [len(self.adj[v]) for v in self.vertices()]

    def adjacency_matrix(self) -> np.ndarray:
        """Boolean (n+1)x(n+1) matrix; row/column 0 unused."""
        a = np.zeros((self.n + 1, self.n + 1), dtype=bool)
        for u, v in self.edges():
            a[u, v] = a[v, u] = True
        return a

    def validate(self) -> None:
        """Check symmetry, loop-freeness and label range."""
        for v in self.vertices():
            if v in self.adj[v]:
                raise GraphError(f"self-loop at {v}")
            for w in self.adj[v]:
                if not 1 <= w <= self.n:
                    raise GraphError(f"neighbour {w} of {v} out of range")
                if v not in self.adj[w]:
                    raise GraphError(f"asymmetric adjacency {v}->{w}")
            if self.rows[v] != sum(1 << w for w in self.adj[v]):
                raise GraphError(f"bit row of {v} out of sync")

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SimpleGraph) and self.n == other.n
                and self.adj == other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# families

def complete(n: int) -> SimpleGraph:
    return SimpleGraph(n, itertools.combinations(range(1, n + 1), 2))


def empty(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def star(n: int) -> SimpleGraph:
    """Star with centre n."""
    return SimpleGraph(n, ((i, n) for i in range(1, n)))


def star_plus(n: int) -> SimpleGraph:
    """Star with centre n plus the edge (1, 2)."""
    if n < 3:
        raise GraphError("star_plus needs n >= 3")
    return SimpleGraph(n, [(i, n) for i in range(1, n)] + [(1, 2)])


def path(n: int) -> SimpleGraph:
    return SimpleGraph(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return SimpleGraph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def theta0() -> SimpleGraph:
    """The 7-vertex theta graph: hubs 1 and 3 joined by paths of lengths 2, 3, 3."""
    return SimpleGraph(7, [(1, 2), (2, 3),
                           (1, 5), (5, 4), (4, 3),
                           (1, 6), (6, 7), (7, 3)])


def check_starcle_tuple(n: int, diagonals: Sequence[int]) -> None:
    if n < 4:
        raise GraphError("starcle needs n >= 4")
    if len(diagonals) > n - 3:
        raise GraphError(f"diagonal tuple longer than n-3={n - 3}")
    for x in diagonals:
        if not 1 < x < n - 1:
            raise GraphError(f"diagonal entry {x} not in (1, {n - 1})")
    if any(a >= b for a, b in zip(diagonals, diagonals[1:])):
        raise GraphError("diagonal tuple must be strictly increasing")


def starcle(n: int, diagonals: Sequence[int] = ()) -> SimpleGraph:
    """Cycle 1..n with extra chords (x, n) for each diagonal entry x."""
    diagonals = tuple(diagonals)
    check_starcle_tuple(n, diagonals)
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    edges += [(x, n) for x in diagonals]
    return SimpleGraph(n, edges)


def grid(rows: int, cols: int) -> SimpleGraph:
    """rows x cols grid, vertices numbered row-major from 1."""
    if rows < 1 or cols < 1:
        raise GraphError("grid dimensions must be positive")
    label = lambda r, c: r * cols + c + 1  # noqa: E731
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((label(r, c), label(r, c + 1)))
            if r + 1 < rows:
                edges.append((label(r, c), label(r + 1, c)))
    return SimpleGraph(rows * cols, edges)


def gnp(n: int, p: float, seed: int) -> SimpleGraph:
    """Erdos-Renyi G(n, p).

    Edge (u, v) with u < v, taken in lexicographic order, gets the uniform
    variate with the same index from a Philox stream keyed by ``seed``.  The
    decision for an edge therefore depends only on (seed, edge index), and
    the same seed gives nested edge sets as p grows.
    """
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"probability {p} not in [0, 1]")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    rng = np.random.Generator(np.random.Philox(key=seed & (2**128 - 1)))
    u = rng.random(len(pairs))
    return SimpleGraph(n, (e for e, x in zip(pairs, u) if x < p))


def build_family(tag: str, *params) -> SimpleGraph:
    """Build a named family member; ``params`` as in the DSL."""
    try:
        if tag == "theta0":
            if params and params != (7,):
                raise GraphError("theta0 is fixed at n=7")
            return theta0()
        if tag == "grid":
            return grid(*params)
        if tag == "gnp":
            n, p, seed = params
            return gnp(n, p, seed)
        if tag == "starcle":
            n, diag = params[0], (params[1] if len(params) > 1 else ())
            return starcle(n, diag)
        builder = {"complete": complete, "star": star, "star_plus": star_plus,
                   "path": path, "cycle": cycle, "empty": empty}[tag]
    except KeyError:
        raise GraphError(f"unknown family {tag!r}") from None
    except TypeError as exc:
        raise GraphError(f"bad parameters for {tag}: {exc}") from None
    (n,) = params
    if n < 1:
        raise GraphError(f"{tag} needs n >= 1")
    return builder(n)


def parse_family(text: str) -> SimpleGraph:
    """Parse the family DSL: ``star:7``, ``starcle:9:3,5``, ``grid:4x4``,
    ``gnp:8:0.5:12345``, ``theta0``."""
    parts = text.strip().split(":")
    tag = parts[0].replace("-", "_")
    args = parts[1:]
    try:
        if tag == "theta0":
            return build_family(tag, *(int(a) for a in args))
        if tag == "grid":
            if len(args) != 1 or "x" not in args[0]:
                raise GraphError("grid expects grid:RxC")
            r, c = args[0].split("x")
            return grid(int(r), int(c))
        if tag == "gnp":
            if len(args) != 3:
                raise GraphError("gnp expects gnp:n:p:seed")
            return gnp(int(args[0]), float(args[1]), int(args[2]))
        if tag == "starcle":
            if not 1 <= len(args) <= 2:
                raise GraphError("starcle expects starcle:n[:x1,x2,...]")
            diag = tuple(int(x) for x in args[1].split(",") if x) if len(args) == 2 else ()
            return starcle(int(args[0]), diag)
        if len(args) != 1:
            raise GraphError(f"{tag} expects {tag}:n")
        return build_family(tag, int(args[0]))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"cannot parse graph spec {text!r}: {exc}") from None


def parse_edge_list(text: str, limit: int | None = DEFAULT_VERTEX_LIMIT) -> SimpleGraph:
    """Edge-list format: first line n, then one ``u v`` per line, u < v."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n = int(lines[0])
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    seen = set()
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge line must have two vertices: {e}")
        u, v = e
        if not 1 <= u < v <= n:
            raise GraphError(f"edge ({u},{v}) must satisfy 1 <= u < v <= {n}")
        if e in seen:
            raise GraphError(f"duplicate edge ({u},{v})")
        seen.add(e)
    return SimpleGraph(n, edges, limit=limit)


def format_edge_list(g: SimpleGraph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def load_graph(arg: str) -> SimpleGraph:
    """A family DSL string, or ``@path`` to an edge-list file."""
    if arg.startswith("@"):
        try:
            return parse_edge_list(Path(arg[1:]).read_text())
        except OSError as exc:
            raise GraphError(f"cannot read {arg[1:]}: {exc}") from None
    return parse_family(arg)


# ---------------------------------------------------------------------------
# queries

def min_degree(g: SimpleGraph) -> int:
    return min(g.degrees()) if g.n else 0


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * (g.n + 1)
    out = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: SimpleGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def component_of(g: SimpleGraph, v: int) -> list[int]:
    for comp in components(g):
        if v in comp:
            return comp
    raise GraphError(f"vertex {v} not in graph")


def induced_subgraph(g: SimpleGraph, keep: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
    """Induced subgraph relabelled to 1..|keep| in increasing order.

    Returns the subgraph and ``label`` with ``label[i]`` the original vertex of
    new vertex i (index 0 unused).
    """
    kept = sorted(set(keep))
    for v in kept:
        if not 1 <= v <= g.n:
            raise GraphError(f"vertex {v} not in graph")
    new = {v: i for i, v in enumerate(kept, 1)}
    edges = [(new[u], new[v]) for u, v in g.edges() if u in new and v in new]
    return SimpleGraph(len(kept), edges, limit=None), [0] + kept


def remove_vertices(g: SimpleGraph, drop: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
    drop = set(drop)
    return induced_subgraph(g, (v for v in g.vertices() if v not in drop))


def is_bipartite(g: SimpleGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """2-colouring (A, B) with the least vertex of each component in A, or None."""
    color = [-1] * (g.n + 1)
    for s in g.vertices():
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    a = frozenset(v for v in g.vertices() if color[v] == 0)
    return a, frozenset(g.vertices()) - a


def is_complete(g: SimpleGraph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_cycle(g: SimpleGraph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def relabel(g: SimpleGraph, mapping: dict[int, int]) -> SimpleGraph:
    """Graph with vertex v renamed mapping[v]; mapping must be a bijection of 1..n."""
    return SimpleGraph(g.n, ((mapping[u], mapping[v]) for u, v in g.edges()), limit=None)


def find_isomorphism(g: SimpleGraph, h: SimpleGraph) -> dict[int, int] | None:
    """Backtracking search for an isomorphism g -> h (vertex map), or None."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    order = sorted(g.vertices(), key=lambda v: -g.degree(v))
    # visit vertices in BFS-ish order so constraints bite early
    placed: list[int] = []
    for v in order:
        if v not in placed:
            queue = deque([v])
            placed.append(v)
            while queue:
                x = queue.popleft()
                for w in sorted(g.adj[x], key=lambda u: -g.degree(u)):
                    if w not in placed:
                        placed.append(w)
                        queue.append(w)
    fwd: dict[int, int] = {}
    used = [False] * (h.n + 1)

    def extend(i: int) -> bool:
        if i == len(placed):
            return True
        v = placed[i]
        for w in h.vertices():
            if used[w] or h.degree(w) != g.degree(v):
                continue
            if all(h.has_edge(w, fwd[x]) == g.has_edge(v, x) for x in placed[:i]):
                fwd[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                del fwd[v]
        return False

    return dict(fwd) if extend(0) else None


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    return find_isomorphism(g, h) is not None


def automorphisms(g: SimpleGraph) -> list[tuple[int, ...]]:
    """All automorphisms as image tuples (a[0] = image of vertex 1)."""
    out = []
    for perm in itertools.permutations(g.vertices()):
        if all(g.has_edge(perm[u - 1], perm[v - 1]) for u, v in g.edges()):
            out.append(perm)
    return out


def all_labeled_graphs(n: int) -> Iterable[SimpleGraph]:
    """Every labelled simple graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def random_connected_graph(n: int, rng: np.random.Generator, p: float | None = None) -> SimpleGraph:
    """Rejection-sample a connected G(n, p); p drawn uniformly when not given."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    while True:
        q = rng.uniform(0.2, 0.9) if p is None else p
        keep = rng.random(len(pairs)) < q
        g = SimpleGraph(n, (e for e, k in zip(pairs, keep) if k))
        if is_connected(g):
            return g
