"""Blocks, cut vertices, and the rooted block tree ("arrow depiction")."""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import graphs
from ..graphs import SimpleGraph


class StructureError(ValueError):
    pass


def _biconnected(g: SimpleGraph) -> tuple[list[frozenset[int]], set[int]]:
    """Iterative Hopcroft-Tarjan: blocks (edge-stack groups) and cut vertices.

    Isolated vertices produce no block.
    """
    disc = [0] * (g.n + 1)
    low = [0] * (g.n + 1)
    nbrs = [sorted(a) for a in g.adj]
    counter = 1
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    for root in g.vertices():
        if disc[root]:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        # frames: (vertex, parent, next neighbour index)
        stack = [[root, 0, 0]]
        while stack:
            frame = stack[-1]
            v, parent, idx = frame
            if idx < len(nbrs[v]):
                frame[2] += 1
                w = nbrs[v][idx]
                if not disc[w]:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    stack.append([w, v, 0])
                    if v == root:
                        root_children += 1
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                if u != root:
                    cuts.add(u)
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (u, v):
                        break
                blocks.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)
    return blocks, cuts


def cut_vertices(g: SimpleGraph) -> set[int]:
    return _biconnected(g)[1]


def is_biconnected(g: SimpleGraph) -> bool:
    """Connected with no cut vertex and at least two vertices (so P2 counts)."""
    return g.n >= 2 and graphs.is_connected(g) and not cut_vertices(g)


@dataclass
class BlockDecomposition:
    """Blocks as sorted vertex tuples (ordered by least vertex) and cut vertices.

    ``tree`` is the block-cut tree: block index -> cut vertices it contains,
    and ``cut_blocks`` the reverse map.
    """
    graph: SimpleGraph = field(repr=False)
    blocks: list[tuple[int, ...]]
    cut_vertices: frozenset[int]
    tree: dict[int, list[int]]
    cut_blocks: dict[int, list[int]]

    def block_graph(self, b: int) -> tuple[SimpleGraph, list[int]]:
        """Block b as its own graph, relabelled 1..|B| in increasing order."""
        return graphs.induced_subgraph(self.graph, self.blocks[b])

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, blk in enumerate(self.blocks) if v in blk]


def block_decomposition(g: SimpleGraph) -> BlockDecomposition:
    if g.n < 2:
        raise StructureError("block decomposition needs at least two vertices")
    if not graphs.is_connected(g):
        raise StructureError("graph is disconnected; decompose each component")
    raw, cuts = _biconnected(g)
    blocks = sorted(tuple(sorted(b)) for b in raw)
    tree = {i: sorted(v for v in blk if v in cuts) for i, blk in enumerate(blocks)}
    cut_blocks = {c: [i for i, blk in enumerate(blocks) if c in blk] for c in sorted(cuts)}
    return BlockDecomposition(g, blocks, frozenset(cuts), tree, cut_blocks)


# ---------------------------------------------------------------------------
# arrow depiction

@dataclass
class ArrowDepiction:
    """Block-cut tree oriented away from ``root``.

    Nodes are ("root", r), ("block", i) and ("cut", c).  The root vertex
    stands in for itself when it is a cut vertex.
    """
    decomposition: BlockDecomposition
    root: int
    children: dict[tuple[str, int], list[tuple[str, int]]]
    parent: dict[tuple[str, int], tuple[str, int]]
    entry: dict[int, int]

    @property
    def blocks(self) -> list[tuple[int, ...]]:
        return self.decomposition.blocks

    def in_vertex(self, b: int) -> int:
        """The root if it lies in block b, else the cut vertex every path from the root enters b by."""
        return self.entry[b]

    def node_of(self, v: int) -> tuple[str, int]:
        """Tree node standing for vertex v: itself if root/cut vertex, else its block."""
        if v == self.root:
            return ("root", v)
        if v in self.decomposition.cut_vertices:
            return ("cut", v)
        (b,) = self.decomposition.blocks_of(v)
        return ("block", b)

    def _ancestors(self, node) -> list[tuple[str, int]]:
        out = []
        while node in self.parent:
            node = self.parent[node]
            out.append(node)
        return out

    def before(self, v: int, b: int) -> bool:
        """A directed path of positive length runs from v's node to block b."""
        return self.node_of(v) in self._ancestors(("block", b))

    def after(self, v: int, b: int) -> bool:
        return ("block", b) in self._ancestors(self.node_of(v))

    def parallel(self, v: int, b: int) -> bool:
        node = self.node_of(v)
        return node != ("block", b) and not self.before(v, b) and not self.after(v, b)

    def out_vertex(self, v: int, b: int) -> int:
        """Cut vertex of block b that every path from b to v (outside b) leaves by."""
        if v in self.blocks[b]:
            raise StructureError(f"vertex {v} lies in block {b}")
        target = self.node_of(v)
        chain = [target] + self._ancestors(target)
        if ("block", b) in chain:
            # v hangs below b: the child cut vertex on the way down
            idx = chain.index(("block", b))
            return chain[idx - 1][1]
        return self.entry[b]

    def sinks(self) -> list[int]:
        return [b for b in range(len(self.blocks)) if not self.children.get(("block", b))]

    def postorder(self) -> list[int]:
        """Blocks ordered so each appears after all blocks below it."""
        order = []

        def visit(node):
            for ch in self.children.get(node, []):
                visit(ch)
            if node[0] == "block":
                order.append(node[1])

        visit(("root", self.root))
        return order

    def to_json(self) -> dict:
        def name(node):
            kind, x = node
            return f"B{x}" if kind == "block" else str(x)
        return {
            "root": self.root,
            "arrows": [[name(p), name(c)] for p in sorted(self.children)
                       for c in self.children[p]],
            "in": {f"B{b}": self.entry[b] for b in sorted(self.entry)},
        }


def arrow_depiction(g: SimpleGraph, root: int | None = None) -> ArrowDepiction:
    """Orient the block-cut tree of connected g away from ``root`` (default n)."""
    root = g.n if root is None else root
    dec = block_decomposition(g)
    children: dict[tuple[str, int], list[tuple[str, int]]] = {}
    parent: dict[tuple[str, int], tuple[str, int]] = {}
    entry: dict[int, int] = {}
    start = ("root", root)
    stack = [(start, root, None)]
    seen_blocks: set[int] = set()
    while stack:
        node, vertex, from_block = stack.pop()
        kids = []
        for b in dec.blocks_of(vertex):
            if b == from_block or b in seen_blocks:
                continue
            seen_blocks.add(b)
            entry[b] = vertex
            child = ("block", b)
            kids.append(child)
            parent[child] = node
            cuts = [c for c in dec.tree[b] if c != vertex]
            grand = []
            for c in cuts:
                cnode = ("cut", c)
                grand.append(cnode)
                parent[cnode] = child
                stack.append((cnode, c, b))
            children[child] = grand
        children[node] = kids
    return ArrowDepiction(dec, root, children, parent, entry)
