"""Routing between states of FS(X, Star_n) block by block.

Person n (the star centre) is the only one who can move, like the blank of a
sliding puzzle.  Both endpoints are first normalised so person n stands on
vertex n.  Then, for each block B in post-order of the arrow depiction,
person n walks down a spanning-tree path to in(B), the people on
B - in(B) are rearranged by a breadth-first search inside FS(B, Star_|B|), and
person n walks back up the same path, which restores everything outside B.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .. import graphs
from .. import perms as P
from ..fs import FSInstance, fs_shortest_path, star_instance
from ..graphs import SimpleGraph
from .blocks import StructureError, arrow_depiction

Swap = tuple[int, int]
BLOCK_BFS_LIMIT = 10


class IllegalSwap(ValueError):
    pass


def bfs_tree(x: SimpleGraph, root: int) -> dict[int, int]:
    """Parent map of the BFS spanning tree rooted at ``root`` (least-id first)."""
    parent = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(x.adj[v]):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return parent


def _tree_path(parent: dict[int, int], v: int) -> list[int]:
    """Vertices from v up to the tree root."""
    out = [v]
    while parent[out[-1]]:
        out.append(parent[out[-1]])
    return out


def _walk(state: list[int], route: Sequence[int], swaps: list[Swap]) -> None:
    """Move the person standing on route[0] along route, recording swaps."""
    for a, b in zip(route, route[1:]):
        state[a - 1], state[b - 1] = state[b - 1], state[a - 1]
        swaps.append((min(a, b), max(a, b)))


def replay(x: SimpleGraph, s, swaps: Sequence[Swap], centre: int | None = None) -> P.Perm:
    """Apply swaps to s, checking each is an (X, Star_n)-friendly swap."""
    state = list(P.check(s))
    centre = len(state) if centre is None else centre
    for i, j in swaps:
        if not x.has_edge(i, j):
            raise IllegalSwap(f"({i},{j}) is not an edge of X")
        if centre not in (state[i - 1], state[j - 1]):
            raise IllegalSwap(f"swap ({i},{j}) does not involve person {centre}")
        state[i - 1], state[j - 1] = state[j - 1], state[i - 1]
    return tuple(state)


def _route_bfs(x: SimpleGraph, s: P.Perm, t: P.Perm) -> list[Swap] | None:
    return fs_shortest_path(star_instance(x), s, t)


def route_in_star_fs(x: SimpleGraph, s, t, method: str = "blocks") -> list[Swap] | None:
    """Friendly swaps turning s into t in FS(X, Star_n), or None if impossible.

    ``method="bfs"`` searches the whole state space instead (small n only).
    """
    s, t = P.check(s), P.check(t)
    n = x.n
    if len(s) != n or len(t) != n:
        raise ValueError("state length does not match X")
    if not graphs.is_connected(x):
        raise StructureError("routing needs connected X")
    if s == t:
        return []
    if method == "bfs":
        return _route_bfs(x, s, t)
    if method != "blocks":
        raise ValueError(f"unknown method {method!r}")

    tree = bfs_tree(x, n)
    head: list[Swap] = []
    cur = list(s)
    _walk(cur, _tree_path(tree, cur.index(n) + 1), head)
    tail: list[Swap] = []
    goal = list(t)
    _walk(goal, _tree_path(tree, goal.index(n) + 1), tail)

    arrows = arrow_depiction(x, root=n)
    blocks = arrows.blocks
    for b, verts in enumerate(blocks):
        c = arrows.in_vertex(b)
        if {cur[v - 1] for v in verts if v != c} != {goal[v - 1] for v in verts if v != c}:
            return None

    body: list[Swap] = []
    for b in arrows.postorder():
        verts = blocks[b]
        c = arrows.in_vertex(b)
        if all(cur[v - 1] == goal[v - 1] for v in verts if v != c):
            continue
        if len(verts) > BLOCK_BFS_LIMIT:
            raise StructureError(f"block of size {len(verts)} exceeds search limit")
        down = _tree_path(tree, c)[::-1]
        _walk(cur, down, body)
        moves = _within_block(x, verts, cur, goal, n)
        if moves is None:
            return None
        for i, j in moves:
            cur[i - 1], cur[j - 1] = cur[j - 1], cur[i - 1]
        body.extend(moves)
        _walk(cur, down[::-1], body)

    if cur != goal:
        raise AssertionError("block routing did not reach the normalised target")
    seq = head + body + tail[::-1]
    if replay(x, s, seq) != t:
        raise AssertionError("swap sequence does not replay to the target")
    return seq


def _within_block(x: SimpleGraph, verts: Sequence[int], cur: list[int],
                  goal: list[int], centre: int) -> list[Swap] | None:
    """Rearrange the people on block ``verts`` to match ``goal`` off the centre."""
    bg, label = graphs.induced_subgraph(x, verts)
    m = bg.n
    people = sorted(cur[v - 1] for v in verts if cur[v - 1] != centre)
    local = {p: i for i, p in enumerate(people, 1)}
    local[centre] = m
    c_pos = next(v for v in verts if cur[v - 1] == centre)
    start = tuple(local[cur[v - 1]] for v in label[1:])
    target = tuple(local[goal[v - 1]] if v != c_pos else m for v in label[1:])
    moves = fs_shortest_path(FSInstance(bg, graphs.star(m)), start, target)
    if moves is None:
        return None
    return [(label[i], label[j]) for i, j in moves]
