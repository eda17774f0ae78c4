"""Wilson classification of biconnected blocks and FS(X, Star_n) component sizes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .. import graphs
from ..graphs import SimpleGraph
from .blocks import StructureError, block_decomposition, is_biconnected


class WilsonTag(str, Enum):
    THETA0 = "Theta0"
    CYCLE_OR_P2 = "CycleOrP2"
    BIPARTITE_OTHER = "BipartiteOther"
    NONBIPARTITE_OTHER = "NonbipartiteOther"


@dataclass(frozen=True)
class WilsonClass:
    tag: WilsonTag
    value: int


_THETA0_DEGREES = [2, 2, 2, 2, 2, 3, 3]


def is_theta0(g: SimpleGraph) -> bool:
    if g.n != 7 or g.m != 8 or sorted(g.degrees()) != _THETA0_DEGREES:
        return False
    return graphs.is_isomorphic(g, graphs.theta0())


def is_p2(g: SimpleGraph) -> bool:
    return g.n == 2 and g.m == 1


def classify_block(b: SimpleGraph) -> WilsonClass:
    if not is_biconnected(b):
        raise StructureError("classify_block needs a biconnected graph")
    k = b.n
    if is_theta0(b):
        return WilsonClass(WilsonTag.THETA0, 120)
    if graphs.is_cycle(b) or is_p2(b):
        return WilsonClass(WilsonTag.CYCLE_OR_P2, k - 1)
    if graphs.is_bipartite(b) is not None:
        return WilsonClass(WilsonTag.BIPARTITE_OTHER, math.factorial(k - 1) // 2)
    return WilsonClass(WilsonTag.NONBIPARTITE_OTHER, math.factorial(k - 1))


@dataclass
class WilsonReport:
    """Which of the four Wilson hypotheses hold; ``failed`` lists the violated ones."""
    biconnected: bool
    not_bipartite: bool
    not_cycle: bool
    not_theta0: bool
    failed: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        return {"wilsonian": not self.failed, "biconnected": self.biconnected,
                "not_bipartite": self.not_bipartite, "not_cycle": self.not_cycle,
                "not_theta0": self.not_theta0, "failed": self.failed}


def is_wilsonian(g: SimpleGraph) -> WilsonReport:
    """Biconnected, not bipartite, not C_n (n >= 4), not theta0.  Truthy iff all hold."""
    if g.n < 3:
        raise StructureError("Wilson conditions are stated for n >= 3")
    checks = {
        "biconnected": is_biconnected(g),
        "not_bipartite": graphs.is_bipartite(g) is None,
        "not_cycle": not (g.n >= 4 and graphs.is_cycle(g)),
        "not_theta0": not is_theta0(g),
    }
    return WilsonReport(**checks, failed=[k for k, ok in checks.items() if not ok])


@dataclass
class SizePrediction:
    size: int
    component: list[int]
    blocks: list[tuple[tuple[int, ...], WilsonClass]]

    @property
    def order(self) -> int:
        return len(self.component)


def predict_component_size(x: SimpleGraph, anchor: int | None = None) -> SizePrediction:
    """Component size of FS(X, Star_n) for the state with person n on ``anchor``.

    For connected X the anchor is irrelevant: size = n * prod wilson(B).  For
    disconnected X only the component F of X holding the anchor matters:
    size = |F| * prod over blocks of F.
    """
    if x.n < 1:
        raise StructureError("need at least one vertex")
    anchor = x.n if anchor is None else anchor
    comp = graphs.component_of(x, anchor)
    if len(comp) == 1:
        return SizePrediction(1, comp, [])
    sub, label = graphs.induced_subgraph(x, comp)
    dec = block_decomposition(sub)
    size = len(comp)
    parts = []
    for i, blk in enumerate(dec.blocks):
        bg, _ = dec.block_graph(i)
        cls = classify_block(bg)
        size *= cls.value
        parts.append((tuple(label[v] for v in blk), cls))
    return SizePrediction(size, comp, parts)


def predicted_component_size(x: SimpleGraph, anchor: int | None = None) -> int:
    return predict_component_size(x, anchor).size
