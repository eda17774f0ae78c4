"""Hypothesis predicates, obstruction counts and end-to-end verifiers.

Predicates only ever claim the forward direction: a failed hypothesis is
reported as "hypotheses not satisfied", never as "not k-connected".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import graphs
from . import perms as P
from .connectivity import (check_local_exchangeability, independent_set_linked,
                           is_k_connected, max_disjoint_paths, vertex_connectivity)
from .fs import (EXPLICIT_BUDGET, FSInstance, component_labels, fs_component_of,
                 fs_components, fs_whole_graph, min_fs_degree, star_instance)
from .graphs import SimpleGraph
from .structure.blocks import cut_vertices, is_biconnected
from .structure.wilson import is_theta0, predict_component_size

MATRIX_TOTAL_LIMIT = 30


class HypothesisError(ValueError):
    """Inputs violate the hypotheses a check is stated under."""

    def __init__(self, report: "ConditionReport"):
        super().__init__(f"{report.theorem}: hypotheses not satisfied "
                         f"({', '.join(report.failed)})")
        self.report = report


# ---------------------------------------------------------------------------
# parity obstruction

def _bipartition(g: SimpleGraph, given=None) -> frozenset[int]:
    if given is not None:
        a = frozenset(given[0] if isinstance(given, tuple) else given)
        if any((u in a) == (v in a) for u, v in g.edges()):
            raise ValueError("supplied sides are not a bipartition")
        return a
    bip = graphs.is_bipartite(g)
    if bip is None:
        raise ValueError("graph is not bipartite")
    return bip[0]


def parity_p(x: SimpleGraph, y: SimpleGraph, s, bip_x=None, bip_y=None) -> int:
    """|s(A_X) & A_Y| + (sgn(s) + 1) / 2.

    Sides default to the computed 2-colouring with each component's least
    vertex on side A.
    """
    s = P.check(s)
    ax, ay = _bipartition(x, bip_x), _bipartition(y, bip_y)
    hit = sum(1 for i in ax if s[i - 1] in ay)
    return hit + (P.sign(s) + 1) // 2


def parity_table(inst: FSInstance, bip_x=None, bip_y=None) -> np.ndarray:
    """parity_p for every state, indexed by rank."""
    n = inst.n
    ax = np.array(sorted(_bipartition(inst.X, bip_x)), dtype=np.int64) - 1
    ay = np.zeros(n + 1, dtype=bool)
    ay[list(_bipartition(inst.Y, bip_y))] = True
    allp = P.all_perms(n)
    hit = ay[allp[:, ax]].sum(axis=1)
    inv = np.zeros(len(allp), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            inv += allp[:, i] > allp[:, j]
    even = (inv % 2 == 0).astype(np.int64)
    return hit + even


@dataclass
class ParityCheck:
    holds: bool
    components: int
    parities: list[int]

    def to_json(self) -> dict:
        return {"holds": self.holds, "components": self.components,
                "parities": self.parities}


def check_parity_invariant(inst: FSInstance, bip_x=None, bip_y=None) -> ParityCheck:
    """Is p mod 2 constant on every component?  Reports each component's parity."""
    labels = component_labels(inst)
    par = parity_table(inst, bip_x, bip_y) % 2
    k = int(labels.max()) + 1
    lo = np.full(k, 2)
    hi = np.full(k, -1)
    np.minimum.at(lo, labels, par)
    np.maximum.at(hi, labels, par)
    return ParityCheck(bool((lo == hi).all()), k, [int(v) for v in lo])


# ---------------------------------------------------------------------------
# contingency-table count

def matrix_count(rows: Sequence[int], cols: Sequence[int]) -> int:
    """Number of nonnegative integer matrices with the given row and column sums."""
    rows, cols = tuple(int(r) for r in rows), tuple(int(c) for c in cols)
    if not rows or not cols:
        raise ValueError("margins must be nonempty")
    if min(rows + cols) < 0:
        raise ValueError("margins must be nonnegative")
    if sum(rows) != sum(cols):
        raise ValueError(f"row total {sum(rows)} != column total {sum(cols)}")
    if sum(rows) > MATRIX_TOTAL_LIMIT:
        raise ValueError(f"total {sum(rows)} exceeds limit {MATRIX_TOTAL_LIMIT}")

    def fills(residual: tuple[int, ...], amount: int, i: int = 0):
        """Ways to place ``amount`` into residual[i:], yielding the new residual."""
        if i == len(residual) - 1:
            if amount <= residual[i]:
                yield residual[:i] + (residual[i] - amount,)
            return
        for take in range(min(amount, residual[i]) + 1):
            head = residual[:i] + (residual[i] - take,) + residual[i + 1:]
            yield from fills(head, amount - take, i + 1)

    @lru_cache(maxsize=None)
    def count(j: int, residual: tuple[int, ...]) -> int:
        if j == len(cols):
            return int(not any(residual))
        return sum(count(j + 1, nxt) for nxt in fills(residual, cols[j]))

    return count(0, rows)


@dataclass
class CutVertexBound:
    bound: int
    x_cut: int
    y_cut: int
    x_parts: list[int]
    y_parts: list[int]


def cut_vertex_bound(x: SimpleGraph, y: SimpleGraph) -> CutVertexBound | None:
    """Best contingency-table lower bound on the FS component count, or None.

    Each choice of cut vertices x0, y0 gives the count of matrices whose row
    sums are the component orders of X - x0 and column sums those of Y - y0.
    """
    if x.n != y.n or x.n < 3:
        raise ValueError("need equal orders n >= 3")
    if not (graphs.is_connected(x) and graphs.is_connected(y)):
        raise ValueError("X and Y must be connected")
    best = None
    for x0 in sorted(cut_vertices(x)):
        rows = [len(c) for c in graphs.components(graphs.remove_vertices(x, [x0])[0])]
        for y0 in sorted(cut_vertices(y)):
            cols = [len(c) for c in graphs.components(graphs.remove_vertices(y, [y0])[0])]
            m = matrix_count(rows, cols)
            if best is None or m > best.bound:
                best = CutVertexBound(m, x0, y0, rows, cols)
    return best


# ---------------------------------------------------------------------------
# hypothesis reports

@dataclass
class Hypothesis:
    name: str
    holds: bool
    slack: float | None = None

    def to_json(self) -> dict:
        return {"name": self.name, "holds": self.holds, "slack": self.slack}


@dataclass
class ConditionReport:
    theorem: str
    hypotheses: list[Hypothesis] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(h.holds for h in self.hypotheses)

    @property
    def failed(self) -> list[str]:
        return [h.name for h in self.hypotheses if not h.holds]

    def add(self, name: str, holds: bool, slack=None) -> None:
        if isinstance(slack, float) and slack.is_integer():
            slack = int(slack)
        self.hypotheses.append(Hypothesis(name, bool(holds), slack))

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "hypotheses": [h.to_json() for h in self.hypotheses],
                "verdict": self.verdict}


def _not_cycle(x: SimpleGraph) -> bool:
    return not (x.n >= 4 and graphs.is_cycle(x))


def star_k_conditions(x: SimpleGraph, k: int) -> ConditionReport:
    """Sufficient conditions for FS(X, Star_n) to be k-connected."""
    rep = ConditionReport("star-k-connectivity")
    rep.add("biconnected", is_biconnected(x))
    rep.add("not_bipartite", graphs.is_bipartite(x) is None)
    d = graphs.min_degree(x)
    rep.add("min_degree_at_least_k", d >= k, d - k)
    rep.add("not_cycle", _not_cycle(x))
    rep.add("not_theta0", not is_theta0(x))
    return rep


def star_plus_k_conditions(x: SimpleGraph, k: int) -> ConditionReport:
    """Sufficient conditions for FS(Star+_n, X) to be k-connected (bipartite allowed)."""
    rep = ConditionReport("star-plus-k-connectivity")
    rep.add("biconnected", is_biconnected(x))
    d = graphs.min_degree(x)
    rep.add("min_degree_at_least_k", d >= k, d - k)
    rep.add("not_cycle", _not_cycle(x))
    rep.add("not_theta0", not is_theta0(x))
    return rep


def dense_degree_arithmetic(n: int, dx: int, dy: int, k: int) -> ConditionReport:
    """Degree arithmetic for the dense (both degrees above n/2) k-connectivity bound."""
    rep = ConditionReport("dense-degree")
    rep.add("k_at_least_2", k >= 2, k - 2)
    rep.add("min_degree_X_above_half", 2 * dx > n, dx - n / 2)
    rep.add("min_degree_Y_above_half", 2 * dy > n, dy - n / 2)
    lo, hi = min(dx, dy), max(dx, dy)
    rep.add("weighted_degree_bound", 2 * lo + 3 * hi >= 3 * n + 2 * k - 4,
            2 * lo + 3 * hi - (3 * n + 2 * k - 4))
    need = 5 * (1 + (k - 1) * (k + 6) + 2 * k - 3)
    rep.add("n_large_enough", n >= need, n - need)
    return rep


def kban1_conditions(x: SimpleGraph, y: SimpleGraph, k: int) -> ConditionReport:
    if x.n != y.n:
        raise ValueError("X and Y must have the same order")
    return dense_degree_arithmetic(x.n, graphs.min_degree(x), graphs.min_degree(y), k)


def min_degree_arithmetic(n: int, dx: int, dy: int, k: int) -> ConditionReport:
    rep = ConditionReport("min-degree-sum")
    rep.add("k_at_least_2", k >= 2, k - 2)
    rep.add("degree_sum_bound", dx + dy >= n + k - 1, dx + dy - (n + k - 1))
    lo, hi = min(dx, dy), max(dx, dy)
    rep.add("weighted_degree_bound", lo + 2 * hi >= 2 * n, lo + 2 * hi - 2 * n)
    return rep


def kban2_conditions(x: SimpleGraph, y: SimpleGraph, k: int) -> ConditionReport:
    if x.n != y.n:
        raise ValueError("X and Y must have the same order")
    rep = min_degree_arithmetic(x.n, graphs.min_degree(x), graphs.min_degree(y), k)
    rep.hypotheses[1:1] = [Hypothesis("X_connected", graphs.is_connected(x)),
                           Hypothesis("Y_connected", graphs.is_connected(y))]
    return rep


# ---------------------------------------------------------------------------
# verifiers

# interface ids accepted by the ``verify`` command, mapped to descriptive names
THEOREM_IDS = {
    "1.3": "complete-target-connectivity",
    "1.4": "local-exchange",
    "1.5": "star-component-connectivity",
    "1.6": "star-component-size",
    "1.7": "dense-degree",
    "1.8": "min-degree-sum",
    "3.9": "star-k-connectivity",
    "3.11": "star-plus-k-connectivity",
}
THEOREM_NAMES = sorted(set(THEOREM_IDS.values()))


def resolve_theorem(name: str) -> str:
    key = name.strip().lower()
    for prefix in ("thm-", "thm", "theorem-", "prop-"):
        if key.startswith(prefix) and key[len(prefix):] in THEOREM_IDS:
            key = key[len(prefix):]
    if key in THEOREM_IDS:
        return THEOREM_IDS[key]
    if key in THEOREM_NAMES:
        return key
    raise KeyError(f"unknown theorem {name!r}; choose from "
                   f"{', '.join(sorted(THEOREM_IDS))} or {', '.join(THEOREM_NAMES)}")


@dataclass
class Verification:
    theorem: str
    status: str  # pass | fail | hypotheses not satisfied | predicate-only
    claimed: object = None
    measured: object = None
    conditions: ConditionReport | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"theorem": self.theorem, "status": self.status,
               "claimed": self.claimed, "measured": self.measured}
        if self.conditions is not None:
            out["hypotheses"] = [h.to_json() for h in self.conditions.hypotheses]
            out["verdict"] = self.conditions.verdict
        if self.detail:
            out["detail"] = self.detail
        return out


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _verify_complete_target(x: SimpleGraph, budget: int) -> Verification:
    name = "complete-target-connectivity"
    if x.n < 3 or not graphs.is_connected(x):
        rep = ConditionReport(name)
        rep.add("n_at_least_3", x.n >= 3, x.n - 3)
        rep.add("X_connected", graphs.is_connected(x))
        return Verification(name, "hypotheses not satisfied", conditions=rep)
    inst = FSInstance(x, graphs.complete(x.n))
    g = fs_whole_graph(inst, budget=budget).graph
    kappa = vertex_connectivity(g)
    delta = min_fs_degree(inst)
    measured = {"connectivity": kappa, "min_degree": delta}
    return Verification(name, _status(kappa == delta == x.m), claimed=x.m, measured=measured)


def _verify_star_connectivity(x: SimpleGraph, budget: int) -> Verification:
    name = "star-component-connectivity"
    if x.n < 3 or not graphs.is_connected(x):
        rep = ConditionReport(name)
        rep.add("n_at_least_3", x.n >= 3, x.n - 3)
        rep.add("X_connected", graphs.is_connected(x))
        return Verification(name, "hypotheses not satisfied", conditions=rep)
    inst = star_instance(x)
    kappas = []
    for comp in fs_components(inst):
        g = fs_component_of(inst, comp.representative, budget=budget).graph
        kappas.append(vertex_connectivity(g))
    delta = graphs.min_degree(x)
    return Verification(name, _status(all(v == delta for v in kappas)), claimed=delta,
                        measured=sorted(set(kappas)))


def _verify_star_size(x: SimpleGraph) -> Verification:
    name = "star-component-size"
    inst = star_instance(x)
    comps = fs_components(inst)
    sizes = sorted({c.size for c in comps})
    if graphs.is_connected(x):
        claimed = predict_component_size(x).size
        ok = sizes == [claimed] and len(comps) * claimed == inst.size
        return Verification(name, _status(ok), claimed=claimed,
                            measured=sizes[0] if len(sizes) == 1 else sizes)
    # disconnected X: the size depends on where person n starts
    claimed_by_anchor = {}
    ok = True
    allp = P.all_perms(x.n)
    for c in comps:
        anchor = int(np.argmax(allp[P.rank(c.representative)] == x.n)) + 1
        want = predict_component_size(x, anchor).size
        claimed_by_anchor[anchor] = want
        ok &= c.size == want
    return Verification(name, _status(ok), claimed=sorted(set(claimed_by_anchor.values())),
                        measured=sizes)


def _verify_k_connected(name: str, rep: ConditionReport, inst: FSInstance, k: int,
                        budget: int) -> Verification:
    if not rep.verdict:
        return Verification(name, "hypotheses not satisfied", claimed=k, conditions=rep)
    g = fs_whole_graph(inst, budget=budget).graph
    kappa = vertex_connectivity(g)
    return Verification(name, _status(kappa >= k), claimed=k, measured=kappa, conditions=rep)


def verify_theorem(theorem: str, x: SimpleGraph, y: SimpleGraph | None = None,
                   k: int | None = None, budget: int = EXPLICIT_BUDGET) -> Verification:
    """Compare a claim against exact computation on one instance.

    ``theorem`` is an interface id (see ``THEOREM_IDS``) or its descriptive name.
    """
    name = resolve_theorem(theorem)
    n = x.n
    if name == "complete-target-connectivity":
        return _verify_complete_target(x, budget)
    if name == "star-component-connectivity":
        return _verify_star_connectivity(x, budget)
    if name == "star-component-size":
        return _verify_star_size(x)
    k = 2 if k is None else k
    if name == "star-k-connectivity":
        rep = star_k_conditions(x, k)
        return _verify_k_connected(name, rep, star_instance(x), k, budget)
    if name == "star-plus-k-connectivity":
        rep = star_plus_k_conditions(x, k)
        return _verify_k_connected(name, rep, FSInstance(graphs.star_plus(n), x), k, budget)
    if y is None:
        raise ValueError(f"{name} needs both X and Y")
    if name == "dense-degree":
        rep = kban1_conditions(x, y, k)
        status = "predicate-only" if rep.verdict else "hypotheses not satisfied"
        return Verification(name, status, claimed=k, conditions=rep,
                            detail="the size bound on n puts exact verification out of reach")
    if name == "min-degree-sum":
        return _verify_k_connected(name, kban2_conditions(x, y, k), FSInstance(x, y), k, budget)
    if name == "local-exchange":
        inst = FSInstance(x, y)
        verdict = check_local_exchangeability(inst, k, use_symmetry=True, budget=budget)
        if not verdict.holds:
            return Verification(name, "hypotheses not satisfied", claimed=k,
                                detail=f"exchange fails after {verdict.checked} checks")
        g = fs_whole_graph(inst, budget=budget).graph
        return Verification(name, _status(is_k_connected(g, k)), claimed=k,
                            measured=vertex_connectivity(g))
    raise KeyError(name)  # pragma: no cover


# ---------------------------------------------------------------------------
# starcle disjoint paths

def starcle_conditions(n: int, diagonals: Sequence[int], k: int) -> ConditionReport:
    """Gap conditions on the starcle tuple, with x_0 = 1 and x_last = n - 1.

    The tuple supports up to len(diagonals) + 1 disjoint paths; all gaps
    must be at least that large and at least one must be odd.
    """
    rep = ConditionReport("starcle-paths")
    try:
        graphs.check_starcle_tuple(n, diagonals)
        rep.add("valid_tuple", True)
    except graphs.GraphError:
        rep.add("valid_tuple", False)
        return rep
    xs = [1, *diagonals, n - 1]
    gaps = [b - a for a, b in zip(xs, xs[1:])]
    full = len(diagonals) + 1
    rep.add("k_at_least_1", k >= 1, k - 1)
    rep.add("k_at_most_tuple_length_plus_1", k <= full, full - k)
    rep.add("tuple_supports_two_paths", full >= 2, full - 2)
    rep.add("odd_gap", any(g % 2 for g in gaps))
    rep.add("gaps_at_least_path_count", min(gaps) >= full, min(gaps) - full)
    return rep


@dataclass
class StarcleCheck:
    holds: bool
    k: int
    mode: str
    pairs_checked: int
    counterexample: tuple[P.Perm, P.Perm, int] | None = None

    def to_json(self) -> dict:
        out = {"holds": self.holds, "k": self.k, "mode": self.mode,
               "pairs_checked": self.pairs_checked}
        if self.counterexample:
            a, b, c = self.counterexample
            out["counterexample"] = {"sigma": list(a), "rho": list(b), "paths": c}
        return out


def starcle_disjoint_paths_check(n: int, diagonals: Sequence[int], k: int,
                                 sample_size: int | None = None, seed: int | None = None,
                                 budget: int = EXPLICIT_BUDGET) -> StarcleCheck:
    """k disjoint paths between states with person n on vertex n, in FS(starcle, Star_n).

    With ``sample_size`` random pairs are checked and each path family is
    certified.  Without it the check is exhaustive: such states are pairwise
    non-adjacent, so a separator of fewer than k vertices between two of them
    would also separate one of k fixed pivots from one of the pair.  Checking
    the pivots against every state therefore covers every pair.
    """
    rep = starcle_conditions(n, diagonals, k)
    if not rep.verdict:
        raise HypothesisError(rep)
    x = graphs.starcle(n, diagonals)
    inst = star_instance(x)
    comp = fs_component_of(inst, P.identity(n), budget=budget)
    allp = P.all_perms(n)
    typed = np.flatnonzero(allp[comp.ranks, n - 1] == n) + 1  # vertex ids in comp.graph
    g = comp.graph
    if sample_size is not None:
        if seed is None:
            raise ValueError("sampling needs a seed")
        rng = np.random.default_rng(seed)
        for done in range(sample_size):
            a, b = rng.choice(typed, size=2, replace=False)
            count, _ = max_disjoint_paths(g, int(a), int(b), cutoff=k)
            if count < k:
                return StarcleCheck(False, k, "sampled", done + 1,
                                    (comp.state(int(a)), comp.state(int(b)), count))
        return StarcleCheck(True, k, "sampled", sample_size)
    bad = independent_set_linked(g, typed.tolist(), k)
    if bad is not None:
        p, q, count = bad
        return StarcleCheck(False, k, "exhaustive", 1, (comp.state(p), comp.state(q), count))
    pairs = len(typed) * (len(typed) - 1) // 2
    return StarcleCheck(True, k, "exhaustive", pairs)
