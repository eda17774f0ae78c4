"""Seeded Monte Carlo sweeps of FS(G(n, p1), G(n, p2)).

Every trial derives its own seed from (base seed, grid index, trial index),
and each graph gets a further role-specific seed, so trials can run in any
order or in parallel and the CSV output stays byte-identical.
"""

from __future__ import annotations

import csv
import io
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import graphs
from .connectivity import is_k_connected
from .fs import (ENUMERATION_CAP, EXPLICIT_BUDGET, BudgetError, FSInstance, component_labels,
                 explicit_graph, has_isolated_vertex)

log = logging.getLogger(__name__)

RECORD_HEADER = ["n", "p1", "p2", "trial", "seed", "connected", "k", "k_connected",
                 "isolated_vertex", "components", "largest_component", "elapsed_ms"]
SUMMARY_HEADER = ["n", "p1", "p2", "trials", "p_connected", "ci_lo", "ci_hi",
                  "p_isolated", "p0_annotation"]
ROLE_X, ROLE_Y = 0, 1


def derive_seed(base: int, *key: int) -> int:
    """63-bit seed from a base seed and an integer key path."""
    ss = np.random.SeedSequence(int(base), spawn_key=tuple(int(k) for k in key))
    lo, hi = ss.generate_state(2, dtype=np.uint32)
    return ((int(hi) << 32) | int(lo)) & ((1 << 63) - 1)


def p0_annotation(n: int, k: int) -> float:
    """exp((k+7)/4 * (log n)^(2/3)) / sqrt(n); an asymptotic reference value."""
    return math.exp((k + 7) / 4 * math.log(n) ** (2 / 3)) / math.sqrt(n)


def ell_annotation(n: int) -> float:
    return math.log(n) ** (2 / 3) / 2


@dataclass
class ExperimentConfig:
    n: int
    grid: list[tuple[float, float]]
    trials: int
    seed: int
    k: int = 2
    state_cap: int = EXPLICIT_BUDGET
    timing: bool = False

    def __post_init__(self):
        self.grid = [(float(a), float(b)) for a, b in self.grid]
        if not 1 <= self.n <= ENUMERATION_CAP:
            raise ValueError(f"n must be in 1..{ENUMERATION_CAP}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.grid:
            raise ValueError("empty grid")
        for a, b in self.grid:
            if not (0 <= a <= 1 and 0 <= b <= 1):
                raise ValueError(f"probabilities out of range: ({a}, {b})")


@dataclass
class ExperimentRecord:
    n: int
    p1: float
    p2: float
    trial: int
    seed: int
    connected: bool | None
    k: int
    k_connected: bool | None
    isolated_vertex: bool | None
    components: int | None
    largest_component: int | None
    elapsed_ms: float | None = None
    error: str | None = field(default=None, compare=False)

    def row(self) -> list[str]:
        return [_cell(getattr(self, name)) for name in RECORD_HEADER]


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def sample_pair(n: int, p1: float, p2: float, seed: int):
    x = graphs.gnp(n, p1, derive_seed(seed, ROLE_X))
    y = graphs.gnp(n, p2, derive_seed(seed, ROLE_Y))
    return x, y


def run_trial(n: int, p1: float, p2: float, seed: int, k: int = 2, trial: int = 0,
              state_cap: int = EXPLICIT_BUDGET, timing: bool = False) -> ExperimentRecord:
    start = time.perf_counter()
    x, y = sample_pair(n, p1, p2, seed)
    inst = FSInstance(x, y)
    labels = component_labels(inst)
    sizes = np.bincount(labels)
    connected = len(sizes) == 1
    isolated = has_isolated_vertex(inst) is not None
    if not connected:
        k_conn = False
    elif inst.size > state_cap:
        k_conn = None
    else:
        g = explicit_graph(inst, np.arange(inst.size, dtype=np.int64))
        k_conn = is_k_connected(g, k)
    elapsed = round((time.perf_counter() - start) * 1000, 3) if timing else None
    return ExperimentRecord(n, float(p1), float(p2), trial, seed, connected, k, k_conn,
                            isolated, len(sizes), int(sizes.max()), elapsed)


def _job(args) -> ExperimentRecord:
    n, p1, p2, seed, k, trial, cap, timing = args
    try:
        return run_trial(n, p1, p2, seed, k, trial, cap, timing)
    except (BudgetError, ValueError) as exc:
        return ExperimentRecord(n, p1, p2, trial, seed, None, k, None, None, None, None,
                                None, error=str(exc))


def trial_jobs(cfg: ExperimentConfig) -> list[tuple]:
    return [(cfg.n, p1, p2, derive_seed(cfg.seed, gi, t), cfg.k, t, cfg.state_cap, cfg.timing)
            for gi, (p1, p2) in enumerate(cfg.grid) for t in range(cfg.trials)]


@dataclass
class SummaryRow:
    n: int
    p1: float
    p2: float
    trials: int
    p_connected: float
    ci_lo: float
    ci_hi: float
    p_isolated: float
    p0_annotation: float
    connected: int = 0

    def row(self) -> list[str]:
        return [_cell(getattr(self, name)) for name in SUMMARY_HEADER]

    @property
    def sigma(self) -> float:
        p = self.p_connected
        return math.sqrt(p * (1 - p) / self.trials)


def binomial_ci(successes: int, trials: int, exact: bool = False,
                level: float = 0.95) -> tuple[float, float]:
    """Normal-approximation interval clipped to [0, 1], or Clopper-Pearson."""
    if exact:
        from scipy.stats import beta
        a = 1 - level
        lo = 0.0 if successes == 0 else float(beta.ppf(a / 2, successes, trials - successes + 1))
        hi = 1.0 if successes == trials else float(beta.ppf(1 - a / 2, successes + 1,
                                                             trials - successes))
        return lo, hi
    from statistics import NormalDist
    z = NormalDist().inv_cdf(0.5 + level / 2)
    p = successes / trials
    half = z * math.sqrt(p * (1 - p) / trials)
    return max(0.0, p - half), min(1.0, p + half)


@dataclass
class Sweep:
    config: ExperimentConfig
    records: list[ExperimentRecord]
    exact_ci: bool = False

    @property
    def errors(self) -> list[ExperimentRecord]:
        return [r for r in self.records if r.error]

    def summary(self) -> list[SummaryRow]:
        cfg = self.config
        out = []
        for gi, (p1, p2) in enumerate(cfg.grid):
            recs = [r for r in self.records[gi * cfg.trials:(gi + 1) * cfg.trials]
                    if r.error is None]
            t = len(recs)
            conn = sum(bool(r.connected) for r in recs)
            iso = sum(bool(r.isolated_vertex) for r in recs)
            lo, hi = binomial_ci(conn, t, self.exact_ci) if t else (0.0, 1.0)
            out.append(SummaryRow(cfg.n, p1, p2, t, conn / t if t else float("nan"), lo, hi,
                                  iso / t if t else float("nan"), p0_annotation(cfg.n, cfg.k),
                                  conn))
        return out

    def records_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(RECORD_HEADER)
        for r in self.records:
            w.writerow(r.row())
        return buf.getvalue()

    def summary_csv(self) -> str:
        n, k = self.config.n, self.config.k
        buf = io.StringIO()
        buf.write(f"# p0_annotation = exp((k+7)/4*(log n)^(2/3))/sqrt(n) with k={k}; "
                  f"ell = (log n)^(2/3)/2 = {ell_annotation(n):.6g}. Both are asymptotic "
                  f"reference values only and predict nothing at n={n}.\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(SUMMARY_HEADER)
        for s in self.summary():
            w.writerow(s.row())
        return buf.getvalue()


def run_sweep(cfg: ExperimentConfig, jobs: int = 1, exact_ci: bool = False) -> Sweep:
    tasks = trial_jobs(cfg)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_job, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        records = [_job(t) for t in tasks]
    for r in records:
        if r.error:
            log.warning("trial %d at (%g, %g) failed: %s", r.trial, r.p1, r.p2, r.error)
    return Sweep(cfg, records, exact_ci)


def read_records(text: str) -> list[dict]:
    rows = csv.DictReader(line for line in io.StringIO(text) if not line.startswith("#"))
    return list(rows)


def estimate_crossing(points: Iterable[tuple[float, float]], target: float = 0.5) -> float | None:
    """First p where the piecewise-linear curve through (p, P) reaches ``target``."""
    pts = sorted(points)
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if y0 == target:
            return x0
        if (y0 - target) * (y1 - target) < 0:
            return x0 + (target - y0) * (x1 - x0) / (y1 - y0)
    if pts and pts[-1][1] == target:
        return pts[-1][0]
    return None


def sweep_crossing(summary: Sequence[SummaryRow], target: float = 0.5,
                   axis: str = "p1") -> float | None:
    """Crossing of P(connected) along p1, or along sqrt(p1 p2) with axis='geometric'."""
    if axis == "p1":
        xs = [s.p1 for s in summary]
    elif axis == "geometric":
        xs = [math.sqrt(s.p1 * s.p2) for s in summary]
    else:
        raise ValueError(f"unknown axis {axis!r}")
    return estimate_crossing(zip(xs, (s.p_connected for s in summary)), target)


def monotone_violations(values: Sequence[float], trials: Sequence[int] | int,
                        increasing: bool = True, width: float = 2.0) -> list[int]:
    """Indices i where consecutive estimates move the wrong way by more than
    ``width`` combined standard errors."""
    if isinstance(trials, int):
        trials = [trials] * len(values)
    bad = []
    for i in range(len(values) - 1):
        a, b = values[i], values[i + 1]
        sd = math.sqrt(a * (1 - a) / trials[i] + b * (1 - b) / trials[i + 1])
        drop = (a - b) if increasing else (b - a)
        if drop > width * sd:
            bad.append(i)
    return bad
