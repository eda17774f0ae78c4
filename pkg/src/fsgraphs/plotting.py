"""Figures for sweep reports.  Uses the non-interactive Agg backend."""

from __future__ import annotations

import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "figure.figsize": (6.0, 3.8),
    "axes.grid": True,
    "grid.alpha": 0.3,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "font.size": 9,
    "legend.fontsize": 8,
    "savefig.dpi": 150,
    # keep files reproducible
    "svg.hashsalt": "fsgraphs",
}


def _x_axis(summary) -> tuple[list[float], str]:
    if all(s.p1 == s.p2 for s in summary):
        return [s.p1 for s in summary], "p  (p1 = p2)"
    return [(s.p1 * s.p2) ** 0.5 for s in summary], "sqrt(p1 p2)"


def sweep_figure(summary: Sequence, path: str, title: str | None = None) -> str:
    """P(connected) with its interval band and P(isolated vertex) against p."""
    xs, label = _x_axis(summary)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        pc = [s.p_connected for s in summary]
        ax.fill_between(xs, [s.ci_lo for s in summary], [s.ci_hi for s in summary],
                        alpha=0.25, color="C0", linewidth=0)
        ax.plot(xs, pc, "o-", color="C0", label="P(FS connected)")
        ax.plot(xs, [s.p_isolated for s in summary], "s--", color="C3",
                label="P(isolated state)")
        ax.set_xlabel(label)
        ax.set_ylabel("empirical probability")
        ax.set_ylim(-0.03, 1.03)
        n = summary[0].n if summary else "?"
        ax.set_title(title or f"FS(G(n,p1), G(n,p2)), n = {n}")
        ax.legend(loc="center right")
        fig.tight_layout()
        _save(fig, path)
    return path


def component_histogram(sizes: Sequence[int], path: str, title: str = "component sizes") -> str:
    """Bar chart of how many components have each size."""
    counts: dict[int, int] = {}
    for s in sizes:
        counts[int(s)] = counts.get(int(s), 0) + 1
    keys = sorted(counts)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        ax.bar([str(k) for k in keys], [counts[k] for k in keys], color="C2")
        ax.set_xlabel("component size")
        ax.set_ylabel("number of components")
        ax.set_title(title)
        fig.tight_layout()
        _save(fig, path)
    return path


def _save(fig, path: str) -> None:
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    fig.savefig(path, metadata={"Software": None} if path.endswith(".png") else None)
    plt.close(fig)
