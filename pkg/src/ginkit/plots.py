"""Figures for invariant reports.

Uses :class:`matplotlib.figure.Figure` directly so that no pyplot state or
interactive backend is involved.
"""

from __future__ import annotations

import math
import os

from matplotlib.figure import Figure

ROUTE_STYLE = {
    "colon": {"marker": "o", "linestyle": "-"},
    "borel": {"marker": "s", "linestyle": "--"},
    "betti": {"marker": "^", "linestyle": ":"},
}


def _finite(values):
    return [v if not (isinstance(v, float) and math.isinf(v)) else math.nan for v in values]


def plot_profiles(report, path: str) -> str:
    """``reg_t`` and ``a*_t`` against ``t`` for every computed route."""
    fig = Figure(figsize=(7, 3.2))
    ax_reg, ax_astar = fig.subplots(1, 2, sharex=True)
    n = report.ring.n
    ts = list(range(n))
    routes = [("colon", report.colon), ("borel", report.borel), ("betti", report.betti_profile)]
    for name, prof in routes:
        if prof is None:
            continue
        ax_reg.step(ts, _finite(prof.reg_q), where="post", label=name, **ROUTE_STYLE[name])
        ax_astar.step(ts, _finite(prof.astar_q), where="post", label=name, **ROUTE_STYLE[name])
    ax_reg.set_title("reg_t(S/J)")
    ax_astar.set_title("a*_t(S/J)")
    for ax in (ax_reg, ax_astar):
        ax.set_xlabel("t")
        ax.set_xticks(ts)
        ax.grid(alpha=0.3)
    ax_reg.legend(frameon=False, fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    return path


def plot_betti_table(table, path: str, extremal=()) -> str:
    """Macaulay-style Betti diagram: column ``i``, row ``j - i``; extremal entries boxed."""
    diagram = table.diagram()
    rows = 1 + max((r for r, _ in diagram), default=0)
    cols = max(table.length, 1 + max((c for _, c in diagram), default=0))
    fig = Figure(figsize=(1.0 + 0.7 * cols, 1.0 + 0.5 * rows))
    ax = fig.subplots()
    grid = [[diagram.get((r, c), 0) for c in range(cols)] for r in range(rows)]
    ax.imshow(grid, cmap="Blues", aspect="auto", vmin=0)
    marked = {(m, l) for l, m, _ in extremal}
    for r in range(rows):
        for c in range(cols):
            v = grid[r][c]
            if v:
                weight = "bold" if (r, c) in marked else "normal"
                ax.text(c, r, str(v), ha="center", va="center", fontweight=weight)
    ax.set_xticks(range(cols))
    ax.set_yticks(range(rows))
    ax.set_xlabel("homological degree i")
    ax.set_ylabel("j - i")
    ax.set_title("Betti numbers of S/J")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    return path


def plot_hilbert(report, path: str) -> str:
    """Hilbert function of ``S/I`` (linear algebra) next to ``S/gin(I)``."""
    fig = Figure(figsize=(5, 3))
    ax = fig.subplots()
    hilb = report.hilbert
    ms = list(range(len(hilb["gin"])))
    ax.bar([m - 0.2 for m in ms], hilb["input"], width=0.4, label="S/I")
    ax.bar([m + 0.2 for m in ms], hilb["gin"], width=0.4, label="S/gin(I)")
    ax.set_xlabel("degree m")
    ax.set_ylabel("dim")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    return path


def write_report_figures(report, outdir: str, stem: str = "report") -> list[str]:
    os.makedirs(outdir, exist_ok=True)
    paths = [plot_profiles(report, os.path.join(outdir, f"{stem}_profiles.png"))]
    if report.betti is not None:
        paths.append(plot_betti_table(report.betti, os.path.join(outdir, f"{stem}_betti.png"), report.extremal or ()))
    if report.hilbert is not None:
        paths.append(plot_hilbert(report, os.path.join(outdir, f"{stem}_hilbert.png")))
    return paths
