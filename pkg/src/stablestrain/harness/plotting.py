"""Figures for sweep and Newton reports, written next to the CSV output.

Figures are built on :class:`matplotlib.figure.Figure` directly, so no
pyplot state or GUI backend is involved.  SVG output is byte-reproducible:
the element-id salt is fixed and the date stamp is dropped.
"""
from __future__ import annotations

from pathlib import Path

import matplotlib
from matplotlib.figure import Figure

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.linewidth": 0.6,
    "axes.grid": True,
    "axes.grid.which": "major",
    "grid.linewidth": 0.3,
    "grid.alpha": 0.6,
    "legend.fontsize": 8,
    "legend.frameon": False,
    "lines.linewidth": 1.2,
    "lines.markersize": 3,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "svg.fonttype": "none",
    "svg.hashsalt": "stablestrain",
}

FIG_SIZE = (4.6, 3.2)  # inches
COLORS = ("#0072B2", "#D55E00", "#009E73", "#CC79A7")
MARKERS = ("o", "s", "^", "v")


def _save(fig: Figure, path) -> Path:
    path = Path(path)
    fig.savefig(path, format="svg", metadata={"Date": None})
    return path


def plot_sweep(result, path, eps_machine: float | None = None) -> Path:
    """Log-log relative error against eps, one line per form."""
    with matplotlib.rc_context(STYLE):
        fig = Figure(figsize=FIG_SIZE, layout="constrained")
        ax = fig.add_subplot()
        floor = 1e-300
        for k, (form, errs) in enumerate(result.columns.items()):
            ax.loglog(
                result.eps,
                [max(e, floor) for e in errs],
                color=COLORS[k % len(COLORS)],
                marker=MARKERS[k % len(MARKERS)],
                label=form,
            )
        if eps_machine is not None:
            ax.axhline(eps_machine, color="0.4", linestyle="--", linewidth=0.8, label=r"$\epsilon_{machine}$")
        cfg = result.config
        ax.set_xlabel(r"$\epsilon = \|H\|_F$")
        ax.set_ylabel("relative error")
        ax.set_title(f"{cfg.model} ({cfg.configuration}, {cfg.precision})", fontsize=9)
        ax.legend(loc="best")
        return _save(fig, path)


def plot_newton(reports, path) -> Path:
    """Residual norm per Newton iteration for one or more reports."""
    with matplotlib.rc_context(STYLE):
        fig = Figure(figsize=FIG_SIZE, layout="constrained")
        ax = fig.add_subplot()
        for k, rep in enumerate(reports):
            norms = [max(n, 1e-300) for n in rep.residual_norms]
            ax.semilogy(
                range(len(norms)),
                norms,
                color=COLORS[k % len(COLORS)],
                marker=MARKERS[k % len(MARKERS)],
                label=rep.form,
            )
        ax.set_xlabel("Newton iteration")
        ax.set_ylabel(r"$\|R\|_2$")
        ax.xaxis.get_major_locator().set_params(integer=True)
        ax.legend(loc="best")
        return _save(fig, path)
