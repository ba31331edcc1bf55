"""Four-panel SVG output: one statistic per file, mean curves with
standard-error whiskers, one series per (model, sigma)."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ..errors import EmptyInput
from .summary import GroupSummary

PANELS = (
    ("panel_a.svg", "components", "connected components"),
    ("panel_b.svg", "clustering", "clustering coefficient"),
    ("panel_c.svg", "assortativity", "assortativity coefficient"),
    ("panel_d.svg", "core_share", "share of nodes in core"),
)


def series_label(model: str, sigma: float | None) -> str:
    return model if sigma is None else f"{model} sigma={sigma:g}"


def emit_plots(summary: list[GroupSummary], output_dir) -> list[str]:
    """Write panel_a.svg ... panel_d.svg under output_dir; returns the paths."""
    if not summary:
        raise EmptyInput("no summary groups to plot")
    os.makedirs(output_dir, exist_ok=True)
    series: dict[tuple[str, float | None], list[GroupSummary]] = {}
    for group in summary:
        if group.n_target == 0:  # unbinned rows carry no size coordinate
            continue
        series.setdefault((group.model, group.sigma), []).append(group)
    if not series:
        raise EmptyInput("all summary groups are unbinned")
    paths = []
    with plt.rc_context({"svg.fonttype": "none", "svg.hashsalt": "graphbench"}):
        for filename, stat, ylabel in PANELS:
            fig, ax = plt.subplots(figsize=(5.0, 3.6))
            for key in sorted(series, key=lambda k: (k[0], k[1] if k[1] is not None else -1.0)):
                points = [
                    (g.mean_n_realized, g.stats[stat].mean, g.stats[stat].se)
                    for g in sorted(series[key], key=lambda g: g.n_target)
                    if g.stats[stat].mean is not None
                ]
                if not points:
                    continue
                xs, ys, es = zip(*points)
                ax.errorbar(xs, ys, yerr=es, marker="o", capsize=3, label=series_label(*key))
            ax.set_xscale("log")
            ax.set_xlabel("number of nodes")
            ax.set_ylabel(ylabel)
            ax.legend(fontsize=7)
            fig.tight_layout()
            path = os.path.join(output_dir, filename)
            fig.savefig(path, format="svg", metadata={"Date": None})
            plt.close(fig)
            paths.append(path)
    return paths
