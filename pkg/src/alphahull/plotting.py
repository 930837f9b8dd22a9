"""Matplotlib figure written next to a benchmark CSV."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import ComparisonReport  # noqa: E402

COLORS = {"chull": "#d62728", "ashape": "#1f77b4", "ahull": "#2ca02c"}


def plot_report(report: ComparisonReport, path) -> Path:
    """Per-polygon errors (left) and the better/equal/worse split (right)."""
    path = Path(path)
    rows = sorted(report.rows, key=lambda r: r.chull_err)
    x = range(len(rows))
    fig, (ax, bx) = plt.subplots(1, 2, figsize=(10, 4), gridspec_kw={"width_ratios": [3, 1]})

    ax.plot(x, [r.chull_err for r in rows], "-", color=COLORS["chull"], lw=1.2, label="convex hull")
    ax.plot(x, [r.ashape_err for r in rows], ".", color=COLORS["ashape"], ms=4, label="alpha shape")
    ax.plot(x, [r.ahull_err for r in rows], ".", color=COLORS["ahull"], ms=4, label="alpha-concave hull")
    ax.set_xlabel("polygon (sorted by convex-hull error)")
    ax.set_ylabel("approximation error (area)")
    ax.legend(frameon=False, fontsize=8)
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)

    counts = [report.count_better, report.count_equal, report.count_worse]
    bx.bar(["<", "=", ">"], counts, color=[COLORS["ahull"], "0.6", COLORS["ashape"]])
    for i, c in enumerate(counts):
        bx.text(i, c, str(c), ha="center", va="bottom", fontsize=8)
    bx.set_title("alpha-concave hull vs alpha shape", fontsize=9)
    for side in ("top", "right"):
        bx.spines[side].set_visible(False)

    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path
