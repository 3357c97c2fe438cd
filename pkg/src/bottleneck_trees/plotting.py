"""Raster/vector figures of trees over point sets via matplotlib."""
from __future__ import annotations

from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.collections import LineCollection  # noqa: E402

from .emst import Tree  # noqa: E402
from .geometry import PointSet  # noqa: E402
from .svg import FALLBACK, PALETTE  # noqa: E402


def plot_trees(
    ps: PointSet,
    trees: Sequence[tuple[Tree, str]],
    path: str,
    title: Optional[str] = None,
    labels: bool = False,
):
    """Draw every tree as its own colored layer and save to ``path`` (format from suffix)."""
    xy = ps.coords
    fig, axes = plt.subplots(1, max(len(trees), 1), figsize=(4.0 * max(len(trees), 1), 4.0), squeeze=False)
    for i, ax in enumerate(axes[0]):
        if i < len(trees):
            t, style = trees[i]
            color = PALETTE.get(style, FALLBACK[i % len(FALLBACK)])
            segs = [(xy[a], xy[b]) for a, b in t.edges]
            ax.add_collection(LineCollection(segs, colors=color, linewidths=1.6))
            ax.set_title(style, fontsize=10)
        ax.scatter(xy[:, 0], xy[:, 1], s=14, c="k", zorder=3)
        if labels:
            for j, (x, y) in enumerate(xy):
                ax.annotate(str(j), (x, y), textcoords="offset points", xytext=(3, 3), fontsize=7)
        ax.set_aspect("equal")
        ax.margins(0.08)
        ax.set_xticks([])
        ax.set_yticks([])
    if title:
        fig.suptitle(title, fontsize=11)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
