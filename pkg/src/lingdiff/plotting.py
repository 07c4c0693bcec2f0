"""Grouped bar charts of per-feature counts for two corpora."""

from __future__ import annotations

import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .analysis import ComparisonRow  # noqa: E402

# one figure per group of levels, mirroring the usual three-panel layout
FIGURE_GROUPS = (
    ("phonology", ("phonology",), "Number of phonological components"),
    ("morphosyntax", ("morphology", "syntax"), "Number of morphological and syntactic components"),
    ("lexicon", ("lexicon",), "Number of lexical components"),
)

STYLE = {
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "legend.frameon": False,
    "svg.hashsalt": "lingdiff",
}


def grouped_bars(ax, labels: Sequence[str], a: Sequence[int], b: Sequence[int],
                 label_a: str, label_b: str):
    x = np.arange(len(labels))
    width = 0.4
    ax.bar(x - width / 2, a, width, label=label_a, color="#4c72b0")
    ax.bar(x + width / 2, b, width, label=label_b, color="#dd8452")
    ax.set_xticks(x)
    ax.set_xticklabels(labels, rotation=60, ha="right")
    ax.set_ylabel("count")
    ax.legend()


def render_figures(rows: Sequence[ComparisonRow], out_dir: str, label_a: str = "A",
                   label_b: str = "B", fmt: str = "png") -> list[str]:
    """Write one chart per level group; returns the written paths."""
    os.makedirs(out_dir, exist_ok=True)
    written = []
    with plt.rc_context(STYLE):
        for stem, levels, title in FIGURE_GROUPS:
            sel = [r for r in rows if r.level in levels]
            if not sel:
                continue
            labels = [r.display_name if len(levels) == 1 else f"{r.display_name} ({r.level[:5]}.)"
                      for r in sel]
            fig, ax = plt.subplots(figsize=(max(6.0, 0.35 * len(sel) + 2.0), 4.0))
            grouped_bars(ax, labels, [r.count_a for r in sel], [r.count_b for r in sel],
                         label_a, label_b)
            ax.set_title(title)
            fig.tight_layout()
            path = os.path.join(out_dir, f"figure_{stem}.{fmt}")
            fig.savefig(path, dpi=150, metadata={"Software": None} if fmt == "png" else None)
            plt.close(fig)
            written.append(path)
    return written
