"""Figure rendering for benchmark reports.

Every report emission renders one grouped bar chart per feature recipe
(the four metrics across classifiers) plus an F1 overview across all
recipes, written as PNG files next to the delimited output.
"""

from __future__ import annotations

import re
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

METRIC_NAMES = ("Accuracy", "Precision", "Recall", "F1")
_BAR_COLORS = ("#4C72B0", "#DD8452", "#55A868", "#C44E52")


def _slug(label: str) -> str:
    return re.sub(r"[^a-z0-9]+", "_", label.lower()).strip("_")


def _grouped(table):
    groups = {}
    for row in table.rows:
        groups.setdefault(row.features_label, []).append(row)
    return groups


def render_report_figures(table, out_dir, stem="report") -> list[Path]:
    """Render per-recipe metric charts and an F1 overview; returns paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    groups = _grouped(table)

    for features_label, rows in groups.items():
        fig, ax = plt.subplots(figsize=(7.0, 3.6))
        ok_rows = [r for r in rows if r.report is not None]
        labels = [r.classifier_label for r in ok_rows]
        x = np.arange(len(ok_rows))
        width = 0.2
        for m_idx, metric in enumerate(METRIC_NAMES):
            values = [getattr(r.report, metric.lower() if metric != "F1" else "f1") for r in ok_rows]
            ax.bar(x + (m_idx - 1.5) * width, values, width, label=metric, color=_BAR_COLORS[m_idx])
        ax.set_xticks(x)
        ax.set_xticklabels(labels)
        ax.set_ylim(0.0, 1.05)
        ax.set_ylabel("score")
        ax.set_title(features_label)
        ax.legend(ncol=4, fontsize=8, loc="lower right")
        ax.grid(axis="y", alpha=0.3)
        n_err = sum(1 for r in rows if r.error)
        if n_err:
            ax.text(0.02, 0.04, f"{n_err} cell(s) failed", transform=ax.transAxes, fontsize=8, color="crimson")
        fig.tight_layout()
        path = out_dir / f"{stem}_{_slug(features_label)}.png"
        fig.savefig(path, dpi=110)
        plt.close(fig)
        written.append(path)

    if len(groups) > 1:
        fig, ax = plt.subplots(figsize=(8.0, 3.6))
        tick_labels = []
        values = []
        for features_label, rows in groups.items():
            for row in rows:
                tick_labels.append(f"{row.classifier_label}\n{features_label}")
                values.append(row.report.f1 if row.report else 0.0)
        x = np.arange(len(values))
        ax.bar(x, values, color="#4C72B0")
        ax.set_xticks(x)
        ax.set_xticklabels(tick_labels, fontsize=6, rotation=90)
        ax.set_ylim(0.0, 1.05)
        ax.set_ylabel("F1")
        ax.set_title("F1 across all cells")
        ax.grid(axis="y", alpha=0.3)
        fig.tight_layout()
        path = out_dir / f"{stem}_f1_overview.png"
        fig.savefig(path, dpi=110)
        plt.close(fig)
        written.append(path)
    return written
