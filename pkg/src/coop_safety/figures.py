"""Matplotlib figures for a report: FSRs per component and ASIL distribution."""

from __future__ import annotations

import os
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from coop_safety.model import Asil  # noqa: E402

_SEGMENTS = (
    ("vehicular_fulfilled", "vehicular, fulfilled", "#2b7a3d"),
    ("vehicular_unfulfilled", "vehicular, unfulfilled", "#9fd4a9"),
    ("cooperative_fulfilled", "cooperative, fulfilled", "#1f4e9c"),
    ("cooperative_unfulfilled", "cooperative, unfulfilled", "#9db8e6"),
    ("vehicular_unassessed", "vehicular, not assessed", "#bbbbbb"),
    ("cooperative_unassessed", "cooperative, not assessed", "#888888"),
)


def fsrs_per_component(doc: dict, path: str | os.PathLike) -> Path:
    """Stacked bar per functional component split by perspective and verdict."""
    rows = doc["counts"]["fsrs_per_component"]
    names = list(rows)
    fig, ax = plt.subplots(figsize=(max(6.0, 0.9 * len(names) + 2), 4.5))
    bottom = [0] * len(names)
    for key, label, color in _SEGMENTS:
        values = [rows[n].get(key, 0) for n in names]
        if not any(values):
            continue
        ax.bar(names, values, bottom=bottom, label=label, color=color)
        bottom = [b + v for b, v in zip(bottom, values)]
    for i, total in enumerate(bottom):
        ax.text(i, total + 0.1, str(total), ha="center", va="bottom", fontsize=8)
    ax.set_ylabel("FSRs")
    ax.set_title("FSRs per functional component")
    ax.tick_params(axis="x", labelrotation=35)
    for label in ax.get_xticklabels():
        label.set_horizontalalignment("right")
    if names:
        ax.legend(fontsize=8)
    else:
        ax.text(0.5, 0.5, "no FSRs derived", ha="center", va="center", transform=ax.transAxes)
    fig.tight_layout()
    return _save(fig, path)


def asil_distribution(doc: dict, path: str | os.PathLike) -> Path:
    hist = doc["counts"]["asil_histogram"]
    levels = [a.name for a in Asil]
    fig, ax = plt.subplots(figsize=(6, 4))
    width = 0.4
    xs = range(len(levels))
    ax.bar([x - width / 2 for x in xs], [hist["goals"][lv] for lv in levels], width, label="safety goals")
    ax.bar([x + width / 2 for x in xs], [hist["fsrs"][lv] for lv in levels], width, label="FSRs")
    ax.set_xticks(list(xs), levels)
    ax.set_xlabel("ASIL")
    ax.set_ylabel("count")
    ax.set_title("ASIL distribution")
    ax.legend()
    fig.tight_layout()
    return _save(fig, path)


def _save(fig, path) -> Path:
    path = Path(path)
    # fixed metadata keeps PNG bytes stable between runs
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def write_figures(doc: dict, directory: str | os.PathLike) -> list[Path]:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    return [
        fsrs_per_component(doc, out / "fsrs_per_component.png"),
        asil_distribution(doc, out / "asil_distribution.png"),
    ]
