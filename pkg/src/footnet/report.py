"""Delimited/JSON report writers and matplotlib figure rendering.

Every pipeline emits plain CSV/JSON tables; the figure helpers render
the corresponding plots (similarity heatmaps, efficiency series,
removal curves, strength/overlap scatter) to PNG files next to them.
"""

from __future__ import annotations

import json
from collections import Counter
from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .community import Partition
from .mining import FrequentRelation, relations_csv_rows
from .similarity import SimilarityMatrix, TemporalState
from .weakties import EdgeAnnotation


def write_lines(path: Path, lines: Sequence[str]) -> None:
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_json(path: Path, payload) -> None:
    path.write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def write_partition_csv(path: Path, partition: Partition) -> None:
    lines = ["node,community"]
    for node in sorted(partition.assignment, key=str):
        lines.append(f"{node},{partition.assignment[node]}")
    write_lines(path, lines)


def write_partition_meta(path: Path, partition: Partition) -> None:
    write_json(
        path,
        {
            "seed": partition.seed,
            "passes": partition.passes,
            "final_modularity": partition.modularity,
            "num_communities": partition.num_communities,
        },
    )


def write_node_values_csv(path: Path, values: Mapping[str, float]) -> None:
    lines = ["team,value"]
    for team in sorted(values):
        lines.append(f"{team},{values[team]:.10g}")
    write_lines(path, lines)


def write_series_csv(path: Path, labels: Sequence[str], values: Sequence[float]) -> None:
    lines = ["decade,value"]
    for label, value in zip(labels, values):
        lines.append(f"{label},{value:.10g}")
    write_lines(path, lines)


def write_confed_counts_csv(
    path: Path, counts: Mapping[str, Counter]
) -> None:
    lines = ["decade,confed_a,confed_b,matches"]
    for decade in counts:
        for (a, b), c in sorted(counts[decade].items()):
            lines.append(f"{decade},{a},{b},{c}")
    write_lines(path, lines)


def write_annotations_csv(path: Path, annotations: Sequence[EdgeAnnotation]) -> None:
    lines = ["u,v,strength,overlap,cross_confed,world_cup"]
    for a in annotations:
        u, v = a.edge
        lines.append(
            f"{u},{v},{a.tie_strength},{a.overlap:.10g},"
            f"{a.cross_confederation},{a.world_cup}"
        )
    write_lines(path, lines)


def write_curve_csv(path: Path, curve: Sequence[tuple[int, float]]) -> None:
    lines = ["removed,relative_size"]
    for removed, rel in curve:
        lines.append(f"{removed},{rel:.10g}")
    write_lines(path, lines)


def write_relations_csv(path: Path, relations: Sequence[FrequentRelation]) -> None:
    write_lines(path, relations_csv_rows(relations))


def write_similarity_csv(path: Path, matrix: SimilarityMatrix) -> None:
    header = "year," + ",".join(str(y) for y in matrix.years)
    lines = [header]
    for i, year in enumerate(matrix.years):
        row = ",".join(f"{v:.10g}" for v in matrix.values[i])
        lines.append(f"{year},{row}")
    write_lines(path, lines)


def write_similarity_json(path: Path, matrix: SimilarityMatrix) -> None:
    write_json(
        path,
        {"years": list(matrix.years), "values": matrix.values.tolist()},
    )


def write_states_csv(path: Path, states: Sequence[TemporalState]) -> None:
    lines = ["state,year"]
    for state in states:
        for year in state.years:
            lines.append(f"{state.label},{year}")
    write_lines(path, lines)


# ---------------------------------------------------------------------------
# figure rendering


def _save(fig, path: Path) -> None:
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def plot_similarity_heatmap(path: Path, matrix: SimilarityMatrix, title: str) -> None:
    fig, ax = plt.subplots(figsize=(6.5, 5.5))
    im = ax.imshow(
        matrix.values,
        origin="lower",
        cmap="jet",
        vmin=0.0,
        vmax=1.0,
        extent=(matrix.years[0], matrix.years[-1], matrix.years[0], matrix.years[-1]),
    )
    ax.set_xlabel("year")
    ax.set_ylabel("year")
    ax.set_title(title)
    fig.colorbar(im, ax=ax, label="similarity")
    _save(fig, path)


def plot_adjacency_heatmap(path: Path, matrix: np.ndarray, title: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 5.5))
    with np.errstate(divide="ignore"):
        shown = np.log10(matrix.astype(float) + 1.0)
    im = ax.imshow(shown, cmap="viridis")
    ax.set_xlabel("node index")
    ax.set_ylabel("node index")
    ax.set_title(title)
    fig.colorbar(im, ax=ax, label="log10(matches + 1)")
    _save(fig, path)


def plot_series(path: Path, labels: Sequence[str], values: Sequence[float], ylabel: str) -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(range(len(values)), values, marker="o")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=45, ha="right")
    ax.set_ylabel(ylabel)
    ax.grid(True, alpha=0.3)
    _save(fig, path)


def plot_confed_counts(path: Path, counts: Mapping[str, Counter], within: bool) -> None:
    decades = list(counts)
    keys = sorted({k for c in counts.values() for k in c if (k[0] == k[1]) == within})
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for key in keys:
        series = [counts[d].get(key, 0) for d in decades]
        label = key[0] if within else f"{key[0]}-{key[1]}"
        ax.plot(range(len(decades)), series, marker="o", label=label)
    ax.set_xticks(range(len(decades)))
    ax.set_xticklabels(decades, rotation=45, ha="right")
    ax.set_ylabel("matches")
    ax.set_title("within confederations" if within else "between confederations")
    ax.legend(fontsize=7, ncol=2)
    _save(fig, path)


def plot_removal_curves(
    path: Path,
    highest: Sequence[tuple[int, float]],
    lowest: Sequence[tuple[int, float]],
    key: str,
) -> None:
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    ax.plot([p[0] for p in highest], [p[1] for p in highest], ".", ms=3,
            color="tab:blue", label=f"highest {key} first")
    ax.plot([p[0] for p in lowest], [p[1] for p in lowest], ".", ms=3,
            color="tab:red", label=f"lowest {key} first")
    ax.set_xlabel("edges removed")
    ax.set_ylabel("relative giant component size")
    ax.legend()
    ax.grid(True, alpha=0.3)
    _save(fig, path)


def plot_strength_overlap_scatter(
    path: Path, annotations: Sequence[EdgeAnnotation], flag: str
) -> None:
    """Scatter of strength vs overlap, colored by a boolean edge flag."""
    if flag == "world_cup":
        marked = [a for a in annotations if a.world_cup]
        rest = [a for a in annotations if not a.world_cup]
        labels = ("World Cup", "other")
    else:
        marked = [a for a in annotations if a.cross_confederation]
        rest = [a for a in annotations if not a.cross_confederation]
        labels = ("between confederations", "within confederation")
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    ax.plot([a.tie_strength for a in rest], [a.overlap for a in rest],
            "x", ms=3, color="tab:blue", alpha=0.5, label=labels[1])
    ax.plot([a.tie_strength for a in marked], [a.overlap for a in marked],
            "o", ms=3, mfc="none", color="tab:red", alpha=0.6, label=labels[0])
    ax.set_xlabel("tie strength")
    ax.set_ylabel("edge overlap")
    ax.legend()
    _save(fig, path)
