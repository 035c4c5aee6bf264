"""Three-level graph similarity over a yearly series and state extraction.

Four node-level matrices (one per measure), one graph-level matrix, and
one vertex-edge-overlap matrix are averaged entrywise into the final
similarity matrix; Louvain on that matrix, viewed as a complete weighted
graph over years, yields the temporal states.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .community import Partition, louvain
from .graphs import FootballGraph
from .measures import NODE_MEASURES, graph_features, node_measures

CORRELATION_SLACK = 1e-12


@dataclass(frozen=True)
class SimilarityMatrix:
    years: tuple[int, ...]
    values: np.ndarray  # symmetric, entries in [0, 1], unit diagonal

    def __post_init__(self):
        v = self.values
        if v.shape != (len(self.years), len(self.years)):
            raise ValueError("matrix dimension does not match year list")
        if not np.allclose(v, v.T, atol=1e-12):
            raise ValueError("similarity matrix is not symmetric")
        if v.size and (v.min() < -1e-12 or v.max() > 1 + 1e-12):
            raise ValueError("similarity entries outside [0, 1]")


@dataclass(frozen=True)
class TemporalState:
    label: int
    years: tuple[int, ...]


def correlation_to_similarity(c: float) -> float:
    """Map a correlation in [-1, 1] onto [0, 1] via (c + 1) / 2."""
    if abs(c) > 1 + CORRELATION_SLACK:
        raise ValueError(f"correlation {c} outside [-1, 1]")
    c = min(1.0, max(-1.0, c))
    return (c + 1.0) / 2.0


def _row_correlation_similarity(rows: np.ndarray) -> np.ndarray:
    """Pairwise Pearson rows -> similarity, zero-variance rows -> c = 0."""
    n = rows.shape[0]
    centered = rows - rows.mean(axis=1, keepdims=True)
    norms = np.linalg.norm(centered, axis=1)
    out = np.full((n, n), 0.5)
    nz = norms > 0
    if nz.any():
        unit = np.zeros_like(centered)
        unit[nz] = centered[nz] / norms[nz, None]
        corr = np.clip(unit @ unit.T, -1.0, 1.0)
        block = (corr + 1.0) / 2.0
        mask = np.outer(nz, nz)
        out[mask] = block[mask]
    np.fill_diagonal(out, 1.0)
    return out


def _years_of(yearly: Sequence[FootballGraph]) -> tuple[int, ...]:
    years = []
    for g in yearly:
        if g.horizon is None:
            raise ValueError("yearly graphs must carry their horizon")
        years.append(g.horizon[0].year)
    return tuple(years)


def node_level_matrix(
    yearly: Sequence[FootballGraph], measure: str, universe: Sequence[str]
) -> SimilarityMatrix:
    """Similarity of years through one node-level measure.

    Each year contributes a universe-aligned vector (absent teams are 0);
    entries are the correlation-mapped similarities between year vectors.
    """
    if measure not in NODE_MEASURES:
        raise ValueError(f"unknown measure {measure!r}")
    per_year = [node_measures(g, measure, universe) for g in yearly]
    rows = np.array(
        [[values[name] for name in universe] for values in per_year]
    )
    return SimilarityMatrix(_years_of(yearly), _row_correlation_similarity(rows))


def graph_level_matrix(yearly: Sequence[FootballGraph]) -> SimilarityMatrix:
    """Similarity of years through the nine-entry graph feature vectors.

    Feature columns are z-normalized first (constant columns become all
    zeros), then rows are compared like the node-level case.
    """
    if len(yearly) < 2:
        raise ValueError("graph-level similarity needs at least 2 graphs")
    feats = np.array([graph_features(g).as_array() for g in yearly])
    mean = feats.mean(axis=0)
    std = feats.std(axis=0)
    znorm = np.zeros_like(feats)
    nz = std > 0
    znorm[:, nz] = (feats[:, nz] - mean[nz]) / std[nz]
    return SimilarityMatrix(_years_of(yearly), _row_correlation_similarity(znorm))


def veo_similarity(g1: FootballGraph, g2: FootballGraph) -> float:
    """Vertex-edge overlap of two graphs, weights ignored."""
    v1, v2 = set(g1.nodes), set(g2.nodes)
    e1, e2 = set(g1.weights), set(g2.weights)
    denom = len(e1) + len(e2) + len(v1) + len(v2)
    if denom == 0:
        return 0.0
    return 2.0 * (len(e1 & e2) + len(v1 & v2)) / denom


def veo_matrix(yearly: Sequence[FootballGraph]) -> SimilarityMatrix:
    n = len(yearly)
    values = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            values[i, j] = values[j, i] = veo_similarity(yearly[i], yearly[j])
        values[i, i] = 1.0  # self-similarity by definition, empty year included
    return SimilarityMatrix(_years_of(yearly), values)


def final_matrix(components: Sequence[SimilarityMatrix]) -> SimilarityMatrix:
    """Entrywise mean of the component similarity matrices."""
    if not components:
        raise ValueError("no component matrices given")
    years = components[0].years
    for c in components[1:]:
        if c.years != years:
            raise ValueError("component matrices cover different year lists")
    mean = np.mean([c.values for c in components], axis=0)
    return SimilarityMatrix(years, mean)


def similarity_pipeline(
    yearly: Sequence[FootballGraph], universe: Sequence[str]
) -> tuple[dict[str, SimilarityMatrix], SimilarityMatrix]:
    """All six component matrices plus their average."""
    components = {
        m: node_level_matrix(yearly, m, universe) for m in NODE_MEASURES
    }
    components["graph_level"] = graph_level_matrix(yearly)
    components["veo"] = veo_matrix(yearly)
    return components, final_matrix(list(components.values()))


def extract_states(
    final: SimilarityMatrix, seed: int = 42
) -> tuple[list[TemporalState], Partition]:
    """Louvain over the complete weighted year graph of the final matrix.

    States are relabeled 0..k-1 by earliest member year; temporal
    contiguity is not enforced.
    """
    years = final.years
    adj: dict[int, dict[int, float]] = {y: {} for y in years}
    n = len(years)
    for i in range(n):
        for j in range(i + 1, n):
            w = float(final.values[i, j])
            if w > 0:
                adj[years[i]][years[j]] = w
                adj[years[j]][years[i]] = w
    partition = louvain(adj, seed=seed)
    groups: dict[int, list[int]] = {}
    for year, cid in partition.assignment.items():
        groups.setdefault(cid, []).append(year)
    ordered = sorted(groups.values(), key=min)
    states = [
        TemporalState(label=i, years=tuple(sorted(ys)))
        for i, ys in enumerate(ordered)
    ]
    return states, partition
