"""Weighted undirected snapshot graphs built from match records.

A graph covers one closed time horizon: nodes are the teams that played
at least once inside it, edge weights count the matches between each
pair. Graphs are immutable after construction; per-year and per-decade
series are plain ordered lists of snapshots.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .records import CountryRecord, MatchRecord, filter_horizon

Edge = tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class FootballGraph:
    nodes: tuple[str, ...]
    weights: dict[Edge, int]
    horizon: tuple[date, date] | None = None
    _adj: dict[str, dict[str, int]] = field(repr=False, default=None)  # type: ignore[assignment]

    def __post_init__(self):
        adj: dict[str, dict[str, int]] = {u: {} for u in self.nodes}
        for (u, v), w in self.weights.items():
            if u == v:
                raise ValueError(f"self-loop on {u!r}")
            if w < 1:
                raise ValueError(f"non-positive weight on {(u, v)}")
            adj[u][v] = w
            adj[v][u] = w
        object.__setattr__(self, "_adj", adj)

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_edges(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights.values())

    def neighbors(self, u: str) -> dict[str, int]:
        return self._adj[u]

    def degree(self, u: str) -> int:
        """Weighted degree: total matches the team played in the horizon."""
        return sum(self._adj[u].values())

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self.weights

    def weight(self, u: str, v: str) -> int:
        return self.weights[edge_key(u, v)]


def build_graph(
    matches: Iterable[MatchRecord], start: date, end: date
) -> FootballGraph:
    """Aggregate matches inside [start, end] into a weighted snapshot."""
    selected = filter_horizon(list(matches), start, end)
    weights: dict[Edge, int] = {}
    nodes: set[str] = set()
    for m in selected:
        nodes.add(m.home)
        nodes.add(m.guest)
        key = edge_key(m.home, m.guest)
        weights[key] = weights.get(key, 0) + 1
    return FootballGraph(tuple(sorted(nodes)), weights, horizon=(start, end))


def node_universe(countries: Sequence[CountryRecord]) -> tuple[str, ...]:
    """Fixed lexicographic ordering of all canonical team names."""
    return tuple(sorted(c.name for c in countries))


def adjacency(
    graph: FootballGraph, universe: Sequence[str] | None = None
) -> np.ndarray:
    """Symmetric match-count matrix, in graph order or universe order."""
    names = tuple(universe) if universe is not None else graph.nodes
    index = {name: i for i, name in enumerate(names)}
    missing = [u for u in graph.nodes if u not in index]
    if missing:
        raise ValueError(f"graph nodes outside universe: {missing[:5]}")
    mat = np.zeros((len(names), len(names)), dtype=np.int64)
    for (u, v), w in graph.weights.items():
        i, j = index[u], index[v]
        mat[i, j] = w
        mat[j, i] = w
    return mat


def yearly_series(
    matches: Iterable[MatchRecord], start_year: int, end_year: int
) -> list[FootballGraph]:
    """One snapshot per calendar year, Jan 1 through Dec 31."""
    if start_year > end_year:
        raise ValueError("start_year after end_year")
    matches = list(matches)
    return [
        build_graph(matches, date(y, 1, 1), date(y, 12, 31))
        for y in range(start_year, end_year + 1)
    ]


def decade_series(
    matches: Iterable[MatchRecord], start_year: int, end_year: int
) -> list[FootballGraph]:
    """Ten-year snapshots; the year span must divide evenly into decades."""
    span = end_year - start_year + 1
    if span <= 0 or span % 10 != 0:
        raise ValueError(f"year range {start_year}-{end_year} is not whole decades")
    matches = list(matches)
    return [
        build_graph(matches, date(y, 1, 1), date(y + 9, 12, 31))
        for y in range(start_year, end_year + 1, 10)
    ]


def decade_label(graph: FootballGraph) -> str:
    a, b = graph.horizon  # type: ignore[misc]
    return f"{a.year}-{b.year}"


def binarize(graph: FootballGraph) -> FootballGraph:
    """Same topology with all weights forced to 1."""
    return FootballGraph(
        graph.nodes, {e: 1 for e in graph.weights}, horizon=graph.horizon
    )


def export_graph(
    graph: FootballGraph,
    edges_path: str | Path,
    sidecar_path: str | Path,
    countries: Sequence[CountryRecord] | None = None,
) -> None:
    """Write the ``u,v,weight`` edge list plus a JSON sidecar.

    The sidecar carries the horizon, the node list, and (when country
    records are supplied) per-node coordinates and confederation for
    external plotting.
    """
    edges_path = Path(edges_path)
    lines = ["u,v,weight"]
    for (u, v), w in sorted(graph.weights.items()):
        lines.append(f"{u},{v},{w}")
    edges_path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    by_name = {c.name: c for c in countries} if countries else {}
    node_entries = []
    for name in graph.nodes:
        entry: dict = {"name": name}
        c = by_name.get(name)
        if c is not None:
            entry.update(
                lat=c.latitude, lon=c.longitude, confederation=c.confederation
            )
        node_entries.append(entry)
    sidecar = {
        "horizon": [d.isoformat() for d in graph.horizon] if graph.horizon else None,
        "nodes": node_entries,
    }
    Path(sidecar_path).write_text(
        json.dumps(sidecar, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
