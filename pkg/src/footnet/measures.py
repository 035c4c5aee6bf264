"""Node-level and graph-level descriptive measures.

Distances, clustering, closeness and efficiency are all computed on the
binarized graph (hop counts); only degree keeps the match-count weights.
Small-graph behaviour is pinned by brute-force oracles in the test suite.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graphs import FootballGraph, adjacency
from .records import CountryRecord

NODE_MEASURES = ("degree", "clustering_coefficient", "closeness", "local_efficiency")

UNKNOWN_CONFEDERATION = "unknown"


def bfs_distances(adj: dict[str, set[str]], source: str) -> dict[str, int]:
    """Hop distances from source to every reachable node."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def _neighbor_sets(graph: FootballGraph) -> dict[str, set[str]]:
    return {u: set(graph.neighbors(u)) for u in graph.nodes}


def _efficiency_sum(adj: dict[str, set[str]]) -> float:
    """Sum of 1/d over ordered reachable pairs (0 for unreachable)."""
    total = 0.0
    for u in adj:
        for v, d in bfs_distances(adj, u).items():
            if v != u:
                total += 1.0 / d
    return total


def global_efficiency(graph: FootballGraph) -> float:
    """Average inverse hop distance over ordered pairs, in [0, 1].

    The normalizing ideal graph is complete, whose efficiency is 1, so the
    normalized value equals the raw average. Graphs with fewer than two
    nodes score 0.
    """
    n = graph.num_nodes
    if n <= 1:
        return 0.0
    return _efficiency_sum(_neighbor_sets(graph)) / (n * (n - 1))


def _clustering(u: str, adj: dict[str, set[str]]) -> float:
    nbrs = adj[u]
    k = len(nbrs)
    if k < 2:
        return 0.0
    links = 0
    for v in nbrs:
        links += len(adj[v] & nbrs)
    return links / (k * (k - 1))


def _closeness(u: str, adj: dict[str, set[str]], n: int) -> float:
    # Wasserman-Faust composite; handles disconnected graphs gracefully.
    if n <= 1:
        return 0.0
    dist = bfs_distances(adj, u)
    reachable = len(dist) - 1
    if reachable == 0:
        return 0.0
    total = sum(dist.values())
    return (reachable / (n - 1)) * (reachable / total)


def _local_efficiency(u: str, adj: dict[str, set[str]]) -> float:
    nbrs = sorted(adj[u])
    k = len(nbrs)
    if k < 2:
        return 0.0
    sub = {v: adj[v] & set(nbrs) for v in nbrs}
    return _efficiency_sum(sub) / (k * (k - 1))


def node_measures(
    graph: FootballGraph, measure: str, universe: Sequence[str]
) -> dict[str, float]:
    """One value per universe name; teams absent from the graph get 0."""
    if measure not in NODE_MEASURES:
        raise ValueError(f"unknown measure {measure!r}")
    values = {name: 0.0 for name in universe}
    index = set(values)
    outside = [u for u in graph.nodes if u not in index]
    if outside:
        raise ValueError(f"graph nodes outside universe: {outside[:5]}")

    adj = _neighbor_sets(graph)
    n = graph.num_nodes
    for u in graph.nodes:
        if measure == "degree":
            values[u] = float(graph.degree(u))
        elif measure == "clustering_coefficient":
            values[u] = _clustering(u, adj)
        elif measure == "closeness":
            values[u] = _closeness(u, adj, n)
        else:
            values[u] = _local_efficiency(u, adj)
    return values


@dataclass(frozen=True)
class GraphFeatureVector:
    num_nodes: float
    num_edges: float
    average_path_length: float
    global_efficiency: float
    diameter: float
    radius: float
    graph_energy: float
    link_density: float
    transitivity: float

    def as_array(self) -> np.ndarray:
        return np.array(
            [
                self.num_nodes, self.num_edges, self.average_path_length,
                self.global_efficiency, self.diameter, self.radius,
                self.graph_energy, self.link_density, self.transitivity,
            ]
        )


def _largest_component(adj: dict[str, set[str]]) -> list[str]:
    best: list[str] = []
    seen: set[str] = set()
    for u in sorted(adj):
        if u in seen:
            continue
        comp = sorted(bfs_distances(adj, u))
        seen.update(comp)
        # ties broken by the component holding the smallest node, i.e. the
        # one discovered first in sorted order
        if len(comp) > len(best):
            best = comp
    return best


def _transitivity(adj: dict[str, set[str]]) -> float:
    closed = 0
    triples = 0
    for u in adj:
        k = len(adj[u])
        triples += k * (k - 1) // 2
        for v in adj[u]:
            closed += len(adj[u] & adj[v])
    # each triangle is counted twice per corner across the double loop
    triangles = closed // 6
    if triples == 0:
        return 0.0
    return 3.0 * triangles / triples


def _hop_matrix(binary: np.ndarray) -> np.ndarray:
    """All-pairs hop distances by frontier expansion; inf when unreachable."""
    n = binary.shape[0]
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    reached = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=bool)
    hops = 0
    step = binary.astype(np.uint8)
    while frontier.any():
        hops += 1
        frontier = (frontier.astype(np.uint8) @ step > 0) & ~reached
        dist[frontier] = hops
        reached |= frontier
    return dist


def graph_features(graph: FootballGraph) -> GraphFeatureVector:
    """The nine-entry feature vector used by the graph-level similarity."""
    n = graph.num_nodes
    if n == 0:
        return GraphFeatureVector(0, 0, 0, 0, 0, 0, 0, 0, 0)

    m = graph.num_edges
    binary = adjacency(graph) > 0
    dist = _hop_matrix(binary)
    off_diagonal = ~np.eye(n, dtype=bool)
    connected = np.isfinite(dist) & off_diagonal
    path_count = int(connected.sum())
    apl = float(dist[connected].sum()) / path_count if path_count else 0.0
    geff = float((1.0 / dist[connected]).sum()) / (n * (n - 1)) if n > 1 else 0.0

    # largest component, ties broken toward the smallest member name
    seen = np.zeros(n, dtype=bool)
    best: np.ndarray | None = None
    for i in range(n):
        if seen[i]:
            continue
        members = np.isfinite(dist[i])
        seen |= members
        if best is None or members.sum() > best.sum():
            best = members
    if best is not None and best.sum() > 1:
        block = dist[np.ix_(best, best)]
        eccentricities = block.max(axis=1)
        diameter = float(eccentricities.max())
        radius = float(eccentricities.min())
    else:
        diameter = radius = 0.0

    if m:
        eigenvalues = np.linalg.eigvalsh(binary.astype(float))
        energy = float(np.abs(eigenvalues).sum())
    else:
        energy = 0.0

    adjacency_int = binary.astype(np.int64)
    degrees = adjacency_int.sum(axis=1)
    triples = int((degrees * (degrees - 1) // 2).sum())
    triangles = int(np.trace(adjacency_int @ adjacency_int @ adjacency_int)) // 6
    transitivity = 3.0 * triangles / triples if triples else 0.0

    density = 2.0 * m / (n * (n - 1)) if n > 1 else 0.0
    return GraphFeatureVector(
        num_nodes=float(n),
        num_edges=float(m),
        average_path_length=apl,
        global_efficiency=geff,
        diameter=diameter,
        radius=radius,
        graph_energy=energy,
        link_density=density,
        transitivity=transitivity,
    )


ConfedKey = tuple[str, str]


def confed_edge_counts(
    decades: Iterable[FootballGraph], countries: Sequence[CountryRecord]
) -> dict[str, Counter]:
    """Match counts within and between confederations per decade.

    Keys are sorted confederation pairs; a pair of equal labels is the
    within-confederation bucket. Teams without a country record land in
    the reserved "unknown" bucket so decade totals always balance.
    """
    confed = {c.name: c.confederation for c in countries}
    out: dict[str, Counter] = {}
    for g in decades:
        a, b = g.horizon  # type: ignore[misc]
        label = f"{a.year}-{b.year}"
        counts: Counter = Counter()
        for (u, v), w in g.weights.items():
            cu = confed.get(u, UNKNOWN_CONFEDERATION)
            cv = confed.get(v, UNKNOWN_CONFEDERATION)
            key: ConfedKey = (cu, cv) if cu <= cv else (cv, cu)
            counts[key] += w
        out[label] = counts
    return out


def efficiency_series(decades: Iterable[FootballGraph]) -> list[float]:
    """Global efficiency of each decade snapshot, in order."""
    return [global_efficiency(g) for g in decades]
