"""Weighted modularity and Louvain community detection.

The optimizer alternates greedy local moves with community aggregation
until a full pass stops improving modularity. Node visit order is a
seeded shuffle, ties between equally good target communities go to the
smallest community id, so runs are reproducible given the seed.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from math import log
from typing import Hashable, Mapping, Sequence

import numpy as np

from .graphs import FootballGraph
from .records import CountryRecord

Node = Hashable
WeightedAdj = dict[Node, dict[Node, float]]

PASS_IMPROVEMENT_EPS = 1e-9


@dataclass(frozen=True)
class Partition:
    """Community assignment with its recomputed modularity score."""

    assignment: dict[Node, int]
    modularity: float
    seed: int | None = None
    passes: int = 0

    @property
    def num_communities(self) -> int:
        return len(set(self.assignment.values()))

    def communities(self) -> list[list[Node]]:
        groups: dict[int, list[Node]] = {}
        for node, cid in self.assignment.items():
            groups.setdefault(cid, []).append(node)
        return [sorted(groups[cid], key=str) for cid in sorted(groups)]


def _graph_adj(graph: FootballGraph) -> WeightedAdj:
    return {u: dict(graph.neighbors(u)) for u in graph.nodes}


def _as_adj(graph) -> WeightedAdj:
    if isinstance(graph, FootballGraph):
        return _graph_adj(graph)
    return {u: dict(nbrs) for u, nbrs in graph.items()}


def _degrees(adj: WeightedAdj) -> tuple[dict[Node, float], float]:
    # self-loop weight w counts as 2w in the node degree
    deg = {}
    total = 0.0
    for u, nbrs in adj.items():
        d = 0.0
        for v, w in nbrs.items():
            d += 2 * w if v == u else w
        deg[u] = d
        total += d
    return deg, total / 2.0


def modularity(graph, assignment: Mapping[Node, int]) -> float:
    """Newman modularity Q of a node-to-community assignment.

    Works on a FootballGraph or a weighted adjacency mapping; raises on
    graphs with zero total weight, where Q is undefined.
    """
    adj = _as_adj(graph)
    missing = [u for u in adj if u not in assignment]
    if missing:
        raise ValueError(f"partition does not cover nodes: {missing[:5]}")
    deg, m = _degrees(adj)
    if m <= 0:
        raise ValueError("modularity undefined on a zero-weight graph")

    intra = 0.0
    deg_per_comm: dict[int, float] = Counter()
    for u, nbrs in adj.items():
        cu = assignment[u]
        deg_per_comm[cu] += deg[u]
        for v, w in nbrs.items():
            if v == u:
                intra += 2 * w  # A_uu counts the loop once from each side
            elif assignment[v] == cu:
                intra += w
    q = intra / (2 * m)
    for d in deg_per_comm.values():
        q -= (d / (2 * m)) ** 2
    return q


def _one_level(adj: WeightedAdj, deg, m, rng: random.Random) -> dict[Node, int]:
    """Greedy local-move phase; returns the node-to-community map."""
    nodes = sorted(adj, key=str)
    comm = {u: i for i, u in enumerate(nodes)}
    comm_deg = {comm[u]: deg[u] for u in nodes}

    improved = True
    while improved:
        improved = False
        order = list(nodes)
        rng.shuffle(order)
        for u in order:
            cu = comm[u]
            # weight from u to each neighboring community (loops excluded)
            links: dict[int, float] = {}
            for v, w in adj[u].items():
                if v != u:
                    links[comm[v]] = links.get(comm[v], 0.0) + w
            comm_deg[cu] -= deg[u]
            base = links.get(cu, 0.0) - deg[u] * comm_deg[cu] / (2 * m)
            best_c, best_gain = cu, 0.0
            for c in sorted(links):
                gain = (links[c] - deg[u] * comm_deg.get(c, 0.0) / (2 * m)) - base
                if gain > best_gain + 1e-15 or (
                    gain > best_gain - 1e-15 and c < best_c and gain > 1e-15
                ):
                    best_c, best_gain = c, gain
            comm[u] = best_c
            comm_deg[best_c] = comm_deg.get(best_c, 0.0) + deg[u]
            if best_c != cu:
                improved = True
    return comm


def _aggregate(adj: WeightedAdj, comm: dict[Node, int]) -> WeightedAdj:
    """Collapse communities to super-nodes; intra weight becomes a loop."""
    new: WeightedAdj = {}
    for u, nbrs in adj.items():
        cu = comm[u]
        row = new.setdefault(cu, {})
        for v, w in nbrs.items():
            cv = comm[v]
            if cu == cv:
                if u == v:
                    row[cu] = row.get(cu, 0.0) + w
                elif str(u) < str(v):
                    row[cu] = row.get(cu, 0.0) + w
            else:
                row[cv] = row.get(cv, 0.0) + w
    return new


def louvain(graph, seed: int = 42) -> Partition:
    """Louvain modularity optimization with a reproducible seed."""
    adj = _as_adj(graph)
    deg, m = _degrees(adj)
    if m <= 0:
        raise ValueError("louvain requires positive total edge weight")

    rng = random.Random(seed)
    mapping = {u: u for u in adj}  # original node -> current super-node
    current = adj
    q_prev = None
    passes = 0
    while True:
        deg, m = _degrees(current)
        level = _one_level(current, deg, m, rng)
        mapping = {u: level[s] for u, s in mapping.items()}
        q_now = modularity(adj, mapping)
        passes += 1
        if q_prev is not None and q_now - q_prev <= PASS_IMPROVEMENT_EPS:
            break
        q_prev = q_now
        current = _aggregate(current, level)
        if len(current) == len({level[u] for u in level}) and len(current) <= 1:
            break

    # contiguous ids ordered by smallest member node
    groups: dict[int, list[Node]] = {}
    for u, c in mapping.items():
        groups.setdefault(c, []).append(u)
    ordered = sorted(groups.values(), key=lambda ns: min(str(n) for n in ns))
    assignment = {u: i for i, ns in enumerate(ordered) for u in ns}
    return Partition(
        assignment=assignment,
        modularity=modularity(adj, assignment),
        seed=seed,
        passes=passes,
    )


def reorder_by_community(
    matrix: np.ndarray, names: Sequence[str], assignment: Mapping[str, int]
) -> tuple[np.ndarray, list[str]]:
    """Permute rows/columns so communities form contiguous blocks.

    Returns the permuted matrix and the node order realizing it
    (community id ascending, lexicographic inside each community).
    """
    if matrix.shape != (len(names), len(names)):
        raise ValueError("matrix dimension does not match the name list")
    missing = [n for n in names if n not in assignment]
    if missing:
        raise ValueError(f"partition does not cover nodes: {missing[:5]}")
    order = sorted(range(len(names)), key=lambda i: (assignment[names[i]], names[i]))
    permuted = matrix[np.ix_(order, order)]
    return permuted, [names[i] for i in order]


def normalized_mutual_information(
    labels_a: Sequence[Hashable], labels_b: Sequence[Hashable]
) -> float:
    """NMI with sqrt normalization; defined as 0 when either side is constant."""
    n = len(labels_a)
    if n != len(labels_b) or n == 0:
        raise ValueError("label sequences must be equal-length and non-empty")
    ca = Counter(labels_a)
    cb = Counter(labels_b)
    joint = Counter(zip(labels_a, labels_b))
    mi = 0.0
    for (a, b), nab in joint.items():
        mi += (nab / n) * log(n * nab / (ca[a] * cb[b]))
    ha = -sum((c / n) * log(c / n) for c in ca.values())
    hb = -sum((c / n) * log(c / n) for c in cb.values())
    if mi <= 0 or ha == 0 or hb == 0:
        return 0.0
    return mi / (ha * hb) ** 0.5


def confederation_agreement(
    partition: Partition, countries: Sequence[CountryRecord]
) -> float:
    """NMI between detected communities and confederation labels.

    Only nodes with a known confederation participate; fewer than two such
    nodes leave the measure undefined.
    """
    confed = {c.name: c.confederation for c in countries}
    nodes = sorted(u for u in partition.assignment if u in confed)
    if len(nodes) < 2:
        raise ValueError("need at least 2 nodes with confederation labels")
    detected = [partition.assignment[u] for u in nodes]
    truth = [confed[u] for u in nodes]
    return normalized_mutual_information(detected, truth)
