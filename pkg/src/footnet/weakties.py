"""Tie strength, neighborhood overlap, and edge-removal experiments.

Tie strength is the raw edge weight (matches played); overlap is the
shared-neighbor ratio on the binarized graph. Boundary fractions and the
giant-component removal curves use a deterministic total order: the sort
key first, then lexicographic endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Edge, FootballGraph, edge_key
from .records import CountryRecord, MatchRecord

WORLD_CUP_LABEL = "World Cup"


def neighborhood_overlap(graph: FootballGraph, u: str, v: str) -> float:
    """Shared neighbors over union of neighbors, endpoints excluded.

    Both endpoints having no other neighbor makes the ratio 0/0; such a
    bridge is treated as maximally weak and scores 0.
    """
    if not graph.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not in graph")
    nu = set(graph.neighbors(u)) - {v}
    nv = set(graph.neighbors(v)) - {u}
    union = len(nu | nv)
    if union == 0:
        return 0.0
    return len(nu & nv) / union


@dataclass(frozen=True)
class EdgeAnnotation:
    edge: Edge
    tie_strength: int
    overlap: float
    cross_confederation: bool
    world_cup: bool


def annotate_edges(
    graph: FootballGraph,
    matches: Iterable[MatchRecord],
    countries: Sequence[CountryRecord],
) -> list[EdgeAnnotation]:
    """One annotation per edge, in lexicographic edge order.

    The World Cup flag marks pairs with at least one finals-tournament
    match inside the graph's horizon; qualifiers carry a different label
    and do not count.
    """
    confed = {c.name: c.confederation for c in countries}
    start, end = graph.horizon if graph.horizon else (None, None)
    wc_pairs: set[Edge] = set()
    for m in matches:
        if m.tournament.strip() != WORLD_CUP_LABEL:
            continue
        if start is not None and not (start <= m.date <= end):
            continue
        wc_pairs.add(edge_key(m.home, m.guest))

    out = []
    for (u, v), w in sorted(graph.weights.items()):
        cu, cv = confed.get(u), confed.get(v)
        out.append(
            EdgeAnnotation(
                edge=(u, v),
                tie_strength=w,
                overlap=neighborhood_overlap(graph, u, v),
                cross_confederation=cu != cv,
                world_cup=(u, v) in wc_pairs,
            )
        )
    return out


def _sorted_edges(
    annotations: Sequence[EdgeAnnotation], key: str, side: str
) -> list[EdgeAnnotation]:
    if key not in ("strength", "overlap"):
        raise ValueError(f"unknown sort key {key!r}")
    if side not in ("highest", "lowest"):
        raise ValueError(f"unknown side {side!r}")
    attr = "tie_strength" if key == "strength" else "overlap"
    reverse = side == "highest"
    # ties broken lexicographically on endpoints regardless of side
    return sorted(
        annotations,
        key=lambda a: ((-getattr(a, attr)) if reverse else getattr(a, attr), a.edge),
    )


def boundary_fraction(
    annotations: Sequence[EdgeAnnotation], key: str, k: int, side: str
) -> float:
    """Fraction of cross-confederation edges among the k extreme edges."""
    if k > len(annotations):
        raise ValueError(f"k={k} exceeds edge count {len(annotations)}")
    chosen = _sorted_edges(annotations, key, side)[:k]
    if not chosen:
        return 0.0
    return sum(a.cross_confederation for a in chosen) / len(chosen)


def giant_component_curve(
    graph: FootballGraph,
    annotations: Sequence[EdgeAnnotation],
    key: str,
    side: str,
) -> list[tuple[int, float]]:
    """Relative giant-component size after each successive edge removal.

    Edges are removed one at a time in the deterministic extreme-first
    order until none remain; the curve has one point per removal. The
    sizes come from a reverse union-find sweep, which the test suite
    checks against from-scratch recomputation.
    """
    if graph.num_edges == 0:
        raise ValueError("graph has no edges to remove")
    order = [a.edge for a in _sorted_edges(annotations, key, side)]
    if len(order) != graph.num_edges:
        raise ValueError("annotations do not cover the graph's edges")

    nodes = list(graph.nodes)
    index = {u: i for i, u in enumerate(nodes)}
    n = len(nodes)

    parent = list(range(n))
    size = [1] * n

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    giant = 1
    # process removals in reverse: start from the empty graph and add
    # edges back, recording the giant size before each addition
    sizes_after_removal = []
    for u, v in reversed(order):
        sizes_after_removal.append(giant)
        ru, rv = find(index[u]), find(index[v])
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            giant = max(giant, size[ru])
    sizes_after_removal.reverse()
    return [(i + 1, s / n) for i, s in enumerate(sizes_after_removal)]


def relative_giant_size(graph: FootballGraph) -> float:
    """Largest component size over node count for the intact graph."""
    if graph.num_nodes == 0:
        return 0.0
    seen: set[str] = set()
    best = 1
    for start in graph.nodes:
        if start in seen:
            continue
        stack = [start]
        comp = {start}
        while stack:
            u = stack.pop()
            for v in graph.neighbors(u):
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        best = max(best, len(comp))
    return best / graph.num_nodes


def max_single_step_drop(
    curve: Sequence[tuple[int, float]], initial: float = 1.0
) -> float:
    """Largest one-removal decrease in relative giant size.

    ``initial`` is the intact graph's relative giant size, so the very
    first removal can register a drop too.
    """
    drops = []
    prev = initial
    for _, rel in curve:
        drops.append(prev - rel)
        prev = rel
    return max(drops) if drops else 0.0
