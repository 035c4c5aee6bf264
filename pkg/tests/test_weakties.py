"""Overlap, boundary fractions, and edge-removal curves with oracles."""

import random
from datetime import date

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from footnet import (
    annotate_edges, boundary_fraction, giant_component_curve,
    max_single_step_drop, neighborhood_overlap, relative_giant_size,
)
from footnet.graphs import FootballGraph, build_graph
from footnet.records import CountryRecord
from footnet.weakties import _sorted_edges

from conftest import graph_from_edges, make_match


def test_overlap_triangle_plus_pendant():
    g = graph_from_edges([("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])
    # a-b: shared {c}, union {c} → 1
    assert neighborhood_overlap(g, "a", "b") == pytest.approx(1.0)
    # b-c: shared {a}, union {a, d} → 1/2
    assert neighborhood_overlap(g, "b", "c") == pytest.approx(0.5)
    # c-d: shared {}, union {a, b} → 0
    assert neighborhood_overlap(g, "c", "d") == 0.0


def test_overlap_isolated_bridge_is_zero():
    g = graph_from_edges([("a", "b")])
    assert neighborhood_overlap(g, "a", "b") == 0.0


def test_overlap_requires_existing_edge():
    g = graph_from_edges([("a", "b"), ("c", "d")])
    with pytest.raises(ValueError):
        neighborhood_overlap(g, "a", "c")


def oracle_overlap(graph, u, v):
    nu = set(graph.neighbors(u)) - {v}
    nv = set(graph.neighbors(v)) - {u}
    if not (nu | nv):
        return 0.0
    return len(nu & nv) / len(nu | nv)


@pytest.mark.parametrize("seed", range(15))
def test_overlap_matches_oracle_on_random_graphs(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 10)
    edges = [(f"n{i}", f"n{j}") for i in range(n) for j in range(i + 1, n)
             if rng.random() < 0.45]
    if not edges:
        return
    g = graph_from_edges(edges)
    for u, v in g.weights:
        assert neighborhood_overlap(g, u, v) == pytest.approx(
            oracle_overlap(g, u, v))


COUNTRIES = [
    CountryRecord("A", 0, 0, "x", "UEFA"),
    CountryRecord("B", 0, 0, "x", "UEFA"),
    CountryRecord("C", 0, 0, "x", "CONMEBOL"),
]


def test_annotate_edges_fields():
    ms = [
        make_match("A", "B", date(2000, 3, 1)),
        make_match("B", "A", date(2000, 5, 1)),
        make_match("A", "C", date(2000, 6, 1), tournament="World Cup"),
        make_match("B", "C", date(1999, 6, 1), tournament="World Cup"),
        make_match("B", "C", date(2000, 7, 1), tournament="Qualifier"),
    ]
    g = build_graph(ms, date(2000, 1, 1), date(2000, 12, 31))
    anns = annotate_edges(g, ms, COUNTRIES)
    by_edge = {a.edge: a for a in anns}
    assert [a.edge for a in anns] == sorted(by_edge)
    ab = by_edge[("A", "B")]
    assert ab.tie_strength == 2
    assert not ab.cross_confederation and not ab.world_cup
    ac = by_edge[("A", "C")]
    assert ac.cross_confederation and ac.world_cup
    # the 1999 finals match is outside the horizon; the qualifier is not
    # a finals match — so B-C is not flagged
    bc = by_edge[("B", "C")]
    assert bc.tie_strength == 1 and not bc.world_cup
    assert ab.overlap == pytest.approx(1.0)


def annotations_for(graph, countries=None):
    countries = countries or []
    return annotate_edges(graph, [], countries)


def test_boundary_fraction_counts_cross_edges():
    g = FootballGraph(("A", "B", "C"), {("A", "B"): 5, ("A", "C"): 1,
                                        ("B", "C"): 2})
    anns = annotations_for(g, COUNTRIES)
    # highest strength edge is A-B (within UEFA)
    assert boundary_fraction(anns, "strength", 1, "highest") == 0.0
    # lowest strength edge is A-C (cross)
    assert boundary_fraction(anns, "strength", 1, "lowest") == 1.0
    assert boundary_fraction(anns, "strength", 3, "lowest") == pytest.approx(2 / 3)
    with pytest.raises(ValueError):
        boundary_fraction(anns, "strength", 4, "lowest")
    with pytest.raises(ValueError):
        boundary_fraction(anns, "betweenness", 1, "lowest")
    with pytest.raises(ValueError):
        boundary_fraction(anns, "strength", 1, "middle")


def test_sorted_edges_deterministic_tiebreak():
    g = FootballGraph(("A", "B", "C", "D"),
                      {("A", "B"): 1, ("C", "D"): 1, ("B", "C"): 1})
    anns = annotations_for(g)
    lowest = [a.edge for a in _sorted_edges(anns, "strength", "lowest")]
    highest = [a.edge for a in _sorted_edges(anns, "strength", "highest")]
    # all strengths tie, so both orders fall back to lexicographic edges
    assert lowest == highest == [("A", "B"), ("B", "C"), ("C", "D")]


def oracle_giant_after_removals(graph, removed):
    """Recompute the giant component from scratch after deleting edges."""
    removed = set(removed)
    adj = {u: set() for u in graph.nodes}
    for (u, v) in graph.weights:
        if (u, v) not in removed:
            adj[u].add(v)
            adj[v].add(u)
    best = 1 if graph.nodes else 0
    seen = set()
    for s in graph.nodes:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        best = max(best, len(comp))
    return best / len(graph.nodes)


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("key,side", [("strength", "lowest"),
                                      ("strength", "highest"),
                                      ("overlap", "lowest"),
                                      ("overlap", "highest")])
def test_giant_curve_matches_scratch_recomputation(seed, key, side):
    rng = random.Random(seed)
    n = rng.randint(4, 9)
    nodes = tuple(f"n{i}" for i in range(n))
    weights = {(nodes[i], nodes[j]): rng.randint(1, 6)
               for i in range(n) for j in range(i + 1, n)
               if rng.random() < 0.5}
    if not weights:
        return
    g = FootballGraph(nodes, weights)
    anns = annotations_for(g)
    curve = giant_component_curve(g, anns, key, side)
    order = [a.edge for a in _sorted_edges(anns, key, side)]
    assert len(curve) == len(order)
    for steps, rel in curve:
        assert rel == pytest.approx(
            oracle_giant_after_removals(g, order[:steps]))
    # last point: all edges gone, giant is a single node
    assert curve[-1][1] == pytest.approx(1 / n)


def test_giant_curve_rejects_bad_input():
    g = graph_from_edges([("a", "b"), ("b", "c")])
    anns = annotations_for(g)
    with pytest.raises(ValueError):
        giant_component_curve(g, anns[:1], "strength", "lowest")
    empty = FootballGraph(("a", "b"), {})
    with pytest.raises(ValueError):
        giant_component_curve(empty, [], "strength", "lowest")


def test_relative_giant_size():
    g = FootballGraph(("a", "b", "c", "d", "e"),
                      {("a", "b"): 1, ("b", "c"): 1, ("d", "e"): 1})
    assert relative_giant_size(g) == pytest.approx(3 / 5)
    assert relative_giant_size(FootballGraph((), {})) == 0.0


def test_max_single_step_drop():
    curve = [(1, 0.9), (2, 0.4), (3, 0.35)]
    assert max_single_step_drop(curve, initial=1.0) == pytest.approx(0.5)
    # the very first removal can be the biggest drop
    assert max_single_step_drop([(1, 0.2)], initial=1.0) == pytest.approx(0.8)
    assert max_single_step_drop([], initial=1.0) == 0.0


@settings(max_examples=40, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1,
               max_size=12))
def test_giant_curve_monotone_nonincreasing(pairs):
    edges = {(f"n{a}", f"n{b}") for a, b in pairs if a != b}
    if not edges:
        return
    g = graph_from_edges(sorted(edges))
    anns = annotations_for(g)
    curve = giant_component_curve(g, anns, "strength", "lowest")
    rels = [relative_giant_size(g)] + [rel for _, rel in curve]
    assert all(a >= b - 1e-12 for a, b in zip(rels, rels[1:]))
