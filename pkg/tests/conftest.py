"""Shared fixtures: bundled dataset loading and small graph builders."""

from __future__ import annotations

from datetime import date
from pathlib import Path

import pytest

import footnet as fn

DATA_DIR = Path(__file__).resolve().parents[1] / "data"


@pytest.fixture(scope="session")
def dataset():
    """Parsed and alias-unified bundled dataset: (matches, countries)."""
    countries = fn.parse_countries(DATA_DIR / "countries.csv")
    aliases = fn.load_aliases(DATA_DIR / "aliases.txt")
    raw = fn.parse_matches(DATA_DIR / "matches.csv")
    matches = fn.unify(raw, aliases, known_names={c.name for c in countries})
    return matches, countries


@pytest.fixture(scope="session")
def window_graph(dataset):
    """The 1995-2015 snapshot with its edge annotations."""
    matches, countries = dataset
    start, end = date(1995, 1, 1), date(2015, 12, 31)
    graph = fn.build_graph(matches, start, end)
    window = fn.filter_horizon(matches, start, end)
    annotations = fn.annotate_edges(graph, window, countries)
    return graph, annotations


@pytest.fixture(scope="session")
def yearly_1901_2010(dataset):
    matches, _ = dataset
    return fn.yearly_series(matches, 1901, 2010)


def make_match(u, v, when=date(2000, 6, 1), tournament="Friendly"):
    return fn.MatchRecord(when, u, v, 1, 0, tournament, u, False)


def graph_from_edges(edges, horizon=None):
    """Unit-weight FootballGraph from an iterable of (u, v) pairs."""
    weights = {}
    nodes = set()
    for u, v in edges:
        nodes.update((u, v))
        key = (u, v) if u < v else (v, u)
        weights[key] = weights.get(key, 0) + 1
    return fn.FootballGraph(tuple(sorted(nodes)), weights, horizon=horizon)
