"""Levelwise relation mining checked against exhaustive enumeration."""

import random
from datetime import date
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from footnet import apriori, build_transactions
from footnet.mining import FrequentRelation, relations_csv_rows, support

from conftest import graph_from_edges


def transactions_from_edge_lists(edge_lists):
    """One transaction per list of (u, v) pairs."""
    out = []
    for edges in edge_lists:
        t = {}
        for u, v in edges:
            t.setdefault(u, set()).add(v)
            t.setdefault(v, set()).add(u)
        out.append(t)
    return out


def brute_force_frequent(transactions, min_support, max_items=12):
    """Enumerate every subset of the item universe and count support."""
    items = sorted({u for t in transactions for u in t})
    assert len(items) <= max_items
    found = {}
    for k in range(2, len(items) + 1):
        for combo in combinations(items, k):
            count = 0
            for t in transactions:
                if all(v in t.get(u, ()) for u, v in combinations(combo, 2)):
                    count += 1
            if count >= min_support:
                found[combo] = count
    return found


def as_dict(relations):
    return {r.teams: r.occurrence for r in relations}


def random_transactions(rng, n_items=8, n_trans=12, p=0.35):
    items = [f"t{i}" for i in range(n_items)]
    lists = []
    for _ in range(n_trans):
        lists.append([(a, b) for a, b in combinations(items, 2)
                      if rng.random() < p])
    return transactions_from_edge_lists(lists)


@pytest.mark.parametrize("seed", range(15))
@pytest.mark.parametrize("min_support", [1, 2, 4])
def test_apriori_matches_brute_force(seed, min_support):
    rng = random.Random(seed * 31 + min_support)
    transactions = random_transactions(rng)
    mined = as_dict(apriori(transactions, min_support))
    assert mined == brute_force_frequent(transactions, min_support)


def test_apriori_requires_cliques_not_just_edges():
    # a-b and b-c meet every year, but a-c never do: {a,b,c} has support 0
    transactions = transactions_from_edge_lists(
        [[("a", "b"), ("b", "c")]] * 3)
    mined = as_dict(apriori(transactions, 2))
    assert mined == {("a", "b"): 3, ("b", "c"): 3}


def test_apriori_finds_larger_cliques():
    clique = [("a", "b"), ("a", "c"), ("a", "d"),
              ("b", "c"), ("b", "d"), ("c", "d")]
    transactions = transactions_from_edge_lists(
        [clique, clique, clique, [("a", "b")]])
    mined = as_dict(apriori(transactions, 3))
    assert mined[("a", "b", "c", "d")] == 3
    assert mined[("a", "b", "c")] == 3
    assert mined[("a", "b")] == 4


def test_apriori_output_ordering():
    clique = [("a", "b"), ("a", "c"), ("b", "c"), ("x", "y")]
    transactions = transactions_from_edge_lists([clique] * 4 + [[("x", "y")]])
    relations = apriori(transactions, 2)
    sizes = [r.size for r in relations]
    assert sizes == sorted(sizes)
    pairs = [r for r in relations if r.size == 2]
    # occurrence descending, then lexicographic teams
    assert pairs[0].teams == ("x", "y") and pairs[0].occurrence == 5
    assert [p.teams for p in pairs[1:]] == [("a", "b"), ("a", "c"), ("b", "c")]


def test_apriori_rejects_bad_min_support():
    with pytest.raises(ValueError):
        apriori([], 0)


def test_support_counts_years():
    transactions = transactions_from_edge_lists(
        [[("a", "b")], [], [("a", "b"), ("b", "c")]])
    assert support(("a", "b"), transactions) == 2
    assert support(("a", "b", "c"), transactions) == 0
    assert support(("b", "c"), transactions) == 1


def test_build_transactions_from_yearly_graphs():
    g1 = graph_from_edges([("a", "b")],
                          horizon=(date(2000, 1, 1), date(2000, 12, 31)))
    g2 = graph_from_edges([("b", "c"), ("a", "b")],
                          horizon=(date(2001, 1, 1), date(2001, 12, 31)))
    t1, t2 = build_transactions([g1, g2])
    assert t1 == {"a": {"b"}, "b": {"a"}}
    assert t2 == {"a": {"b"}, "b": {"a", "c"}, "c": {"b"}}
    with pytest.raises(ValueError):
        build_transactions([])


def test_relations_csv_rows():
    rows = relations_csv_rows([FrequentRelation(("a", "b"), 7)])
    assert rows == ["size,teams,occurrence", "2,a;b,7"]


@settings(max_examples=30, deadline=None)
@given(st.lists(
    st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)),
             max_size=8),
    min_size=1, max_size=8),
    st.integers(1, 3))
def test_apriori_property_matches_brute_force(edge_lists, min_support):
    lists = [[(f"i{min(a, b)}", f"i{max(a, b)}") for a, b in pairs if a != b]
             for pairs in edge_lists]
    transactions = transactions_from_edge_lists(lists)
    mined = as_dict(apriori(transactions, min_support))
    assert mined == brute_force_frequent(transactions, min_support)


@settings(max_examples=30, deadline=None)
@given(st.lists(
    st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=10),
    min_size=1, max_size=6))
def test_apriori_downward_closure(edge_lists):
    lists = [[(f"i{min(a, b)}", f"i{max(a, b)}") for a, b in pairs if a != b]
             for pairs in edge_lists]
    transactions = transactions_from_edge_lists(lists)
    mined = as_dict(apriori(transactions, 1))
    for teams, occ in mined.items():
        assert occ == support(teams, transactions)
        for sub in combinations(teams, len(teams) - 1):
            if len(sub) >= 2:
                assert mined[sub] >= occ
