"""Apriori mining of frequently recurring team relations.

A transaction is one calendar year; an itemset of teams is supported in
a year when every pair of them met on the pitch that year (the teams
induce a clique in the year's graph). Mining is levelwise with the usual
subset-based candidate pruning.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graphs import FootballGraph

Transaction = dict[str, set[str]]  # adjacency of one year's graph


@dataclass(frozen=True)
class FrequentRelation:
    teams: tuple[str, ...]  # sorted
    occurrence: int

    @property
    def size(self) -> int:
        return len(self.teams)


def build_transactions(yearly: Sequence[FootballGraph]) -> list[Transaction]:
    """One adjacency-set transaction per year graph."""
    if not yearly:
        raise ValueError("yearly series is empty")
    return [{u: set(g.neighbors(u)) for u in g.nodes} for g in yearly]


def _supports(itemset: Sequence[str], t: Transaction) -> bool:
    for u, v in combinations(itemset, 2):
        if u not in t or v not in t[u]:
            return False
    return True


def support(itemset: Sequence[str], transactions: Sequence[Transaction]) -> int:
    return sum(_supports(itemset, t) for t in transactions)


def apriori(
    transactions: Sequence[Transaction], min_support: int
) -> list[FrequentRelation]:
    """All itemsets of size >= 2 supported by at least min_support years.

    Output ordering: size ascending, then occurrence descending, then
    lexicographic team tuple.
    """
    if min_support < 1:
        raise ValueError("min_support must be >= 1")

    # level 2: count each distinct edge's years directly
    edge_years: dict[tuple[str, str], int] = {}
    for t in transactions:
        for u, nbrs in t.items():
            for v in nbrs:
                if u < v:
                    edge_years[(u, v)] = edge_years.get((u, v), 0) + 1
    frequent: dict[tuple[str, ...], int] = {
        e: c for e, c in edge_years.items() if c >= min_support
    }
    results = dict(frequent)

    level = frequent
    k = 2
    while level:
        k += 1
        prev = set(level)
        # join step: merge k-1 sets sharing their first k-2 items
        by_prefix: dict[tuple[str, ...], list[str]] = {}
        for itemset in sorted(prev):
            by_prefix.setdefault(itemset[:-1], []).append(itemset[-1])
        candidates = []
        for prefix, tails in by_prefix.items():
            for a, b in combinations(sorted(tails), 2):
                cand = prefix + (a, b)
                # prune: every (k-1)-subset must be frequent
                if all(
                    cand[:i] + cand[i + 1 :] in prev for i in range(len(cand))
                ):
                    candidates.append(cand)
        level = {}
        for cand in candidates:
            s = support(cand, transactions)
            if s >= min_support:
                level[cand] = s
        results.update(level)

    relations = [FrequentRelation(teams, occ) for teams, occ in results.items()]
    relations.sort(key=lambda r: (r.size, -r.occurrence, r.teams))
    return relations


def relations_csv_rows(relations: Iterable[FrequentRelation]) -> list[str]:
    """CSV lines ``size,teams(semicolon-joined),occurrence`` with header."""
    rows = ["size,teams,occurrence"]
    for r in relations:
        rows.append(f"{r.size},{';'.join(r.teams)},{r.occurrence}")
    return rows
