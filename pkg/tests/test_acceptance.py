"""End-to-end acceptance checks over the bundled dataset.

Each test covers one headline claim, prints a single PASS/FAIL line, and
carries its own runtime budget. The pure-math oracle suite at the end is
dataset-independent.
"""

import random
import time
from datetime import date
from itertools import combinations

import numpy as np
import pytest

import footnet as fn
from footnet.community import modularity
from footnet.graphs import FootballGraph
from footnet.graphs import decade_label
from footnet.measures import bfs_distances, confed_edge_counts

from conftest import DATA_DIR


def report(name, ok, detail):
    line = f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(line, flush=True)
    assert ok, line


def test_criterion_1_dataset_integrity():
    t0 = time.perf_counter()
    countries = fn.parse_countries(DATA_DIR / "countries.csv")
    aliases = fn.load_aliases(DATA_DIR / "aliases.txt")
    raw = fn.parse_matches(DATA_DIR / "matches.csv")
    matches = fn.unify(raw, aliases, known_names={c.name for c in countries})
    elapsed = time.perf_counter() - t0
    ok = (len(matches) == 39052 and len(countries) == 238 and elapsed < 5.0)
    report("1 dataset-integrity", ok,
           f"matches={len(matches)} countries={len(countries)} "
           f"load={elapsed:.2f}s")


def test_criterion_2_static_communities(dataset):
    matches, countries = dataset
    graph = fn.build_graph(matches, date(1872, 1, 1), date(2016, 12, 31))
    t0 = time.perf_counter()
    sizes, nmis = [], []
    for seed in range(1, 11):
        part = fn.louvain(graph, seed=seed)
        sizes.append(part.num_communities)
        nmis.append(fn.confederation_agreement(part, countries))
    elapsed = time.perf_counter() - t0
    ok = (all(5 <= k <= 7 for k in sizes)
          and all(v >= 0.7 for v in nmis)
          and elapsed < 30.0)
    report("2 static-communities", ok,
           f"communities={sorted(set(sizes))} "
           f"nmi_min={min(nmis):.3f} time={elapsed:.1f}s")


def test_criterion_3_weak_tie_fractions(window_graph):
    graph, annotations = window_graph
    t0 = time.perf_counter()
    fractions = {
        (key, side): fn.boundary_fraction(annotations, key, 1000, side)
        for key in ("strength", "overlap")
        for side in ("highest", "lowest")
    }
    elapsed = time.perf_counter() - t0
    targets = {
        ("strength", "highest"): 0.023,
        ("strength", "lowest"): 0.722,
        ("overlap", "highest"): 0.066,
        ("overlap", "lowest"): 0.661,
    }
    in_band = {k: abs(fractions[k] - t) <= 0.03 for k, t in targets.items()}
    edges_ok = abs(graph.num_edges - 5105) <= 50
    ok = edges_ok and all(in_band.values()) and elapsed < 10.0
    detail = " ".join(
        f"{k[1][:2]}_{k[0][:2]}={fractions[k]*100:.1f}%" for k in targets)
    report("3 weak-tie-fractions", ok,
           f"edges={graph.num_edges} {detail} time={elapsed:.1f}s")


def test_criterion_4_edge_removal_signature(window_graph):
    graph, annotations = window_graph
    t0 = time.perf_counter()
    initial = fn.relative_giant_size(graph)
    drops = {}
    for side in ("highest", "lowest"):
        curve = fn.giant_component_curve(graph, annotations, "strength", side)
        drops[side] = fn.max_single_step_drop(curve, initial)
    elapsed = time.perf_counter() - t0
    ok = drops["lowest"] > drops["highest"] and elapsed < 60.0
    report("4 edge-removal-signature", ok,
           f"lowest-first drop={drops['lowest']:.3f} "
           f"highest-first drop={drops['highest']:.3f} time={elapsed:.1f}s")


def test_criterion_5_decade_dynamics(dataset):
    matches, countries = dataset
    decades = fn.decade_series(matches, 1901, 2010)
    labels = [decade_label(g) for g in decades]
    efficiency = fn.efficiency_series(decades)
    i = labels.index("1941-1950")
    local_min = (efficiency[i] < efficiency[i - 1]
                 and efficiency[i] < efficiency[i + 1]
                 and min(efficiency) == efficiency[i])
    counts = confed_edge_counts(decades, countries)
    uefa = [counts[l].get(("UEFA", "UEFA"), 0) for l in labels]
    j = labels.index("1931-1940")
    uefa_dip = uefa[j + 1] < uefa[j] and uefa[j + 2] > uefa[j + 1]
    ok = local_min and uefa_dip
    report("5 decade-dynamics", ok,
           f"eff[1941-1950]={efficiency[i]:.3f} "
           f"neighbors=({efficiency[i-1]:.3f},{efficiency[i+1]:.3f}) "
           f"uefa_within={uefa[j]},{uefa[j+1]},{uefa[j+2]}")


def test_criterion_6_temporal_states(dataset):
    matches, countries = dataset
    t0 = time.perf_counter()
    yearly = fn.yearly_series(matches, 1901, 2010)
    universe = fn.node_universe(countries)
    _, final = fn.similarity_pipeline(yearly, universe)
    states, _ = fn.extract_states(final, seed=42)
    elapsed = time.perf_counter() - t0

    k_ok = 5 <= len(states) <= 10
    wwii = next((s for s in states
                 if set(range(1939, 1946)) <= set(s.years)), None)
    wwii_ok = bool(wwii and abs(min(wwii.years) - 1939) <= 2
                   and abs(max(wwii.years) - 1945) <= 2)
    b91_ok = any(abs(min(s.years) - 1991) <= 2 for s in states)
    ok = k_ok and wwii_ok and b91_ok and elapsed < 120.0
    spans = " ".join(f"{min(s.years)}-{max(s.years)}" for s in states)
    report("6 temporal-states", ok,
           f"k={len(states)} spans=[{spans}] time={elapsed:.1f}s")


def test_criterion_7_frequent_relations(dataset):
    matches, _ = dataset
    yearly = fn.yearly_series(matches, 1901, 2010)
    transactions = fn.build_transactions(yearly)
    relations = fn.apriori(transactions, 11)
    by_teams = {r.teams: r.occurrence for r in relations}
    gulf = tuple(sorted(["Bahrain", "Kuwait", "Oman", "Qatar",
                         "Saudi Arabia", "United Arab Emirates"]))
    gulf_occ = by_teams.get(gulf, 0)
    home = tuple(sorted(["England", "Scotland", "Wales"]))
    home_occ = by_teams.get(home, 0)
    ok = abs(gulf_occ - 11) <= 3 and home_occ >= 50
    report("7 frequent-relations", ok,
           f"gulf-six occurrence={gulf_occ} "
           f"england-scotland-wales occurrence={home_occ}")


def test_criterion_8_pure_oracles():
    failures = []

    # (a) levelwise mining equals exhaustive subset enumeration
    rng = random.Random(2024)
    items = [f"i{k}" for k in range(10)]
    transactions = []
    for _ in range(10):
        t = {}
        for u, v in combinations(items, 2):
            if rng.random() < 0.3:
                t.setdefault(u, set()).add(v)
                t.setdefault(v, set()).add(u)
        transactions.append(t)
    mined = {r.teams: r.occurrence for r in fn.apriori(transactions, 2)}
    brute = {}
    for k in range(2, len(items) + 1):
        for combo in combinations(items, k):
            c = sum(all(v in t.get(u, ()) for u, v in combinations(combo, 2))
                    for t in transactions)
            if c >= 2:
                brute[combo] = c
    if mined != brute:
        failures.append("apriori != brute force")

    # (b) hop distances match a naive BFS on graphs up to 10 nodes
    for seed in range(25):
        r = random.Random(seed)
        n = r.randint(2, 10)
        adj = {f"n{i}": set() for i in range(n)}
        for i in range(n):
            for j in range(i + 1, n):
                if r.random() < 0.4:
                    adj[f"n{i}"].add(f"n{j}")
                    adj[f"n{j}"].add(f"n{i}")
        for src in adj:
            got = bfs_distances(adj, src)
            want = {src: 0}
            frontier = [src]
            while frontier:
                nxt = []
                for u in frontier:
                    for v in adj[u]:
                        if v not in want:
                            want[v] = want[u] + 1
                            nxt.append(v)
                frontier = nxt
            if got != want:
                failures.append(f"bfs mismatch seed={seed}")
                break

    # (c) all-in-one-community modularity vanishes on 100 random graphs
    worst = 0.0
    for seed in range(100):
        r = random.Random(seed)
        n = r.randint(2, 12)
        adj = {i: {} for i in range(n)}
        for i in range(n):
            for j in range(i + 1, n):
                if r.random() < 0.5:
                    w = r.uniform(0.5, 4.0)
                    adj[i][j] = adj.setdefault(j, {}).setdefault(i, w) or w
                    adj[i][j] = w
                    adj[j][i] = w
        if all(not nbrs for nbrs in adj.values()):
            adj[0][1] = adj[1][0] = 1.0
        q = modularity(adj, {u: 0 for u in adj})
        worst = max(worst, abs(q))
    if worst >= 1e-12:
        failures.append(f"single-community modularity {worst:.2e}")

    # (d) similarity matrices: symmetric, [0, 1], unit diagonal
    rng = random.Random(7)
    universe = tuple(sorted("abcdef"))
    yearly = []
    for year in range(2000, 2006):
        weights = {}
        for a, b in combinations(universe, 2):
            if rng.random() < 0.4:
                weights[(a, b)] = rng.randint(1, 4)
        yearly.append(FootballGraph(
            universe, weights,
            horizon=(date(year, 1, 1), date(year, 12, 31))))
    components, final = fn.similarity_pipeline(yearly, universe)
    for name, sim in list(components.items()) + [("final", final)]:
        v = sim.values
        if not (np.allclose(v, v.T)
                and v.min() >= -1e-12 and v.max() <= 1 + 1e-12
                and np.allclose(np.diag(v), 1.0)):
            failures.append(f"similarity invariants: {name}")

    # (e) complete-graph spectral energy is 2(n-1)
    for n in range(2, 21):
        nodes = tuple(f"n{i:02d}" for i in range(n))
        weights = {(a, b): 1 for a, b in combinations(nodes, 2)}
        feats = fn.graph_features(FootballGraph(nodes, weights))
        if abs(feats.graph_energy - 2 * (n - 1)) > 1e-8:
            failures.append(f"K_{n} energy {feats.graph_energy}")

    report("8 pure-oracles", not failures, "; ".join(failures) or "all suites")
