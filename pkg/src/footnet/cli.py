"""Command-line pipelines over the bundled match history.

Every subcommand reads the delimited inputs, writes CSV/JSON artifacts
(and optionally PNG figures) into the output directory, and records a
manifest with the effective configuration and seed so that reruns are
reproducible and byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import sys
from datetime import date
from functools import wraps
from pathlib import Path

import click

from . import community as comm
from . import graphs, measures, mining, report, similarity, weakties
from .records import (
    IngestError, filter_horizon, load_aliases, parse_countries, parse_matches,
    unify,
)

DATA_DIR = Path(__file__).resolve().parents[2] / "data"

EXIT_INPUT_ERROR = 2
EXIT_PRECONDITION_ERROR = 3
EXIT_INTERNAL_ERROR = 4

FULL_HORIZON = (date(1872, 1, 1), date(2016, 12, 31))
WEAK_TIES_HORIZON = (date(1995, 1, 1), date(2015, 12, 31))
SERIES_YEARS = (1901, 2010)


class PreconditionError(ValueError):
    pass


def common_options(f):
    f = click.option("--matches", "matches_path", type=click.Path(),
                     default=None, help="Match record CSV.")(f)
    f = click.option("--countries", "countries_path", type=click.Path(),
                     default=None, help="Country record CSV.")(f)
    f = click.option("--aliases", "aliases_path", type=click.Path(),
                     default=None, help="Alias table file.")(f)
    f = click.option("--from", "from_date", default=None,
                     help="Horizon start, YYYY-MM-DD.")(f)
    f = click.option("--to", "to_date", default=None,
                     help="Horizon end, YYYY-MM-DD.")(f)
    f = click.option("--seed", type=int, default=None, help="RNG seed.")(f)
    f = click.option("--out", "out_dir", type=click.Path(), default=None,
                     help="Output directory.")(f)
    f = click.option("--config", "config_path", type=click.Path(),
                     default=None, help="JSON config file; flags win.")(f)
    f = click.option("--figures/--no-figures", default=True,
                     help="Also render PNG figures.")(f)
    return f


class Run:
    """Resolved configuration plus manifest bookkeeping for one command."""

    def __init__(self, command: str, flags: dict):
        config_path = flags.pop("config_path", None)
        file_cfg = {}
        if config_path:
            file_cfg = json.loads(Path(config_path).read_text(encoding="utf-8"))

        def pick(key, fallback):
            flag = flags.get(key)
            if flag is not None:
                return flag
            return file_cfg.get(key, fallback)

        self.command = command
        self.matches_path = Path(pick("matches_path", DATA_DIR / "matches.csv"))
        self.countries_path = Path(pick("countries_path", DATA_DIR / "countries.csv"))
        self.aliases_path = Path(pick("aliases_path", DATA_DIR / "aliases.txt"))
        self.seed = int(pick("seed", 42))
        self.out_dir = Path(pick("out_dir", "out"))
        self.figures = bool(pick("figures", True))
        self.from_date = pick("from_date", None)
        self.to_date = pick("to_date", None)
        self.extra = {
            k: pick(k, v)
            for k, v in flags.items()
            if k not in {
                "matches_path", "countries_path", "aliases_path", "seed",
                "out_dir", "figures", "from_date", "to_date",
            }
        }
        self.artifacts: list[str] = []

    def horizon(self, default: tuple[date, date]) -> tuple[date, date]:
        start = date.fromisoformat(self.from_date) if self.from_date else default[0]
        end = date.fromisoformat(self.to_date) if self.to_date else default[1]
        if start > end:
            raise PreconditionError(f"horizon start {start} is after end {end}")
        return start, end

    def load(self):
        for p in (self.matches_path, self.countries_path, self.aliases_path):
            if not Path(p).exists():
                raise FileNotFoundError(f"input file not found: {p}")
        countries = parse_countries(self.countries_path)
        aliases = load_aliases(self.aliases_path)
        raw = parse_matches(self.matches_path)
        matches = unify(raw, aliases, known_names={c.name for c in countries})
        return matches, countries

    def path(self, name: str) -> Path:
        self.out_dir.mkdir(parents=True, exist_ok=True)
        self.artifacts.append(name)
        return self.out_dir / name

    def write_manifest(self):
        config = {
            "matches": str(self.matches_path),
            "countries": str(self.countries_path),
            "aliases": str(self.aliases_path),
            "from": self.from_date,
            "to": self.to_date,
            "figures": self.figures,
            **{k: v for k, v in sorted(self.extra.items())},
        }
        blob = json.dumps(config, sort_keys=True).encode("utf-8")
        manifest = {
            "command": self.command,
            "config": config,
            "config_hash": hashlib.sha256(blob).hexdigest(),
            "seed": self.seed,
            "artifacts": sorted(self.artifacts),
        }
        self.out_dir.mkdir(parents=True, exist_ok=True)
        report.write_json(self.out_dir / "manifest.json", manifest)


def command(name: str):
    """Wrap a pipeline body with config resolution and exit-code policy."""

    def decorate(f):
        @cli.command(name=name)
        @common_options
        @wraps(f)
        def wrapper(**flags):
            try:
                run = Run(name, flags)
            except (FileNotFoundError, json.JSONDecodeError) as exc:
                click.echo(f"input error: {exc}", err=True)
                sys.exit(EXIT_INPUT_ERROR)
            try:
                f(run)
                run.write_manifest()
            except (FileNotFoundError, IngestError) as exc:
                click.echo(f"input error: {exc}", err=True)
                sys.exit(EXIT_INPUT_ERROR)
            except (PreconditionError, ValueError) as exc:
                click.echo(f"precondition error: {exc}", err=True)
                sys.exit(EXIT_PRECONDITION_ERROR)
            except Exception as exc:  # pragma: no cover - defensive
                click.echo(f"internal error: {exc}", err=True)
                sys.exit(EXIT_INTERNAL_ERROR)

        return wrapper

    return decorate


@click.group()
def cli():
    """Temporal analytics over the international football match history."""


@command("stats")
def cmd_stats(run: Run):
    """Dataset summary: record counts, date range, per-year volumes."""
    matches, countries = run.load()
    per_year: dict[int, int] = {}
    for m in matches:
        per_year[m.date.year] = per_year.get(m.date.year, 0) + 1
    payload = {
        "matches": len(matches),
        "countries": len(countries),
        "first": min((m.date for m in matches), default=None),
        "last": max((m.date for m in matches), default=None),
        "matches_per_year": {str(y): per_year[y] for y in sorted(per_year)},
    }
    if payload["first"]:
        payload["first"] = payload["first"].isoformat()
        payload["last"] = payload["last"].isoformat()
    report.write_json(run.path("stats.json"), payload)


@command("graph")
def cmd_graph(run: Run):
    """Export the snapshot graph for a horizon as edge list + sidecar."""
    matches, countries = run.load()
    start, end = run.horizon(FULL_HORIZON)
    graph = graphs.build_graph(matches, start, end)
    graphs.export_graph(
        graph, run.path("edges.csv"), run.path("graph.json"), countries
    )
    if run.figures:
        report.plot_adjacency_heatmap(
            run.path("adjacency.png"),
            graphs.adjacency(graph),
            f"adjacency {start.year}-{end.year}",
        )


@command("mine")
@click.option("--min-support", type=int, default=None,
              help="Minimum number of supporting years (default 11).")
def cmd_mine(run: Run):
    """Frequent team relations over the yearly transaction series."""
    raw_support = run.extra.get("min_support")
    min_support = 11 if raw_support is None else int(raw_support)
    if min_support < 1:
        raise PreconditionError("min-support must be >= 1")
    matches, _ = run.load()
    yearly = graphs.yearly_series(matches, *SERIES_YEARS)
    transactions = mining.build_transactions(yearly)
    relations = mining.apriori(transactions, min_support)
    report.write_relations_csv(run.path("relations.csv"), relations)


@command("communities")
def cmd_communities(run: Run):
    """Louvain on the horizon graph, with confederation agreement."""
    matches, countries = run.load()
    start, end = run.horizon(FULL_HORIZON)
    graph = graphs.build_graph(matches, start, end)
    if graph.total_weight == 0:
        raise PreconditionError("horizon contains no matches")
    partition = comm.louvain(graph, seed=run.seed)
    report.write_partition_csv(run.path("communities.csv"), partition)
    meta_path = run.path("communities_meta.json")
    nmi = comm.confederation_agreement(partition, countries)
    report.write_json(
        meta_path,
        {
            "seed": partition.seed,
            "passes": partition.passes,
            "final_modularity": partition.modularity,
            "num_communities": partition.num_communities,
            "confederation_nmi": nmi,
        },
    )
    if run.figures:
        mat = graphs.adjacency(graph)
        permuted, _ = comm.reorder_by_community(
            mat, graph.nodes, partition.assignment
        )
        report.plot_adjacency_heatmap(
            run.path("adjacency_by_community.png"),
            permuted,
            f"communities {start.year}-{end.year}",
        )


@command("weak-ties")
@click.option("--top-k", type=int, default=None,
              help="Edges taken from each end of the ranking (default 1000).")
def cmd_weak_ties(run: Run):
    """Edge annotations, boundary fractions, and removal curves."""
    raw_k = run.extra.get("top_k")
    k = 1000 if raw_k is None else int(raw_k)
    if k < 1:
        raise PreconditionError("top-k must be >= 1")
    matches, countries = run.load()
    start, end = run.horizon(WEAK_TIES_HORIZON)
    graph = graphs.build_graph(matches, start, end)
    if graph.num_edges == 0:
        raise PreconditionError("horizon graph has no edges")
    if k > graph.num_edges:
        raise PreconditionError(f"top-k {k} exceeds edge count {graph.num_edges}")
    window = filter_horizon(matches, start, end)
    annotations = weakties.annotate_edges(graph, window, countries)
    report.write_annotations_csv(run.path("edges_annotated.csv"), annotations)

    fractions = {
        f"{side}_{key}": weakties.boundary_fraction(annotations, key, k, side)
        for key in ("strength", "overlap")
        for side in ("highest", "lowest")
    }
    fractions["k"] = k
    fractions["num_edges"] = graph.num_edges
    report.write_json(run.path("boundary_fractions.json"), fractions)

    curves = {}
    for key in ("strength", "overlap"):
        for side in ("highest", "lowest"):
            curve = weakties.giant_component_curve(graph, annotations, key, side)
            curves[(key, side)] = curve
            report.write_curve_csv(run.path(f"removal_{key}_{side}.csv"), curve)

    if run.figures:
        for key in ("strength", "overlap"):
            report.plot_removal_curves(
                run.path(f"removal_{key}.png"),
                curves[(key, "highest")], curves[(key, "lowest")], key,
            )
        report.plot_strength_overlap_scatter(
            run.path("scatter_world_cup.png"), annotations, "world_cup")
        report.plot_strength_overlap_scatter(
            run.path("scatter_cross_confed.png"), annotations, "cross_confed")


@command("dynamics")
def cmd_dynamics(run: Run):
    """Per-decade confederation counts, efficiency, and communities."""
    matches, countries = run.load()
    decades = graphs.decade_series(matches, *SERIES_YEARS)
    labels = [graphs.decade_label(g) for g in decades]

    counts = measures.confed_edge_counts(decades, countries)
    report.write_confed_counts_csv(run.path("confed_counts.csv"), counts)

    efficiency = measures.efficiency_series(decades)
    report.write_series_csv(run.path("efficiency.csv"), labels, efficiency)

    lines = ["decade,num_communities,confederation_nmi,modularity"]
    for label, g in zip(labels, decades):
        partition = comm.louvain(g, seed=run.seed)
        nmi = comm.confederation_agreement(partition, countries)
        lines.append(
            f"{label},{partition.num_communities},{nmi:.10g},"
            f"{partition.modularity:.10g}"
        )
    report.write_lines(run.path("decade_communities.csv"), lines)

    if run.figures:
        report.plot_series(run.path("efficiency.png"), labels, efficiency,
                           "global efficiency")
        report.plot_confed_counts(run.path("confed_within.png"), counts, True)
        report.plot_confed_counts(run.path("confed_between.png"), counts, False)


def _similarity_artifacts(run: Run):
    matches, countries = run.load()
    yearly = graphs.yearly_series(matches, *SERIES_YEARS)
    universe = graphs.node_universe(countries)
    components, final = similarity.similarity_pipeline(yearly, universe)
    for name, matrix in components.items():
        report.write_similarity_csv(run.path(f"similarity_{name}.csv"), matrix)
        if run.figures:
            report.plot_similarity_heatmap(
                run.path(f"similarity_{name}.png"), matrix, name.replace("_", " ")
            )
    report.write_similarity_csv(run.path("similarity_final.csv"), final)
    report.write_similarity_json(run.path("similarity_final.json"), final)
    if run.figures:
        report.plot_similarity_heatmap(
            run.path("similarity_final.png"), final, "final similarity"
        )
    return final


@command("similarity")
def cmd_similarity(run: Run):
    """The component and final year-by-year similarity matrices."""
    _similarity_artifacts(run)


@command("states")
def cmd_states(run: Run):
    """Temporal states from the final similarity matrix."""
    final = _similarity_artifacts(run)
    states, partition = similarity.extract_states(final, seed=run.seed)
    report.write_states_csv(run.path("states.csv"), states)
    report.write_json(
        run.path("states_meta.json"),
        {
            "seed": run.seed,
            "num_states": len(states),
            "modularity": partition.modularity,
            "states": [
                {"label": s.label, "first": min(s.years), "last": max(s.years),
                 "years": list(s.years)}
                for s in states
            ],
        },
    )


def main():
    cli()


if __name__ == "__main__":
    main()
