"""Temporal graph analytics for the international football match history."""

from .community import Partition, confederation_agreement, louvain, modularity
from .graphs import (
    FootballGraph, adjacency, binarize, build_graph, decade_series,
    node_universe, yearly_series,
)
from .measures import (
    GraphFeatureVector, confed_edge_counts, efficiency_series,
    global_efficiency, graph_features, node_measures,
)
from .mining import FrequentRelation, apriori, build_transactions
from .records import (
    CountryRecord, IngestError, MatchRecord, filter_horizon, load_aliases,
    parse_countries, parse_matches, unify,
)
from .similarity import (
    SimilarityMatrix, TemporalState, correlation_to_similarity, extract_states,
    final_matrix, graph_level_matrix, node_level_matrix, similarity_pipeline,
    veo_matrix, veo_similarity,
)
from .weakties import (
    EdgeAnnotation, annotate_edges, boundary_fraction, giant_component_curve,
    max_single_step_drop, neighborhood_overlap, relative_giant_size,
)

__version__ = "0.1.0"
