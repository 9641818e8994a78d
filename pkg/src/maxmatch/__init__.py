"""Exact counting of maximum matchings via the Gallai-Edmonds decomposition."""

from .blossom import Matching, is_factor_critical, matching_number, maximum_matching
from .counting import (
    CountBreakdown,
    count_aux_max,
    count_k_matchings,
    count_max_factor_critical,
    count_maximum_matchings,
    count_near_perfect,
    count_perfect,
    matching_size_profile,
)
from .gallai_edmonds import (
    AuxiliaryBipartite,
    GEDecomposition,
    SurplusViolation,
    build_auxiliary,
    classify_edges,
    decompose,
    verify_structure,
)
from .graph import (
    CapExceededError,
    Graph,
    GraphFormatError,
    build_graph,
    connected_components,
    enumerate_free_trees,
    generator,
    induced_subgraph,
    parse_graph,
    serialize_graph,
)
from .opt_trees import (
    consistency_report,
    extremal_search,
    gadget_value,
    opt_tree_count,
    opt_tree_record,
)
from .oracle import MatchingProfile, enumerate_profile

__all__ = [
    "AuxiliaryBipartite",
    "CapExceededError",
    "CountBreakdown",
    "GEDecomposition",
    "Graph",
    "GraphFormatError",
    "Matching",
    "MatchingProfile",
    "SurplusViolation",
    "build_auxiliary",
    "build_graph",
    "classify_edges",
    "connected_components",
    "consistency_report",
    "count_aux_max",
    "count_k_matchings",
    "count_max_factor_critical",
    "count_maximum_matchings",
    "count_near_perfect",
    "count_perfect",
    "decompose",
    "enumerate_free_trees",
    "enumerate_profile",
    "extremal_search",
    "gadget_value",
    "generator",
    "induced_subgraph",
    "is_factor_critical",
    "matching_number",
    "matching_size_profile",
    "maximum_matching",
    "opt_tree_count",
    "opt_tree_record",
    "parse_graph",
    "serialize_graph",
    "verify_structure",
]
