"""Exact enumeration of minimal connecting vertex sets and induced paths,
with a two-group disjoint-connected-subgraphs solver built on top."""

from .graph import (
    ContractionMap,
    Graph,
    closed_neighborhood,
    component_of,
    components,
    contract_edge,
    contract_set,
    induced_subgraph,
    is_connected,
    open_neighborhood,
    vertex_mask,
    vertices_of,
)
from .paths import (
    EnumerationStats,
    InducedPath,
    branch_depth,
    enumerate_induced_paths,
    format_path,
    is_induced_path,
    iter_induced_paths,
    max_leaves,
)
from .connecting import (
    ConnectingStats,
    CountBound,
    brute_force_connecting,
    contract_terminal_edges,
    enumerate_connecting_supersets,
    enumerate_minimal_connecting,
    is_minimal_connecting,
    iter_connecting_supersets,
    iter_minimal_connecting,
    minimal_count_bound,
)
from .dcs import (
    DcsInstance,
    DcsWitness,
    SolveStats,
    Strategy,
    count_witnesses,
    growth_base,
    iter_2dcs_witnesses,
    runtime_bound_curve,
    select_strategy,
    solve_2dcs,
    stage2_check,
    verify_witness,
)
from .generators import LayeredSpec, gen_layered, gen_named, gen_random
from .dimacs import Instance, ParseError, format_instance, load_instance, parse_instance

__version__ = "0.1.0"

__all__ = [
    "ContractionMap",
    "Graph",
    "closed_neighborhood",
    "component_of",
    "components",
    "contract_edge",
    "contract_set",
    "induced_subgraph",
    "is_connected",
    "open_neighborhood",
    "vertex_mask",
    "vertices_of",
    "EnumerationStats",
    "InducedPath",
    "branch_depth",
    "enumerate_induced_paths",
    "format_path",
    "is_induced_path",
    "iter_induced_paths",
    "max_leaves",
    "ConnectingStats",
    "CountBound",
    "brute_force_connecting",
    "contract_terminal_edges",
    "enumerate_connecting_supersets",
    "enumerate_minimal_connecting",
    "is_minimal_connecting",
    "iter_connecting_supersets",
    "iter_minimal_connecting",
    "minimal_count_bound",
    "DcsInstance",
    "DcsWitness",
    "SolveStats",
    "Strategy",
    "count_witnesses",
    "growth_base",
    "iter_2dcs_witnesses",
    "runtime_bound_curve",
    "select_strategy",
    "solve_2dcs",
    "stage2_check",
    "verify_witness",
    "LayeredSpec",
    "gen_layered",
    "gen_named",
    "gen_random",
    "Instance",
    "ParseError",
    "format_instance",
    "load_instance",
    "parse_instance",
    "__version__",
]
