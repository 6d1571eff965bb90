"""Token sliding on graphs of girth five or more.

Library + CLI that decides whether one independent set of k tokens can be
slid, one edge at a time, into another.  A reduction pipeline shrinks
high-girth instances to a size that depends only on k before the search;
a deliberately naive brute-force oracle cross-checks everything.
"""

from .graph import (
    Graph,
    bfs_distances,
    component_diameter_path,
    connected_components,
    girth,
    has_short_cycle,
    induced_subgraph,
    is_independent,
    vertex_set,
)
from .instance import (
    Instance,
    parse_instance,
    serialize_instance,
    validate_girth,
)
from .kernelize import (
    ComponentKind,
    KernelTrace,
    Partition,
    classify_component,
    compute_partition,
    find_subdivided_star,
    kernelize,
    prune_equivalent_components,
    reduce_token_degree,
    remove_twins,
    replace_safe_component,
)
from .iso import AttachedComponent, boundary_fixed_isomorphic
from .solver import (
    Decision,
    format_witness,
    parse_witness,
    solve_direct,
    solve_via_kernel,
    verify_sequence,
)
from .oracle import (
    build_reconfiguration_graph,
    enumerate_independent_sets,
    oracle_decide,
    oracle_distance,
)
from .generate import family, random_girth5, random_instance

__all__ = [
    "Graph",
    "bfs_distances",
    "component_diameter_path",
    "connected_components",
    "girth",
    "has_short_cycle",
    "induced_subgraph",
    "is_independent",
    "vertex_set",
    "Instance",
    "parse_instance",
    "serialize_instance",
    "validate_girth",
    "ComponentKind",
    "KernelTrace",
    "Partition",
    "classify_component",
    "compute_partition",
    "find_subdivided_star",
    "kernelize",
    "prune_equivalent_components",
    "reduce_token_degree",
    "remove_twins",
    "replace_safe_component",
    "AttachedComponent",
    "boundary_fixed_isomorphic",
    "Decision",
    "format_witness",
    "parse_witness",
    "solve_direct",
    "solve_via_kernel",
    "verify_sequence",
    "build_reconfiguration_graph",
    "enumerate_independent_sets",
    "oracle_decide",
    "oracle_distance",
    "family",
    "random_girth5",
    "random_instance",
]
