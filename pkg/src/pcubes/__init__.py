"""Partial cubes: relation classes, crossing graphs, median graphs, and the
cube/clique counting polynomials that tie them together."""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    GraphError,
    ResourceLimitError,
    INFINITE,
    build_graph,
    all_pairs_distances,
    induced_subgraph,
    disjoint_union,
    complement,
    is_connected,
    connected_components,
    is_bipartite,
    interval,
    convex_hull,
    is_convex,
    medians_of_triple,
)
from .polynomials import (
    Poly,
    poly,
    add,
    mul,
    scale,
    power,
    shift,
    evaluate,
    degree,
    poly_leq,
    poly_lt,
    is_unimodal,
    is_log_concave,
    has_internal_zeros,
)
from .theta import (
    ThetaPartition,
    PartialCubeCertificate,
    HypercubeEmbedding,
    Sides,
    theta_related,
    theta_classes,
    is_partial_cube,
    embed,
    sides,
    all_sides,
    convexity_by_boundary,
)
from .crossing import (
    NotPartialCubeError,
    IsometricCycle,
    isometric_cycles,
    crosses_quadrant,
    crosses_cycle,
    CrossingGraph,
    crossing_graph,
    alternating_square,
    SimplexGraph,
    simplex_graph,
    verify_simplex_identity,
    coordinate_crossing_pairs,
)
from .median import (
    ExpansionSpec,
    expansion,
    peripheral_convex_expansion,
    contract_class,
    find_peripheral_class,
    PeelStep,
    peripheral_decomposition,
    replay_peripheral_decomposition,
    is_median_by_triples,
    is_median_by_convex_U,
    hull_in_hypercube,
    halfspace_hull,
    theta_occurrence,
    maximal_isometric_cycles,
    ClosureRound,
    ClosureTrace,
    median_closure,
)
from .counting import (
    TheoremReport,
    cube_polynomial,
    cube_polynomial_oracle,
    clique_polynomial_recursive,
    clique_polynomial_enumerate,
    verify_theorem,
    expansion_formula_check,
    x_plus_one_expansion,
)
from .graphio import (
    ParseError,
    read_edge_list,
    write_edge_list,
    read_json_graph,
    write_json_graph,
    parse_graph,
    format_graph,
    load_graph,
    save_graph,
)
from . import generators

__all__ = [
    "__version__",
    "Graph",
    "GraphError",
    "ResourceLimitError",
    "INFINITE",
    "build_graph",
    "all_pairs_distances",
    "induced_subgraph",
    "disjoint_union",
    "complement",
    "is_connected",
    "connected_components",
    "is_bipartite",
    "interval",
    "convex_hull",
    "is_convex",
    "medians_of_triple",
    "Poly",
    "poly",
    "add",
    "mul",
    "scale",
    "power",
    "shift",
    "evaluate",
    "degree",
    "poly_leq",
    "poly_lt",
    "is_unimodal",
    "is_log_concave",
    "has_internal_zeros",
    "ThetaPartition",
    "PartialCubeCertificate",
    "HypercubeEmbedding",
    "Sides",
    "theta_related",
    "theta_classes",
    "is_partial_cube",
    "embed",
    "sides",
    "all_sides",
    "convexity_by_boundary",
    "NotPartialCubeError",
    "IsometricCycle",
    "isometric_cycles",
    "crosses_quadrant",
    "crosses_cycle",
    "CrossingGraph",
    "crossing_graph",
    "alternating_square",
    "SimplexGraph",
    "simplex_graph",
    "verify_simplex_identity",
    "coordinate_crossing_pairs",
    "ExpansionSpec",
    "expansion",
    "peripheral_convex_expansion",
    "contract_class",
    "find_peripheral_class",
    "PeelStep",
    "peripheral_decomposition",
    "replay_peripheral_decomposition",
    "is_median_by_triples",
    "is_median_by_convex_U",
    "hull_in_hypercube",
    "halfspace_hull",
    "theta_occurrence",
    "maximal_isometric_cycles",
    "ClosureRound",
    "ClosureTrace",
    "median_closure",
    "TheoremReport",
    "cube_polynomial",
    "cube_polynomial_oracle",
    "clique_polynomial_recursive",
    "clique_polynomial_enumerate",
    "verify_theorem",
    "expansion_formula_check",
    "x_plus_one_expansion",
    "ParseError",
    "read_edge_list",
    "write_edge_list",
    "read_json_graph",
    "write_json_graph",
    "parse_graph",
    "format_graph",
    "load_graph",
    "save_graph",
    "generators",
]
