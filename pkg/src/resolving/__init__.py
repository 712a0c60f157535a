"""Distinguishing vertex sets of finite graphs.

A set S of vertices *resolves* a target when the array of distances from
S's members pins the target down uniquely.  This package verifies and
searches three strengths of that idea for whole vertex sets (not just
single vertices), exactly and with certificates:

- order-ell resolving: sets of size <= ell get distinct distance arrays;
- ell-solid: sets of size <= ell are distinguished from *every* other set;
- doubly resolving: distance differences separate all vertex pairs.

Modules: :mod:`~resolving.graphs` (construction, products, distances),
:mod:`~resolving.checks` (verdicts with witnesses, forced vertices),
:mod:`~resolving.search` (exact minimum sets with certified lower bounds),
:mod:`~resolving.rook` (grid sets and their block-design bridge),
:mod:`~resolving.snark` (flower-snark recipes and verifiers),
:mod:`~resolving.cli` (the ``resolving`` command).
"""

__version__ = "0.1.0"

from .errors import (
    DesignParseError,
    DisconnectedGraphError,
    EdgeListParseError,
    GraphError,
    ModeError,
    OracleCapError,
)
from .graphs import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    build_graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    demo_graph,
    flower_snark,
    generate_family,
    path_graph,
    product_coord,
    product_flat,
    rook_cell,
    rook_flat,
    rook_graph,
    star_graph,
    tree_from_parents,
)
from .io import parse_edge_list, read_graph_file, write_edge_list, write_graph_file
from .checks import (
    ArrayCollision,
    CheckVerdict,
    DominatedVertex,
    Mode,
    UnresolvedPair,
    check_mode,
    distance_array,
    forced_vertices,
    forced_vertices_oracle,
    is_doubly_resolving,
    is_l_resolving,
    is_l_solid,
    is_l_solid_oracle,
    necessary_resolving_condition,
    verify_witness,
)
from .search import (
    DimensionResult,
    SearchConfig,
    SearchStats,
    dimension_lower_bounds,
    metric_dimension,
    verify_basis_certificate,
)
from .rook import (
    Design,
    RookSet,
    classify_conditions,
    design_to_set,
    fano_plane_design,
    parse_design,
    quadruple_coverage,
    rook_lower_bound,
    set_to_design,
    sufficiency_check,
    ten_point_design,
    validate_design,
    write_design,
)
from .snark import (
    check_erroneous_set,
    gap_statistics,
    recipe_set,
    reduction_distance_check,
    reduction_map,
    snark_suite,
    star_distance,
    verify_flank_table,
    verify_recipe,
    verify_triple_distinguishers,
)

__all__ = [
    "__version__",
    # errors
    "GraphError", "DisconnectedGraphError", "EdgeListParseError",
    "DesignParseError", "ModeError", "OracleCapError",
    # graphs
    "Graph", "DistanceMatrix", "build_graph", "all_pairs_distances",
    "path_graph", "cycle_graph", "complete_graph", "star_graph",
    "tree_from_parents", "generate_family", "cartesian_product",
    "product_flat", "product_coord", "rook_graph", "rook_flat", "rook_cell",
    "flower_snark", "demo_graph",
    # io
    "parse_edge_list", "write_edge_list", "read_graph_file", "write_graph_file",
    # checks
    "Mode", "CheckVerdict", "ArrayCollision", "DominatedVertex",
    "UnresolvedPair", "distance_array", "is_l_resolving", "is_l_solid",
    "is_l_solid_oracle", "necessary_resolving_condition",
    "is_doubly_resolving", "check_mode", "forced_vertices",
    "forced_vertices_oracle", "verify_witness",
    # search
    "SearchConfig", "SearchStats", "DimensionResult", "metric_dimension",
    "dimension_lower_bounds", "verify_basis_certificate",
    # rook
    "RookSet", "Design", "quadruple_coverage", "classify_conditions",
    "sufficiency_check", "rook_lower_bound", "design_to_set", "set_to_design",
    "validate_design", "parse_design", "write_design", "fano_plane_design",
    "ten_point_design",
    # snark
    "recipe_set", "verify_recipe", "check_erroneous_set", "verify_flank_table",
    "verify_triple_distinguishers", "gap_statistics", "reduction_map",
    "reduction_distance_check", "star_distance", "snark_suite",
]
