"""Implicit user networks from user-item rating data.

Parse rating files into a bipartite user-item graph, project it onto the
user side (two users are linked when they co-rated an item), and compute
connected components either after construction or interleaved with it.
"""

from .bipartite import (
    BipartiteRatingGraph,
    ParseError,
    RatingTriple,
    build_graph,
    max_item_degree,
    parse_ratings,
    parse_triples,
    slice_fraction,
)
from .connectivity import (
    ComponentSet,
    ConcurrentStats,
    ItemStatus,
    add_clique,
    bfs_components,
    design_concurrent,
    design_sequential,
)
from .oracle import (
    CheckResult,
    VerificationReport,
    oracle_two_path,
    verify_components,
    verify_projection,
)
from .projection import (
    PROJECTIONS,
    CountMatrix,
    UserNetwork,
    project,
    project_clique_addition,
    project_exhaustive,
    project_matmul,
    two_path_counts,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteRatingGraph",
    "CheckResult",
    "ComponentSet",
    "ConcurrentStats",
    "CountMatrix",
    "ItemStatus",
    "PROJECTIONS",
    "ParseError",
    "RatingTriple",
    "UserNetwork",
    "VerificationReport",
    "add_clique",
    "bfs_components",
    "build_graph",
    "design_concurrent",
    "design_sequential",
    "max_item_degree",
    "oracle_two_path",
    "parse_ratings",
    "parse_triples",
    "project",
    "project_clique_addition",
    "project_exhaustive",
    "project_matmul",
    "slice_fraction",
    "two_path_counts",
    "verify_components",
    "verify_projection",
]
