"""Exact solvers for constrained graph bipartition problems.

The core method enumerates the bipartitions of each half of the vertex set,
encodes them as integer vectors, and joins the two lists through a dominance
range-search index, so that a feasible combined cut corresponds exactly to a
dominating query/data pair.  Decision, counting, witness construction,
fixed-size, and size-optimization modes are supported for cross-degree-capped
cuts, own-side-majority partitions, interval domination, and fully
vertex-specific interval constraints, all cross-checked against brute-force
oracles.
"""

from .dominance import DominanceIndex, PointSet, build_index
from .encoding import (
    EncodedVector,
    OffsetVector,
    append_size_dims,
    encode_icc_data,
    encode_icc_query,
    encode_internal_data,
    encode_internal_query,
    make_offset,
)
from .errors import ResourceLimitError
from .graph import (
    Cut,
    Graph,
    GraphParseError,
    VertexSet,
    neighbor_count,
    parse_graph,
    random_graph,
    split_halves,
)
from .oracle import (
    OracleResult,
    brute_force_count,
    naive_pair_join,
)
from .problems import (
    AlphaBetaDomination,
    ConstraintParseError,
    DCut,
    Interval,
    IntervalConstrainedCut,
    InternalPartition,
    ProblemSpec,
    VertexConstraints,
    Violation,
    abdom_to_icc,
    dcut_to_icc,
    internal_to_icc,
    interval_constraints,
    parse_constraints,
    validate_cut,
)
from .solver import (
    SolveResult,
    SolverOptions,
    SolveStats,
    construct_witness,
    count_solutions,
    optimize_size,
    solve,
    solve_vector_box_sum,
    solve_with_size,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaBetaDomination",
    "ConstraintParseError",
    "Cut",
    "DCut",
    "DominanceIndex",
    "EncodedVector",
    "Graph",
    "GraphParseError",
    "Interval",
    "IntervalConstrainedCut",
    "InternalPartition",
    "OffsetVector",
    "OracleResult",
    "PointSet",
    "ProblemSpec",
    "ResourceLimitError",
    "SolveResult",
    "SolveStats",
    "SolverOptions",
    "VertexConstraints",
    "VertexSet",
    "Violation",
    "abdom_to_icc",
    "append_size_dims",
    "brute_force_count",
    "build_index",
    "construct_witness",
    "count_solutions",
    "dcut_to_icc",
    "encode_icc_data",
    "encode_icc_query",
    "encode_internal_data",
    "encode_internal_query",
    "internal_to_icc",
    "interval_constraints",
    "make_offset",
    "naive_pair_join",
    "neighbor_count",
    "optimize_size",
    "parse_constraints",
    "parse_graph",
    "random_graph",
    "solve",
    "solve_vector_box_sum",
    "solve_with_size",
    "split_halves",
    "validate_cut",
]
