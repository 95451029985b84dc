"""End-to-end solving: split the vertex set, enumerate and encode both
halves, join them through a dominance index, and sweep the degenerate
bipartitions separately.

The main join covers exactly the pairs where both half-bipartitions are
proper; the degenerate sweep covers the rest, so every ordered proper cut is
accounted for exactly once.  Decision, counting, witness, fixed-size, and
min/max modes all ride on the same machinery.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

import numpy as np

from . import oracle
from .dominance import PointSet, _block_counts, build_index
from .encoding import build_join_inputs, degenerate_candidate_masks, proper_submasks
from .errors import ResourceLimitError
from .graph import Cut, Graph, VertexSet
from .problems import InternalPartition, ProblemSpec, validate_spec

__all__ = [
    "SolveResult",
    "SolveStats",
    "SolverOptions",
    "construct_witness",
    "count_solutions",
    "optimize_size",
    "phase_candidate_masks",
    "solve",
    "solve_vector_box_sum",
    "solve_with_size",
]


@dataclass(frozen=True)
class SolverOptions:
    """Engine selection and tuning knobs; defaults favor reproducibility."""

    engine: str = "auto"  # auto | splitlist | brute | pairjoin
    index_engine: str = "recursive"  # recursive | naive
    prune: bool = True
    leaf_threshold: int = 32
    shuffle_coords: bool = False
    seed: int = 0
    threads: int = 1
    internal_route: str = "direct"  # direct | icc
    max_n: int = 64
    brute_max_n: int = oracle.BRUTE_FORCE_MAX_N
    pairjoin_max_n: int = oracle.PAIR_JOIN_MAX_N
    memory_budget_mb: int = 4096
    auto_brute_below: int = 8  # "auto" runs brute force up to this n


DEFAULT_OPTIONS = SolverOptions()


@dataclass
class SolveStats:
    stored: int = 0
    queries: int = 0
    time_ms: float = 0.0


@dataclass
class SolveResult:
    feasible: bool
    count: int | None = None
    witness: Cut | None = None
    optimal_size: int | None = None
    stats: SolveStats = field(default_factory=SolveStats)


def _resolve_engine(g: Graph, opts: SolverOptions) -> str:
    if opts.engine == "auto":
        return "brute" if g.n <= opts.auto_brute_below else "splitlist"
    if opts.engine in ("splitlist", "brute", "pairjoin"):
        return opts.engine
    raise ValueError(f"unknown engine {opts.engine!r}")


def _check_capacity(g: Graph, spec: ProblemSpec, opts: SolverOptions) -> None:
    n = g.n
    if n > opts.max_n:
        raise ResourceLimitError(f"n={n} exceeds the solver cap {opts.max_n}")
    ka = n // 2
    kb = n - ka
    rows = max(0, (1 << ka) - 2) + max(0, (1 << kb) - 2)
    direct = isinstance(spec.problem, InternalPartition) and (
        opts.internal_route == "direct"
    )
    dim = (2 * n if direct else 8 * n) + (2 if spec.size_target is not None else 0)
    est = rows * (2 * dim + 6 * n) * 2
    if est > opts.memory_budget_mb * (1 << 20):
        raise ResourceLimitError(
            f"estimated {est >> 20} MiB exceeds the budget "
            f"{opts.memory_budget_mb} MiB"
        )


def solve(g: Graph, spec: ProblemSpec, opts: SolverOptions = DEFAULT_OPTIONS) -> SolveResult:
    """Solve one instance in the mode carried by the spec."""
    validate_spec(g, spec)
    t0 = time.perf_counter()
    if spec.mode in ("minimize_left", "maximize_left"):
        direction = "minimize" if spec.mode == "minimize_left" else "maximize"
        result = _optimize(g, spec, direction, opts)
    else:
        engine = _resolve_engine(g, opts)
        if engine == "brute":
            result = _solve_brute(g, spec, opts)
        else:
            result = _solve_join(g, spec, opts, engine)
    result.stats.time_ms = (time.perf_counter() - t0) * 1000.0
    return result


def _solve_brute(g: Graph, spec: ProblemSpec, opts: SolverOptions) -> SolveResult:
    res = oracle.brute_force_count(g, spec, max_n=opts.brute_max_n)
    out = SolveResult(feasible=res.count > 0, count=res.count)
    if spec.mode == "witness" and out.feasible:
        mask = oracle.brute_first_feasible(g, spec, max_n=opts.brute_max_n)
        out.witness = Cut.from_left(VertexSet(mask, g.n))
    return out


def _solve_join(
    g: Graph, spec: ProblemSpec, opts: SolverOptions, engine: str
) -> SolveResult:
    _check_capacity(g, spec, opts)
    if engine == "pairjoin" and g.n > opts.pairjoin_max_n:
        raise ResourceLimitError(f"n={g.n} exceeds pair-join guard {opts.pairjoin_max_n}")
    inputs = build_join_inputs(
        g,
        spec.problem,
        size_target=spec.size_target,
        prune=opts.prune,
        internal_route=opts.internal_route,
    )
    index = None
    if engine == "splitlist":
        points = PointSet.of(inputs.data, ids=inputs.data_masks.astype(np.int64))
        index = build_index(
            points,
            engine=opts.index_engine,
            leaf_threshold=opts.leaf_threshold,
            shuffle_coords=opts.shuffle_coords,
            seed=opts.seed,
        )
        counts = index.batch_count(inputs.query, threads=opts.threads)
    else:
        counts = _block_counts(inputs.data, inputs.query)

    want_masks = spec.mode == "witness"
    special, special_masks = oracle.sweep_degenerate(
        g, spec.problem, spec.size_target, want_masks=want_masks
    )
    count = int(counts.sum()) + special
    out = SolveResult(feasible=count > 0, count=count)
    out.stats.stored = len(inputs.data)
    out.stats.queries = len(inputs.query)

    if want_masks and out.feasible:
        out.witness = _extract_witness(g, inputs, counts, special_masks, index)
    return out


def _extract_witness(
    g: Graph, inputs, counts: np.ndarray, special_masks: list[int], index
) -> Cut:
    if special_masks:
        return Cut.from_left(VertexSet(special_masks[0], g.n))
    qi = int(np.argmax(counts > 0))
    ka = g.n // 2
    s_mask = int(inputs.query_masks[qi])
    q = inputs.query[qi]
    if index is not None:
        s2_mask = index.find_dominated(q)
    else:
        hits = np.all(inputs.data <= q[None, :], axis=1)
        s2_mask = int(inputs.data_masks[int(np.argmax(hits))])
    left = s_mask | (int(s2_mask) << ka)
    return Cut.from_left(VertexSet(left, g.n))


def _optimize(
    g: Graph, spec: ProblemSpec, direction: str, opts: SolverOptions
) -> SolveResult:
    engine = _resolve_engine(g, opts)
    out = SolveResult(feasible=False)
    if engine == "brute":
        res = oracle.brute_force_count(
            g, replace(spec, size_target=None, mode="count"), max_n=opts.brute_max_n
        )
        best = res.min_left if direction == "minimize" else res.max_left
        out.feasible = best is not None
        out.optimal_size = best
        return out
    sizes = range(1, g.n) if direction == "minimize" else range(g.n - 1, 0, -1)
    for t in sizes:
        sub = solve(g, replace(spec, size_target=t, mode="decide"), opts)
        out.stats.stored += sub.stats.stored
        out.stats.queries += sub.stats.queries
        if sub.feasible:
            out.feasible = True
            out.optimal_size = t
            return out
    return out


def count_solutions(
    g: Graph, spec: ProblemSpec, opts: SolverOptions = DEFAULT_OPTIONS
) -> int:
    """Exact number of feasible ordered proper cuts."""
    return solve(g, replace(spec, mode="count"), opts).count


def construct_witness(
    g: Graph, spec: ProblemSpec, opts: SolverOptions = DEFAULT_OPTIONS
) -> Cut | None:
    """Some feasible cut, or None when the instance is infeasible."""
    return solve(g, replace(spec, mode="witness"), opts).witness


def solve_with_size(
    g: Graph, spec: ProblemSpec, t: int, opts: SolverOptions = DEFAULT_OPTIONS
) -> SolveResult:
    """Solve restricted to cuts with exactly t vertices on the left side."""
    return solve(g, replace(spec, size_target=t), opts)


def optimize_size(
    g: Graph,
    spec: ProblemSpec,
    direction: str,
    opts: SolverOptions = DEFAULT_OPTIONS,
) -> int | None:
    """Smallest or largest feasible left-side size, or None if infeasible."""
    if direction not in ("minimize", "maximize"):
        raise ValueError(f"direction must be minimize or maximize, got {direction!r}")
    mode = "minimize_left" if direction == "minimize" else "maximize_left"
    return solve(g, replace(spec, mode=mode, size_target=None), opts).optimal_size


def phase_candidate_masks(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Global left-side masks examined by the main join and by the degenerate
    sweep; together they cover every subset of V exactly once."""
    ka = g.n // 2
    pa = proper_submasks(ka)
    pb = proper_submasks(g.n - ka)
    if pa.size and pb.size:
        phase_a = (pa[:, None] | (pb[None, :] << np.uint64(ka))).ravel()
    else:
        phase_a = np.empty(0, dtype=np.uint64)
    return phase_a, degenerate_candidate_masks(g)


def _subset_sums(vectors: np.ndarray) -> np.ndarray:
    """Sums of all 2^k subsets, indexed by bitmask."""
    k, dim = vectors.shape
    out = np.zeros((1 << k, dim), dtype=np.int64)
    for j in range(k):
        step = 1 << j
        out[step : 2 * step] = out[:step] + vectors[j]
    return out


def solve_vector_box_sum(
    vectors,
    lo,
    hi,
    *,
    allow_empty: bool = True,
    index_engine: str = "recursive",
    leaf_threshold: int = 32,
) -> list[int] | None:
    """Find a subset of vectors whose sum lies in the box [lo, hi] coordinatewise.

    Both halves enumerate all of their subsets; a data vector (s, -s) for a
    second-half sum s is dominated by a query (hi - a, a - lo) for a
    first-half sum a exactly when lo <= a + s <= hi.  The empty subset is
    admissible unless `allow_empty` is False.  Returns the sorted indices of
    some witness subset, or None.
    """
    lo = np.asarray(lo, dtype=np.int64)
    hi = np.asarray(hi, dtype=np.int64)
    V = np.asarray(vectors, dtype=np.int64)
    if V.size == 0:
        V = V.reshape(0, lo.shape[0] if lo.ndim == 1 else 0)
    if V.ndim != 2:
        raise ValueError("vectors must form a 2-d array")
    dim = V.shape[1]
    if lo.shape != (dim,) or hi.shape != (dim,):
        raise ValueError("box bounds do not match the vector dimension")
    if np.any(lo > hi):
        raise ValueError("box has lo > hi on some coordinate")

    ka = V.shape[0] // 2
    sums_a = _subset_sums(V[:ka])
    sums_b = _subset_sums(V[ka:])
    data = np.concatenate([sums_b, -sums_b], axis=1)
    queries = np.concatenate([hi[None, :] - sums_a, sums_a - lo[None, :]], axis=1)

    index = build_index(
        PointSet.of(data), engine=index_engine, leaf_threshold=leaf_threshold
    )
    counts = index.batch_count(queries)
    if not allow_empty and np.all(lo <= 0) and np.all(0 <= hi):
        counts[0] -= 1  # the (empty, empty) pair is the only excluded one
    for qi in np.nonzero(counts > 0)[0]:
        hits = np.all(data <= queries[qi][None, :], axis=1)
        if not allow_empty and qi == 0:
            hits[0] = False
        di = int(np.argmax(hits))
        if not hits[di]:
            continue
        subset = [j for j in range(ka) if (int(qi) >> j) & 1]
        subset += [ka + j for j in range(V.shape[0] - ka) if (di >> j) & 1]
        return subset
    return None
