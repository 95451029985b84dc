"""Dominance range counting and reporting over integer point sets.

A stored point y is dominated by a query q when y_i <= q_i on every
coordinate (inclusive).  Two interchangeable engines answer batch counting
queries: a chunked naive scan, and an offline divide-and-conquer that
recursively splits points at a pivot coordinate value and retires a
coordinate whenever the split resolves it for one side.  Both are exact;
the naive engine doubles as the oracle for the other.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

__all__ = ["DominanceIndex", "PointSet", "build_index"]

_CHUNK_ELEMS = 1 << 24


@dataclass(frozen=True, eq=False)
class PointSet:
    """Fixed-dimension integer vectors, each with an opaque integer id."""

    points: np.ndarray
    ids: np.ndarray

    @classmethod
    def of(cls, points: np.ndarray, ids: np.ndarray | None = None) -> "PointSet":
        points = np.asarray(points)
        if points.ndim != 2:
            raise ValueError("points must be a 2-d array")
        if ids is None:
            ids = np.arange(len(points), dtype=np.int64)
        else:
            ids = np.asarray(ids)
            if ids.shape != (len(points),):
                raise ValueError("ids length differs from point count")
            if len(np.unique(ids)) != len(ids):
                raise ValueError("ids are not unique")
        return cls(points, ids)

    @property
    def dim(self) -> int:
        return int(self.points.shape[1])

    def __len__(self) -> int:
        return int(self.points.shape[0])


def _block_counts(points: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """Per-query dominated-point counts by direct comparison, chunked to
    keep the broadcast workspace bounded."""
    nq = len(queries)
    counts = np.zeros(nq, dtype=np.int64)
    if len(points) == 0 or nq == 0:
        return counts
    per_query = points.shape[0] * points.shape[1]
    step = max(1, _CHUNK_ELEMS // per_query)
    for lo in range(0, nq, step):
        qc = queries[lo : lo + step]
        hits = np.all(points[None, :, :] <= qc[:, None, :], axis=2)
        counts[lo : lo + step] = hits.sum(axis=1)
    return counts


def _offline_counts(
    points: np.ndarray,
    queries: np.ndarray,
    coord_order: np.ndarray,
    leaf_threshold: int,
    counts: np.ndarray,
    stats: dict | None = None,
) -> None:
    """Offline divide-and-conquer dominance counting, accumulated into `counts`.

    At each node, points are split at the lower median m of the pivot
    coordinate.  Queries below m can only dominate points strictly below m
    (the pivot coordinate stays open); queries at or above m resolve the
    pivot coordinate against all points at or below m, so that subproblem
    drops the coordinate.  Every branch strictly shrinks the point set or
    the coordinate set, so the recursion terminates at any leaf threshold.
    """
    if len(points) == 0 or len(queries) == 0:
        return
    stack: list[tuple[np.ndarray, np.ndarray, np.ndarray, int, int]] = [
        (
            np.arange(len(queries), dtype=np.int64),
            np.arange(len(points), dtype=np.int64),
            coord_order,
            0,
            0,
        )
    ]
    while stack:
        qs, ps, coords, pos, depth = stack.pop()
        if qs.size == 0 or ps.size == 0:
            continue
        if stats is not None:
            stats["nodes"] += 1
            stats["max_depth"] = max(stats["max_depth"], depth)
        if coords.size == 0:
            # every remaining coordinate was resolved: all points dominated
            counts[qs] += ps.size
            continue
        if min(qs.size, ps.size) <= leaf_threshold:
            if stats is not None:
                stats["leaves"] += 1
            sub = _block_counts(
                points[np.ix_(ps, coords)], queries[np.ix_(qs, coords)]
            )
            counts[qs] += sub
            continue
        at = pos % coords.size
        i = coords[at]
        vals = points[ps, i]
        m = np.partition(vals, (vals.size - 1) // 2)[(vals.size - 1) // 2]
        above = vals > m
        p_lo = ps[~above]
        p_hi = ps[above]
        p_strict = ps[vals < m]
        q_above = queries[qs, i] >= m
        q_lo = qs[~q_above]
        q_hi = qs[q_above]
        stack.append((q_lo, p_strict, coords, pos + 1, depth + 1))
        stack.append((q_hi, p_hi, coords, pos + 1, depth + 1))
        stack.append((q_hi, p_lo, np.delete(coords, at), at, depth + 1))


class DominanceIndex:
    """Immutable store of integer vectors answering dominance queries.

    engine "naive" scans every stored point per query; engine "recursive"
    runs the offline divide-and-conquer over each query batch.  Counts are
    exact for both.  After construction the index is read-only, so any
    number of concurrent query workers is safe.
    """

    def __init__(
        self,
        pointset: PointSet,
        engine: str = "recursive",
        leaf_threshold: int = 32,
        shuffle_coords: bool = False,
        seed: int = 0,
    ):
        if engine not in ("naive", "recursive"):
            raise ValueError(f"unknown engine {engine!r}")
        if leaf_threshold < 1:
            raise ValueError("leaf_threshold must be >= 1")
        self._pointset = pointset
        self.engine = engine
        self.leaf_threshold = leaf_threshold
        self.shuffle_coords = shuffle_coords
        self.seed = seed
        if shuffle_coords:
            rng = np.random.default_rng(seed)
            self._coord_order = rng.permutation(pointset.dim).astype(np.int64)
        else:
            self._coord_order = np.arange(pointset.dim, dtype=np.int64)

    def __len__(self) -> int:
        return len(self._pointset)

    @property
    def dim(self) -> int:
        return self._pointset.dim

    def _check_query(self, q: np.ndarray) -> np.ndarray:
        q = np.asarray(q)
        if q.shape != (self.dim,):
            raise ValueError(f"query has shape {q.shape}, index dimension is {self.dim}")
        return q

    def count_dominated(self, q: np.ndarray) -> int:
        """Exact number of stored points dominated by q."""
        q = self._check_query(q)
        if len(self._pointset) == 0:
            return 0
        return int(np.all(self._pointset.points <= q[None, :], axis=1).sum())

    def find_dominated(self, q: np.ndarray) -> int | None:
        """The id of some stored point dominated by q, or None."""
        q = self._check_query(q)
        if len(self._pointset) == 0:
            return None
        hits = np.all(self._pointset.points <= q[None, :], axis=1)
        idx = int(np.argmax(hits))
        if not hits[idx]:
            return None
        return int(self._pointset.ids[idx])

    def batch_count(self, queries: np.ndarray, threads: int = 1) -> np.ndarray:
        """Per-query dominated-point counts; element-wise equal to count_dominated."""
        counts, _ = self._batch(queries, threads=threads, with_stats=False)
        return counts

    def batch_count_with_stats(self, queries: np.ndarray) -> tuple[np.ndarray, dict]:
        """Single-threaded batch count plus traversal statistics."""
        return self._batch(queries, threads=1, with_stats=True)

    def _batch(
        self, queries: np.ndarray, threads: int, with_stats: bool
    ) -> tuple[np.ndarray, dict]:
        queries = np.asarray(queries)
        if queries.ndim != 2 or queries.shape[1] != self.dim:
            raise ValueError(
                f"queries have shape {queries.shape}, index dimension is {self.dim}"
            )
        stats = {"nodes": 0, "max_depth": 0, "leaves": 0} if with_stats else None

        def run(chunk: np.ndarray) -> np.ndarray:
            if self.engine == "naive":
                return _block_counts(self._pointset.points, chunk)
            counts = np.zeros(len(chunk), dtype=np.int64)
            _offline_counts(
                self._pointset.points,
                chunk,
                self._coord_order,
                self.leaf_threshold,
                counts,
                stats,
            )
            return counts

        if threads <= 1 or len(queries) < 2:
            return run(queries), stats or {}
        bounds = np.linspace(0, len(queries), threads + 1, dtype=np.int64)
        chunks = [queries[bounds[i] : bounds[i + 1]] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, chunks))
        return np.concatenate(parts), stats or {}

    def describe(self) -> str:
        order = "shuffled" if self.shuffle_coords else "natural"
        return (
            f"DominanceIndex(engine={self.engine}, points={len(self)}, "
            f"dim={self.dim}, leaf_threshold={self.leaf_threshold}, "
            f"coords={order}, seed={self.seed})"
        )


def build_index(
    points: PointSet,
    engine: str = "recursive",
    leaf_threshold: int = 32,
    shuffle_coords: bool = False,
    seed: int = 0,
) -> DominanceIndex:
    """Build an immutable dominance index over the given points."""
    return DominanceIndex(
        points,
        engine=engine,
        leaf_threshold=leaf_threshold,
        shuffle_coords=shuffle_coords,
        seed=seed,
    )
