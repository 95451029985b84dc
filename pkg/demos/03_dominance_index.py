"""The dominance range-search structure on its own.

Store N integer vectors; a query q counts the stored vectors it dominates
(y <= q on every coordinate, inclusive).  The offline divide-and-conquer
engine and the naive scan return identical counts; only the work differs.
"""

import numpy as np

from splitcut import PointSet, build_index

rng = np.random.default_rng(42)
points = rng.integers(-20, 21, size=(2000, 16))
queries = rng.integers(-20, 21, size=(2000, 16))

naive = build_index(PointSet.of(points), engine="naive")
recursive = build_index(PointSet.of(points), engine="recursive", leaf_threshold=16)
print(recursive.describe())

counts_naive = naive.batch_count(queries)
counts_rec, stats = recursive.batch_count_with_stats(queries)
assert np.array_equal(counts_naive, counts_rec)
print("engines agree on", len(queries), "queries")
print("traversal:", stats)

# single-query operations
q = queries[0]
print("\nfirst query dominates", recursive.count_dominated(q), "stored vectors")
print("one witness id:", recursive.find_dominated(q))

# dominance counts are monotone in the query
q2 = q + 5
print("after raising every coordinate by 5:", recursive.count_dominated(q2))
assert recursive.count_dominated(q2) >= recursive.count_dominated(q)

# saturation: the coordinatewise maximum dominates everything
top = points.max(axis=0)
print("count at the coordinatewise maximum:", recursive.count_dominated(top))
