"""Subset selection with a vector sum confined to a box.

Given vectors v_1..v_k and bounds lo <= hi, find a subset whose sum lands
in [lo, hi] on every coordinate.  The same half-enumeration plus dominance
join answers it: second-half sums are stored as (s, -s), first-half sums
query with (hi - a, a - lo).
"""

import numpy as np

from splitcut import solve_vector_box_sum

rng = np.random.default_rng(3)
vectors = rng.integers(-9, 10, size=(14, 4))
lo = np.array([3, 3, 3, 3])
hi = np.array([12, 12, 12, 12])

subset = solve_vector_box_sum(vectors, lo, hi)
print("vectors:")
print(vectors)
print("\nbox:", lo, "..", hi)
print("witness subset:", subset)
if subset is not None:
    total = vectors[subset].sum(axis=0)
    print("its sum:", total)
    assert np.all(lo <= total) and np.all(total <= hi)

# the empty subset counts as a solution when 0 is inside the box;
# allow_empty=False demands a nonempty witness
print("\nempty subset allowed: ", solve_vector_box_sum([[5]], [0], [0]))
print("empty subset forbidden:", solve_vector_box_sum([[5]], [0], [0], allow_empty=False))
print("nonempty zero-sum pair:", solve_vector_box_sum([[5], [-5]], [0], [0], allow_empty=False))
