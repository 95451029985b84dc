"""How half-bipartitions become vectors whose dominance means feasibility.

Split the 4-cycle into halves {1,2} and {3,4}.  Each proper bipartition
(S, R) of the first half becomes a query vector, each proper (S', R') of
the second half becomes a data vector, and the combined cut (S u S',
R u R') satisfies the own-side-majority condition exactly when the query
dominates the data vector coordinatewise.  On the cycle, the two diagonal
pairings are feasible and the two others are not.
"""

import numpy as np

from splitcut import (
    Cut,
    InternalPartition,
    VertexSet,
    encode_internal_data,
    encode_internal_query,
    parse_graph,
    split_halves,
    validate_cut,
)

g = parse_graph("4 4\n1 2\n2 3\n3 4\n4 1\n")
va, vb = split_halves(g)
print("halves (0-based):", sorted(va), "and", sorted(vb))

sides_a = [([0], [1]), ([1], [0])]
sides_b = [([2], [3]), ([3], [2])]

print("\n  S    R    S'   R'   q >= p   feasible")
for sa, ra in sides_a:
    s, r = VertexSet.of(sa, 4), VertexSet.of(ra, 4)
    q = encode_internal_query(g, va, vb, s, r)
    for sb, rb in sides_b:
        s2, r2 = VertexSet.of(sb, 4), VertexSet.of(rb, 4)
        p = encode_internal_data(g, va, vb, s2, r2)
        dominates = bool(np.all(q.entries >= p.entries))
        cut = Cut.from_left(s | s2)
        ok, _ = validate_cut(g, InternalPartition(), cut)
        print(f"  {sa}  {ra}  {sb}  {rb}   {str(dominates):5}    {ok}")
        assert dominates == ok

print("\nquery for S={0}, R={1}:", )
q = encode_internal_query(g, va, vb, VertexSet.of([0], 4), VertexSet.of([1], 4))
print("  entries:", q.entries.tolist())
print("  first n entries: own-side excess (or +n sentinel when placed right)")
print("  last n entries:  other-side excess (or +n sentinel when placed left)")
