"""Parsing instances and deciding constrained cuts.

A 1-cut (matching cut) asks for a proper bipartition where no vertex has
more than one neighbor across the cut.  The 4-cycle has one, the complete
graph on 4 vertices does not.
"""

from splitcut import (
    DCut,
    InternalPartition,
    ProblemSpec,
    construct_witness,
    parse_graph,
    solve,
    validate_cut,
)

C4_TEXT = """\
# the 4-cycle
4 4
1 2
2 3
3 4
4 1
"""

K4_TEXT = "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"

c4 = parse_graph(C4_TEXT)
k4 = parse_graph(K4_TEXT)
print("parsed:", c4, "and", k4)

spec = ProblemSpec(DCut(1))
print("\n1-cut on the 4-cycle:", solve(c4, spec).feasible)
print("1-cut on K4:        ", solve(k4, spec).feasible)

# a concrete cut, checked against the definition and reported back 1-based
witness = construct_witness(c4, spec)
print("\nwitness cut:", witness)
ok, violation = validate_cut(c4, DCut(1), witness)
print("validator agrees:", ok, "| first violation:", violation)

# the own-side-majority problem on a path: the two leaf edges must not be
# separated, which forces the split down the middle
p4 = parse_graph("4 3\n1 2\n2 3\n3 4\n")
internal = ProblemSpec(InternalPartition(), mode="witness")
result = solve(p4, internal)
print("\nown-side-majority split of the path:", result.witness)
