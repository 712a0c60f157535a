#!/usr/bin/env python3
"""Walk the bundled 9-vertex graph through every check mode.

Four anchor sets on the same graph separate the four notions: a set can
locate single vertices but not sets, or locate every small set without
surviving the stricter domination test.
"""
from resolving import (
    all_pairs_distances,
    demo_graph,
    distance_array,
    is_doubly_resolving,
    is_l_resolving,
    is_l_solid,
    necessary_resolving_condition,
    verify_witness,
)

g = demo_graph()
dm = all_pairs_distances(g)
print(f"graph: {g.n} vertices, labels {g.labels}")

R1 = (1, 2, 6)
S1 = (0, 1, 2, 6, 7)
R2 = (0, 1, 2, 3, 7, 8)
S2 = (0, 1, 2, 3, 5, 7, 8)


def names(vs):
    return "{" + ", ".join(g.labels[v] for v in vs) + "}"


# R1 tells single vertices apart: each vertex gets its own distance array.
print(f"\n{names(R1)} is 1-resolving: {is_l_resolving(dm, R1, 1).holds}")
print(f"  array of {g.labels[5]}: {distance_array(dm, R1, (5,))}")

# It cannot tell some pairs of 2-sets apart, so order 2 fails.
verdict = is_l_resolving(dm, R1, 2)
print(f"{names(R1)} is 2-resolving: {verdict.holds}")
w = verdict.witness
print(f"  colliding sets {names(w.first)} and {names(w.second)}, shared array {w.array}")
print(f"  witness re-verifies: {verify_witness(dm, R1, w)}")

# S1 survives the 1-domination scan but still confuses two 2-sets.
print(f"\n{names(S1)} is 1-solid: {is_l_solid(dm, S1, 1).holds}")
print(f"{names(S1)} is 2-resolving: {is_l_resolving(dm, S1, 2).holds}")
print(f"  shared array of two different 2-sets: {distance_array(dm, S1, (5, 7))}")

# R2 locates all sets up to size 2, yet one vertex is dominated by a pair,
# so it is not 2-solid. The solid check names that vertex.
print(f"\n{names(R2)} is 2-resolving: {is_l_resolving(dm, R2, 2).holds}")
verdict = is_l_solid(dm, R2, 2)
print(f"{names(R2)} is 2-solid: {verdict.holds}")
w = verdict.witness
print(f"  vertex {g.labels[w.vertex]} is dominated by {names(w.dominating)}")

# S2 passes the 2-solid test outright.
print(f"\n{names(S2)} is 2-solid: {is_l_solid(dm, S2, 2).holds}")

# The order-(l-1) domination scan is necessary for being l-resolving,
# but as S1 shows it is not sufficient.
nec = necessary_resolving_condition(dm, S1, 2)
print(f"\nnecessary condition for 2-resolving on {names(S1)}: {nec.holds}")
print(f"  yet 2-resolving itself: {is_l_resolving(dm, S1, 2).holds}")

# Any 1-solid or 2-resolving set also resolves pairs doubly.
for s in (S1, R2, S2):
    print(f"doubly resolving {names(s)}: {is_doubly_resolving(dm, s).holds}")
