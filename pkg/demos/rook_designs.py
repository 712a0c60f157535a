#!/usr/bin/env python3
"""From block designs to {2}-resolving sets of rook's graphs and back.

A subset of the m x n rook's graph can be read as a design: block j lists
the rows missing from column j. The three design rules pin down exactly
when the complement locates every vertex pair, which turns a counting
bound into an exact dimension.
"""
from resolving import (
    all_pairs_distances,
    classify_conditions,
    design_to_set,
    fano_plane_design,
    is_l_resolving,
    quadruple_coverage,
    rook_flat,
    rook_graph,
    rook_lower_bound,
    set_to_design,
    sufficiency_check,
    ten_point_design,
    validate_design,
    write_design,
)

fano = fano_plane_design()
print("Fano plane as a design (block j = rows absent from column j):")
print(write_design(fano))
print(f"valid design: {validate_design(fano).holds}")

rs = design_to_set(fano)
print(f"complement set on the {rs.m}x{rs.n} grid has {len(rs.cells)} cells")
print(f"quadruple coverage: {quadruple_coverage(rs).holds}")
print(f"sufficiency check: {sufficiency_check(rs).holds}")
kinds = classify_conditions(rs)
print(f"condition type 1 (near-full corner): {kinds.type1}")
print(f"condition type 2 (spread rows and columns): {kinds.type2}")

# confirm with the generic checker on the actual graph
g = rook_graph(rs.m, rs.n)
dm = all_pairs_distances(g)
anchors = tuple(sorted(rook_flat(r, c, rs.n) for r, c in rs.cells))
print(f"generic {{2}}-resolving check on {g.n} vertices: "
      f"{is_l_resolving(dm, anchors, 2).holds}")

# the counting bound meets the construction, so 28 is exact
lb = rook_lower_bound(7, 7)
print(f"lower bound for the 7x7 grid: {lb}")
print(f"dimension pinned at {len(anchors)}: {lb == len(anchors)}")

# same story one size up: 81 anchors on the 12x10 grid
big = design_to_set(ten_point_design())
print(f"\n12x10 grid: set of {len(big.cells)} cells, "
      f"sufficiency {sufficiency_check(big).holds}, "
      f"lower bound {rook_lower_bound(12, 10)}")

# round trip: the set determines the design and vice versa
assert set_to_design(rs) == fano
print("\nset -> design -> set round trip holds")
