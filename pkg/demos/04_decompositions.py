"""Splitting base-solid edges into congruent matchings that share a rotation axis."""
from polypoly.coloring import decomposition_coloring_count
from polypoly.geometry import build_solid
from polypoly.structures import is_invariant, matching_decompositions

for kind, fold in [("tetrahedron", 2), ("cube", 3), ("cube", 4), ("dodecahedron", 5), ("dodecahedron", 3)]:
    decs = matching_decompositions(build_solid(kind), fold)
    invariant = sum(is_invariant(d) for d in decs)
    line = f"{kind} fold {fold}: {len(decs)} decompositions, {invariant} rotation invariant"
    if invariant:
        line += f", {decomposition_coloring_count(kind, fold)} distinct rainbow colorings"
    print(line)
