"""Rotation groups of the three base solids, built by closing two generators."""
from polypoly.geometry import build_solid, element_order_histogram, rotation_axes, rotation_group

for kind in ("tetrahedron", "cube", "dodecahedron"):
    solid = build_solid(kind)
    group = rotation_group(solid)
    print(f"{kind}: {len(solid.vertices)} vertices, {len(solid.edges)} edges")
    print(f"  rotation group order {group.order}, element orders {element_order_histogram(group)}")
    for fold in sorted(set(element_order_histogram(group)) - {1}):
        print(f"  {len(rotation_axes(group, fold))} axes of fold {fold}")
