"""Polypolyhedra, their rotation groups, and counts of their symmetric edge colorings."""

from .catalog import CatalogEntry, SchemeSpec, catalog, lookup
from .coloring import (
    Coloring,
    count_scheme_colorings,
    divisibility_check,
    exhaustive_symmetric_colorings,
    is_symmetric_coloring,
    scheme_action,
)
from .geometry import (
    EPS,
    PolyModel,
    RotationAxis,
    RotationGroup,
    Solid,
    build_fit,
    build_solid,
    element_order_histogram,
    rotation_axes,
    rotation_group,
)
from .groups import (
    CosetScheme,
    GroupAction,
    burnside_kcolor_count,
    burnside_rainbow_count,
    coset_action,
    orbit_enum_count,
    stabilizer_of_point,
)
from .structures import (
    Band,
    Decomposition,
    Matching,
    axial_orbit_matchings,
    band_decomposition,
    band_of_edge,
    matching_decompositions,
    matching_of_band,
)

__version__ = "0.1.0"
