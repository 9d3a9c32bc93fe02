"""Lang's eighteen polypolyhedra with the colouring schemes worked out for them.

Structure counts and visual-band existence are transcribed data; nothing here
is re-derived from strut geometry.
"""
from __future__ import annotations

from dataclasses import dataclass, field

GROUP_ORDERS = {"tetrahedral": 12, "cuboctahedral": 24, "icosidodecahedral": 60}
GROUP_SOLIDS = {"tetrahedral": "tetrahedron", "cuboctahedral": "cube", "icosidodecahedral": "dodecahedron"}

MATCHING = "matching"
VISUAL_BAND = "visual_band"
MONOCHROMATIC = "monochromatic_components"


@dataclass(frozen=True)
class SchemeSpec:
    """How a family of ``structure_count`` edge sets is arranged under the group.

    ``axis_fold`` names the rotation that fixes one structure; the structure's
    stabilizer is a subgroup of order ``stabilizer_order`` containing it.
    ``absent`` maps variant labels where the scheme does not exist to the reason.
    """

    kind: str
    label: str
    structure_count: int
    stabilizer_order: int
    edges_per_structure: int
    axis_fold: int
    colors_per_component: int | None = None
    absent: dict[str, str] = field(default_factory=dict)

    def exists(self, variant: str | None = None) -> bool:
        return (variant or "") not in self.absent and "*" not in self.absent

    def reason(self, variant: str | None = None) -> str | None:
        return self.absent.get(variant or "", self.absent.get("*"))


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    name: str
    group: str
    component_count: int
    edges_per_component: int
    vertex_transitive: bool
    variants: tuple[str, ...] = ()
    schemes: tuple[SchemeSpec, ...] = ()
    polygon_components: bool = False
    lang_code: str | None = None

    @property
    def group_order(self) -> int:
        return GROUP_ORDERS[self.group]

    @property
    def total_edges(self) -> int:
        return self.component_count * self.edges_per_component

    def scheme(self, label: str) -> SchemeSpec:
        aliases = {"visual-band": "visual_band", "band": "band", "mono": "mono",
                   "monochromatic": "mono", "matching": "matching"}
        want = aliases.get(label, label)
        for s in self.schemes:
            if s.label == want or s.kind == want:
                return s
        raise KeyError(f"{self.key} has no scheme {label!r}")

    def check_variant(self, variant: str | None) -> None:
        if self.variants and variant not in self.variants:
            raise KeyError(f"{self.key} variants are {', '.join(self.variants)}; got {variant!r}")
        if not self.variants and variant not in (None, "", "-"):
            raise KeyError(f"{self.key} has no variants; got {variant!r}")


def _mono(components: int, order: int, edges: int, fold: int) -> SchemeSpec:
    return SchemeSpec(MONOCHROMATIC, "mono", components, order // components, edges, fold, 1)


def _matchings_of_twelve(colors: int) -> SchemeSpec:
    # 12 five-edge matchings about the 5-fold axes, two per dodecahedral matching
    return SchemeSpec(MATCHING, "matching", 12, 5, 5, 5, colors)


def _entries() -> list[CatalogEntry]:
    ico, cub, tet = "icosidodecahedral", "cuboctahedral", "tetrahedral"
    fit = CatalogEntry(
        "fit", "Five Intersecting Tetrahedra", ico, 5, 6, True,
        schemes=(
            SchemeSpec(VISUAL_BAND, "band", 6, 10, 5, 5, 6),
            SchemeSpec(MATCHING, "matching", 6, 10, 5, 5, 6),
            _mono(5, 60, 6, 3),
        ),
    )
    finh = CatalogEntry(
        "finh", "five intersecting non-convex hexahedra", ico, 5, 12, False,
        lang_code="5-6-4",
        schemes=(
            _matchings_of_twelve(12),
            SchemeSpec(VISUAL_BAND, "visual_band", 6, 10, 10, 5, None,
                       {"*": "no visual band: the FINH has no visual bands"}),
            _mono(5, 60, 12, 3),
        ),
    )
    fib3p = CatalogEntry(
        "fib3p", "four intersecting bi-3-pyramids (no base edges)", cub, 4, 6, False,
        variants=("A", "B"), lang_code="4-3-4",
        schemes=(
            SchemeSpec(MATCHING, "matching", 8, 3, 3, 3, 6),
            SchemeSpec(VISUAL_BAND, "visual_band", 4, 6, 6, 3, 3,
                       {"B": "no visual band: would need two struts of one colour at each 3-valent vertex"}),
            _mono(4, 24, 6, 3),
        ),
    )
    fiet = CatalogEntry(
        "fiet", "five intersecting edge-dented tetrahedra", ico, 5, 12, False,
        variants=("A", "B"), lang_code="5-4-6",
        schemes=(
            _matchings_of_twelve(12),
            SchemeSpec(VISUAL_BAND, "visual_band", 6, 10, 10, 5, 6,
                       {"A": "no visual band: variant A has only matching colorings"}),
            _mono(5, 60, 12, 3),
        ),
    )
    tib3p = CatalogEntry(
        "tib3p", "ten intersecting bi-3-pyramids (no base edges)", ico, 10, 6, False,
        variants=("A", "B", "C"), lang_code="10-3-4",
        schemes=(
            SchemeSpec(MATCHING, "matching", 6, 10, 10, 5, 6),
            SchemeSpec(VISUAL_BAND, "visual_band", 6, 10, 10, 5, None,
                       {"B": "no visual band: variant B has none"}),
            _mono(10, 60, 6, 3),
        ),
    )
    sib5p = CatalogEntry(
        "sib5p", "six intersecting bi-5-pyramids (no base edges)", ico, 6, 10, False,
        variants=("A1", "A2", "B1", "B2"), lang_code="6-5-4",
        schemes=(
            _matchings_of_twelve(10),
            SchemeSpec(VISUAL_BAND, "visual_band", 6, 10, 10, 5, None, {
                "A1": "no visual band: 2 does not divide 5 at the 5-valent vertices",
                "A2": "no visual band: 2 does not divide 5 at the 5-valent vertices",
                "B1": "no visual band: pairs not incident",
                "B2": "no visual band: pairs not incident",
            }),
            _mono(6, 60, 10, 5),
        ),
    )

    def polygon(key, name, group, comps, sides, vt, fold, nvar=0):
        variants = tuple(str(i + 1) for i in range(nvar))
        return CatalogEntry(
            key, name, group, comps, sides, vt, variants,
            (_mono(comps, GROUP_ORDERS[group], sides, fold),), polygon_components=True,
        )

    return [
        fit, finh, fib3p, fiet, tib3p, sib5p,
        polygon("4-triangles-cub", "four interlaced triangles", cub, 4, 3, True, 3),
        polygon("6-pentagons", "six interlaced pentagons", ico, 6, 5, True, 5),
        polygon("10-triangles", "ten interlaced triangles", ico, 10, 3, True, 3),
        polygon("3-squares", "three interlaced squares", tet, 3, 4, False, 2),
        polygon("4-hexagons", "four interlaced hexagons", cub, 4, 6, False, 3),
        polygon("6-decagons", "six interlaced decagons", ico, 6, 10, False, 5),
        polygon("10-hexagons", "ten interlaced hexagons", ico, 10, 6, False, 3),
        polygon("4-triangles-tet", "four interlaced triangles", tet, 4, 3, True, 3),
        polygon("6-squares", "six interlaced squares", cub, 6, 4, True, 4, 2),
        polygon("8-triangles", "eight interlaced triangles", cub, 8, 3, True, 3, 3),
        polygon("12-pentagons", "twelve interlaced pentagons", ico, 12, 5, True, 5, 5),
        polygon("20-triangles", "twenty interlaced triangles", ico, 20, 3, True, 3, 23),
    ]


_CATALOG = tuple(_entries())


def catalog() -> list[CatalogEntry]:
    return list(_CATALOG)


def lookup(key: str) -> CatalogEntry:
    for entry in _CATALOG:
        if entry.key == key.lower():
            return entry
    raise KeyError(f"unknown model {key!r}")
