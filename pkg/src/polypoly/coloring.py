"""Symmetric edge colorings: the checker, scheme counting and a brute-force oracle."""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .catalog import GROUP_SOLIDS, MONOCHROMATIC, CatalogEntry, SchemeSpec
from .geometry import PolyModel, build_fit, build_solid, rotation_axes, solid_model
from .groups import (
    ENUM_LIMIT,
    CosetScheme,
    GroupAction,
    TooLarge,
    are_conjugate_subgroups,
    burnside_rainbow_count,
    coset_action,
    generate_subgroup,
    lexmin_rainbow_representatives,
    stabilizer_of_point,
)
from .structures import (
    band_decomposition,
    decomposition_action,
    induced_action,
    is_invariant,
    matching_decompositions,
    solid_group,
)


class SizeMismatch(ValueError):
    pass


class NoSuchSubgroup(ValueError):
    pass


class SchemeUnavailable(LookupError):
    """The scheme does not exist for the requested variant."""


@dataclass(frozen=True)
class Coloring:
    edge_colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(int(c) for c in self.edge_colors)
        object.__setattr__(self, "edge_colors", colors)
        if colors and set(colors) != set(range(max(colors) + 1)):
            raise ValueError("colour indices must be dense in 0..k-1")

    @classmethod
    def from_labels(cls, labels) -> "Coloring":
        """Renumber arbitrary labels densely in order of first appearance."""
        seen: dict = {}
        return cls(tuple(seen.setdefault(x, len(seen)) for x in labels))

    @property
    def num_colors(self) -> int:
        return len(set(self.edge_colors))

    def classes(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for e, c in enumerate(self.edge_colors):
            out[c].append(e)
        return [tuple(c) for c in out]


@dataclass(frozen=True)
class Witness:
    element: int
    color: int
    color_class: tuple[int, ...]
    image: tuple[int, ...]
    image_colors: tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    symmetric: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.symmetric


def is_symmetric_coloring(model: PolyModel, coloring: Coloring) -> Verdict:
    """Every group element must carry each colour class onto a whole class."""
    colors = np.asarray(coloring.edge_colors)
    if len(colors) != model.n_edges:
        raise SizeMismatch(f"coloring has {len(colors)} edges, model has {model.n_edges}")
    classes = coloring.classes()
    for g, perm in enumerate(model.edge_action):
        for c, members in enumerate(classes):
            image = perm[list(members)]
            hit = np.unique(colors[image])
            if len(hit) != 1 or len(classes[hit[0]]) != len(members):
                return Verdict(False, Witness(
                    g, c, members, tuple(sorted(image.tolist())), tuple(hit.tolist()),
                ))
    return Verdict(True)


def divisibility_check(entry: CatalogEntry, k: int) -> bool:
    if k < 1:
        raise ValueError("need at least one colour")
    return entry.edges_per_component % k == 0


def find_stabilizer(group, order: int, fold: int) -> tuple[int, ...]:
    """First subgroup of the given order containing an axial rotation of ``fold``."""
    gen = rotation_axes(group, fold)[0].generator_index
    cyclic = generate_subgroup(group, [gen])
    if len(cyclic) == order:
        return cyclic
    for h in range(group.order):
        sub = generate_subgroup(group, [gen, h])
        if len(sub) == order:
            return sub
    raise NoSuchSubgroup(f"no subgroup of order {order} contains a {fold}-fold rotation")


@functools.lru_cache(maxsize=None)
def _fit(chirality: str = "right") -> PolyModel:
    return build_fit(chirality)


def fit_band_action(chirality: str = "right") -> GroupAction:
    model = _fit(chirality)
    bands = band_decomposition(model)
    return induced_action(model.edge_action, [b.edge_indices for b in bands], model.group.mul)


def scheme_action(entry: CatalogEntry, scheme: SchemeSpec, chirality: str = "right") -> CosetScheme:
    """Group action on the scheme's structures, realised as a coset action.

    For the FIT's band and matching schemes the action is taken from the
    actual bands and checked against the coset model.
    """
    group = solid_group(GROUP_SOLIDS[entry.group])
    if entry.key == "fit" and scheme.kind != MONOCHROMATIC:
        induced = fit_band_action(chirality)
        stab = stabilizer_of_point(induced, 0)
        model_stab = find_stabilizer(group, scheme.stabilizer_order, scheme.axis_fold)
        if not are_conjugate_subgroups(group, stab, model_stab):
            raise NoSuchSubgroup("band stabilizer is not conjugate to the coset model's")
        cs = coset_action(group, stab)
        # point i of the induced action is the image of band 0 under coset rep i
        order = [int(induced.perms[r, 0]) for r in cs.representatives]
        if sorted(order) != list(range(induced.n_points)):
            raise NoSuchSubgroup("induced band action is not transitive")
        return CosetScheme(group, cs.stabilizer, cs.representatives, induced)
    stab = find_stabilizer(group, scheme.stabilizer_order, scheme.axis_fold)
    cs = coset_action(group, stab)
    if cs.n != scheme.structure_count:
        raise NoSuchSubgroup(f"coset action has {cs.n} points, expected {scheme.structure_count}")
    return cs


def count_scheme_colorings(entry: CatalogEntry, scheme: SchemeSpec, variant: str | None = None) -> int:
    """Rotation classes of colourings giving each structure its own colour."""
    if not scheme.exists(variant):
        raise SchemeUnavailable(scheme.reason(variant))
    if scheme.kind == MONOCHROMATIC:
        return 1
    return burnside_rainbow_count(scheme_action(entry, scheme).action)


def _moved(codes: np.ndarray, perm: np.ndarray) -> np.ndarray:
    # colour of edge e moves to edge perm[e]
    out = np.empty_like(codes)
    out[:, perm] = codes
    return out


def exhaustive_symmetric_colorings(model: PolyModel, k: int, chunk: int = 1 << 16) -> list[Coloring]:
    """Brute force: every k-colouring using all k colours, filtered and folded into orbits.

    Returns the lexicographically smallest member of each orbit, sorted.
    """
    n = model.n_edges
    if k < 1:
        raise ValueError("need at least one colour")
    if k**n > ENUM_LIMIT:
        raise TooLarge(f"{k}**{n} colourings exceeds the {ENUM_LIMIT} guard")
    weights = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    perms = model.edge_action
    canon: set[int] = set()
    for start in range(0, k**n, chunk):
        idx = np.arange(start, min(start + chunk, k**n), dtype=np.int64)
        rows = (idx[:, None] // weights) % k
        full = np.ones(len(rows), bool)
        for c in range(k):
            full &= (rows == c).any(axis=1)
        rows = rows[full]
        ok = np.ones(len(rows), bool)
        for perm in perms:
            # colour pairs (c(e), c(g e)) must form a bijection on the k colours
            pairs = np.sort(rows * k + rows[:, perm], axis=1)
            distinct = 1 + (np.diff(pairs, axis=1) != 0).sum(axis=1)
            ok &= distinct == k
        rows = rows[ok]
        if len(rows):
            best = np.min(np.stack([_moved(rows, p) @ weights for p in perms]), axis=0)
            canon.update(best.tolist())
    return [Coloring(tuple(int(x) for x in (c // weights) % k)) for c in sorted(canon)]


def tetrahedron_model() -> PolyModel:
    return solid_model("tetrahedron")


# geometric schemes that can be exported or verified concretely
GEOMETRIC_MODELS = ("fit", "dodecahedron", "cube", "tetrahedron")


def geometric_scheme(model_name: str, scheme: str, chirality: str = "right"):
    """Model, its structures (edge index sets) and the action on them."""
    if model_name == "fit":
        model = _fit(chirality)
        if scheme in ("band", "matching"):
            structures = [b.edge_indices for b in band_decomposition(model)]
        elif scheme == "mono":
            # one colour for every edge: the unique monochromatic-component colouring
            structures = [tuple(range(model.n_edges))]
        else:
            raise KeyError(f"fit has no scheme {scheme!r}; use band, matching or mono")
        return model, structures, induced_action(model.edge_action, structures, model.group.mul)
    if model_name in ("dodecahedron", "cube", "tetrahedron"):
        model = solid_model(model_name)
        if scheme == "mono":
            structures = [tuple(range(model.n_edges))]
        elif scheme.startswith("matching") and scheme[8:].isdigit():
            decomp = invariant_decomposition(model_name, int(scheme[8:]))
            structures = list(decomp.edge_sets())
        else:
            raise KeyError(f"{model_name} has no scheme {scheme!r}; use matchingK or mono")
        return model, structures, induced_action(model.edge_action, structures, model.group.mul)
    raise KeyError(f"unknown geometric model {model_name!r}")


def invariant_decomposition(kind: str, fold: int):
    """First decomposition whose matchings the whole group permutes."""
    for d in matching_decompositions(build_solid(kind), fold):
        if is_invariant(d):
            return d
    raise LookupError(f"no rotation-invariant {fold}-fold decomposition of the {kind}")


def decomposition_coloring_count(kind: str, fold: int) -> int:
    return burnside_rainbow_count(decomposition_action(invariant_decomposition(kind, fold)))


def scheme_coloring_count(structures, action: GroupAction) -> int:
    if len(structures) == 1:
        return 1
    return burnside_rainbow_count(action)


def nth_scheme_coloring(model: PolyModel, structures, action: GroupAction, index: int) -> Coloring:
    """The ``index``-th counted colouring, ordered by lexicographically minimal labeling."""
    total = scheme_coloring_count(structures, action)
    if not 0 <= index < total:
        raise IndexError(f"coloring index {index} out of range 0..{total - 1}")
    labeling = lexmin_rainbow_representatives(action, limit=index + 1)[index]
    colors = np.full(model.n_edges, -1, dtype=int)
    for s, edges in enumerate(structures):
        colors[list(edges)] = labeling[s]
    return Coloring(tuple(colors.tolist()))
