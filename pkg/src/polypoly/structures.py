"""Bands of the FIT, axial matchings of the base solids, and decompositions."""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .geometry import (
    EPS,
    PolyModel,
    RotationAxis,
    RotationGroup,
    Solid,
    build_solid,
    rotation_axes,
    rotation_group,
)
from .groups import GroupAction, TooLarge

SEARCH_BUDGET = 200_000


class AmbiguousAxis(ValueError):
    pass


class NoDecomposition(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Band:
    axis: RotationAxis
    edge_indices: tuple[int, ...]
    segments: np.ndarray  # (5, 2, 3) endpoint coordinates in circuit order


@dataclass(frozen=True, eq=False)
class Matching:
    axis: RotationAxis
    edge_indices: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Decomposition:
    kind: str
    fold: int
    matchings: tuple[Matching, ...]

    def edge_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(m.edge_indices for m in self.matchings)


@functools.lru_cache(maxsize=None)
def solid_group(kind: str) -> RotationGroup:
    return rotation_group(build_solid(kind))


def segment_distance(p0, p1, q0, q1) -> float:
    """Closest approach of segments p0-p1 and q0-q1."""
    d1, d2, r = p1 - p0, q1 - q0, p0 - q0
    a, e, f = d1 @ d1, d2 @ d2, d2 @ r
    c, b = d1 @ r, d1 @ d2
    denom = a * e - b * b
    s = np.clip((b * f - c * e) / denom, 0.0, 1.0) if denom > EPS else 0.0
    t = (b * s + f) / e
    if t < 0.0:
        t, s = 0.0, np.clip(-c / a, 0.0, 1.0)
    elif t > 1.0:
        t, s = 1.0, np.clip((b - c) / a, 0.0, 1.0)
    return float(np.linalg.norm(p0 + s * d1 - (q0 + t * d2)))


def _orbit(perm: np.ndarray, start: int) -> list[int]:
    out = [start]
    while (nxt := int(perm[out[-1]])) != start:
        out.append(nxt)
    return out


def band_of_edge(model: PolyModel, edge: int, selector: str = "min") -> Band:
    """Orbit of ``edge`` under the 5-fold axis it is most (or least) perpendicular to.

    The circuit starts at the band's lowest edge index and follows the axis
    generator.
    """
    if model.vertices is None:
        raise ValueError("band_of_edge needs a geometric model")
    axes = rotation_axes(model.group, 5)
    a, b = model.edges[edge]
    u = model.vertices[b] - model.vertices[a]
    u = u / np.linalg.norm(u)
    dots = np.array([abs(u @ ax.direction) for ax in axes])
    order = np.argsort(dots) if selector == "min" else np.argsort(-dots)
    if abs(dots[order[0]] - dots[order[1]]) <= 10 * EPS:
        raise AmbiguousAxis(f"edge {edge}: two 5-fold axes tie at |u.a| = {dots[order[0]]:.12g}")
    axis = axes[int(order[0])]
    members = _orbit(model.edge_action[axis.generator_index], edge)
    k = members.index(min(members))
    members = members[k:] + members[:k]
    segs = np.array([model.vertices[list(model.edges[e])] for e in members])
    return Band(axis, tuple(members), segs)


def band_decomposition(model: PolyModel, selector: str = "min") -> list[Band]:
    bands: list[Band] = []
    covered: set[int] = set()
    for e in range(model.n_edges):
        if e in covered:
            continue
        band = band_of_edge(model, e, selector)
        if covered & set(band.edge_indices):
            raise AmbiguousAxis(f"band through edge {e} overlaps an earlier band")
        covered |= set(band.edge_indices)
        bands.append(band)
    return bands


def is_closed_circuit(band: Band) -> bool:
    """Consecutive struts are strictly the closest pairs, cyclically."""
    segs = band.segments
    n = len(segs)
    d = np.array([[segment_distance(*segs[i], *segs[j]) for j in range(n)] for i in range(n)])
    near = [d[i, (i + 1) % n] for i in range(n)]
    far = [d[i, j] for i in range(n) for j in range(n) if (j - i) % n not in (0, 1, n - 1)]
    return np.ptp(near) < 1e-7 and max(near) < min(far) - 1e-7


def bands_as_coloring(model: PolyModel, bands) -> np.ndarray:
    colors = np.full(model.n_edges, -1, dtype=int)
    for c, band in enumerate(bands):
        colors[list(band.edge_indices)] = c
    return colors


def _match_axis(group: RotationGroup, axis: RotationAxis) -> RotationAxis:
    for ax in rotation_axes(group, axis.fold):
        if np.allclose(ax.direction, axis.direction, atol=1e-7):
            return ax
    raise ValueError("axis does not belong to this group")


def is_matching(solid: Solid, edge_indices) -> bool:
    ends = [v for e in edge_indices for v in solid.edges[e]]
    return len(ends) == len(set(ends))


def matching_of_band(band: Band, dodecahedron: Solid) -> Matching:
    """M(B): the dodecahedron edges radially beneath the band's struts.

    Each FIT strut and each dodecahedron edge is centred on a 2-fold axis;
    pairing them by midpoint direction commutes with every rotation, so a band
    (an orbit about its 5-fold axis) lands on an orbit about the same axis.
    """
    dmid = dodecahedron.vertices[np.array(dodecahedron.edges)].mean(axis=1)
    dmid /= np.linalg.norm(dmid, axis=1, keepdims=True)
    edges = []
    for seg in band.segments:
        m = seg.mean(axis=0)
        scores = dmid @ (m / np.linalg.norm(m))
        edges.append(int(np.argmax(scores)))
    axis = _match_axis(solid_group(dodecahedron.kind), band.axis)
    return Matching(axis, tuple(sorted(edges)))


def axial_orbit_matchings(solid: Solid, axis: RotationAxis, group: RotationGroup | None = None) -> list[Matching]:
    """Orbits of the axis generator on edges that have full size and are matchings."""
    group = solid_group(solid.kind) if group is None else group
    perm = group.edge_perms[axis.generator_index]
    seen: set[int] = set()
    out = []
    for e in range(len(solid.edges)):
        if e in seen:
            continue
        orb = _orbit(perm, e)
        seen |= set(orb)
        if len(orb) == axis.fold and is_matching(solid, orb):
            out.append(Matching(axis, tuple(sorted(orb))))
    return out


def matching_decompositions(solid: Solid, fold: int, budget: int = SEARCH_BUDGET) -> list[Decomposition]:
    """Every partition of the edges into axial matchings, one per ``fold``-fold axis.

    Exact-cover backtracking: branch on the uncovered edge with the fewest
    usable candidates. Assignments that yield the same edge partition are
    reported once (the first in canonical order).
    """
    group = solid_group(solid.kind)
    axes = rotation_axes(group, fold)
    cands = [(i, m) for i, ax in enumerate(axes) for m in axial_orbit_matchings(solid, ax, group)]
    n_edges = len(solid.edges)
    covering: dict[int, list[int]] = {e: [] for e in range(n_edges)}
    for k, (_, m) in enumerate(cands):
        for e in m.edge_indices:
            covering[e].append(k)
    found: list[tuple[Matching, ...]] = []
    nodes = 0

    def search(uncovered: frozenset, free_axes: frozenset, chosen: list):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise TooLarge(f"decomposition search exceeded {budget} nodes")
        if not uncovered:
            if not free_axes:
                found.append(tuple(cands[k][1] for k in sorted(chosen, key=lambda k: cands[k][0])))
            return
        best = None
        for e in uncovered:
            opts = [
                k for k in covering[e]
                if cands[k][0] in free_axes and uncovered.issuperset(cands[k][1].edge_indices)
            ]
            if best is None or len(opts) < len(best):
                best = opts
                if not opts:
                    return
        for k in best:
            axis_i, m = cands[k]
            search(uncovered - set(m.edge_indices), free_axes - {axis_i}, chosen + [k])

    if fold * len(axes) == n_edges:
        search(frozenset(range(n_edges)), frozenset(range(len(axes))), [])
    if not found:
        raise NoDecomposition(f"{solid.kind} has no decomposition into {fold}-fold matchings")
    found.sort(key=lambda ms: tuple(m.edge_indices for m in ms))
    unique, seen = [], set()
    for ms in found:
        key = frozenset(m.edge_indices for m in ms)
        if key not in seen:
            seen.add(key)
            unique.append(Decomposition(solid.kind, fold, ms))
    return unique


def induced_action(edge_action: np.ndarray, structures, mul: np.ndarray | None = None) -> GroupAction:
    """Action on a family of edge sets, which must be permuted as blocks."""
    sets = [frozenset(int(e) for e in s) for s in structures]
    index = {s: k for k, s in enumerate(sets)}
    perms = np.empty((len(edge_action), len(sets)), dtype=int)
    for g, ep in enumerate(edge_action):
        for k, s in enumerate(sets):
            img = frozenset(int(ep[e]) for e in s)
            if img not in index:
                raise ValueError(f"element {g} does not permute the structures")
            perms[g, k] = index[img]
    return GroupAction(perms, mul)


def is_invariant(decomposition: Decomposition) -> bool:
    group = solid_group(decomposition.kind)
    try:
        induced_action(group.edge_perms, decomposition.edge_sets())
    except ValueError:
        return False
    return True


def decomposition_action(decomposition: Decomposition) -> GroupAction:
    group = solid_group(decomposition.kind)
    return induced_action(group.edge_perms, decomposition.edge_sets(), group.mul)


def opposite_edge(solid: Solid, edge: int) -> int:
    a, b = solid.edges[edge]
    mid = -(solid.vertices[a] + solid.vertices[b]) / 2
    mids = solid.vertices[np.array(solid.edges)].mean(axis=1)
    return int(np.argmin(np.linalg.norm(mids - mid, axis=1)))
