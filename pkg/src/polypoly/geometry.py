"""Base solids, their proper rotation groups, rotation axes and the FIT model.

Coordinates are fixed tables so that every downstream permutation is
reproducible. Floating point is only used to snap rotated vertices back onto
vertex indices; everything after that is exact permutation arithmetic.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.transform import Rotation

EPS = 1e-9
PHI = (1 + 5**0.5) / 2

SOLID_KINDS = ("tetrahedron", "cube", "dodecahedron")
GROUP_NAMES = {12: "tetrahedral", 24: "cuboctahedral", 60: "icosidodecahedral"}


class ClosureFailure(RuntimeError):
    """A rotated vertex could not be snapped to a unique vertex index."""


class NoSuchAxes(ValueError):
    """The group has no rotations of the requested fold."""


@dataclass(frozen=True)
class Solid:
    kind: str
    vertices: np.ndarray  # (n, 3)
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_vectors(self) -> np.ndarray:
        e = np.array(self.edges)
        return self.vertices[e[:, 1]] - self.vertices[e[:, 0]]


@dataclass(frozen=True, eq=False)
class RotationGroup:
    """Rotation matrices with a parallel permutation representation.

    Element ``g`` maps vertex ``j`` to ``vertex_perms[g][j]``; the product
    ``mul[g, h]`` is "apply h, then g".
    """

    matrices: np.ndarray  # (order, 3, 3)
    vertex_perms: np.ndarray  # (order, n_vertices)
    edge_perms: np.ndarray  # (order, n_edges)
    mul: np.ndarray  # (order, order)
    kind: str = ""

    @property
    def order(self) -> int:
        return len(self.matrices)

    @property
    def name(self) -> str:
        return GROUP_NAMES.get(self.order, f"order-{self.order}")

    @property
    def identity(self) -> int:
        n = self.vertex_perms.shape[1]
        return int(np.flatnonzero((self.vertex_perms == np.arange(n)).all(axis=1))[0])

    @property
    def inverse(self) -> np.ndarray:
        e = self.identity
        return np.argmax(self.mul == e, axis=1)

    def __len__(self):
        return self.order

    def subgroup(self, elements) -> "RotationGroup":
        """Restrict to a closed subset of element indices, reindexed in sorted order."""
        idx = np.array(sorted(set(int(i) for i in elements)))
        pos = {int(g): k for k, g in enumerate(idx)}
        sub = self.mul[np.ix_(idx, idx)]
        try:
            mul = np.vectorize(pos.__getitem__)(sub) if len(idx) else sub
        except KeyError:
            raise ValueError("element set is not closed under composition") from None
        return RotationGroup(
            self.matrices[idx], self.vertex_perms[idx], self.edge_perms[idx],
            np.asarray(mul, dtype=int), self.kind,
        )


@dataclass(frozen=True)
class RotationAxis:
    direction: np.ndarray
    fold: int
    generator_index: int


@dataclass(frozen=True, eq=False)
class PolyModel:
    """A compound of skeleta together with its symmetry group's edge action."""

    name: str
    group: RotationGroup
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]
    edge_action: np.ndarray  # (order, n_edges)
    vertices: np.ndarray | None = None
    meta: dict = field(default_factory=dict)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def component_of_edge(self) -> np.ndarray:
        out = np.empty(self.n_edges, dtype=int)
        for c, members in enumerate(self.components):
            out[list(members)] = c
        return out


def _canonical_sign(v: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(np.abs(v) > EPS)
    return -v if v[nz[0]] < 0 else v


def _cyclic(p):
    return [tuple(p[(i + k) % 3] for i in range(3)) for k in range(3)]


def _vertex_table(kind: str) -> np.ndarray:
    if kind == "tetrahedron":
        return np.array([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)], float)
    cube = list(itertools.product((1, -1), repeat=3))
    if kind == "cube":
        return np.array(cube, float)
    if kind == "dodecahedron":
        rest = []
        for a, b in itertools.product((1, -1), repeat=2):
            rest += _cyclic((0.0, a / PHI, b * PHI))
        return np.array(cube + rest, float)
    raise ValueError(f"unknown solid kind {kind!r}")


def build_solid(kind: str) -> Solid:
    """Canonical vertices; edges join nearest-neighbour pairs."""
    verts = _vertex_table(kind)
    dist = np.linalg.norm(verts[:, None] - verts[None], axis=-1)
    np.fill_diagonal(dist, np.inf)
    shortest = dist.min()
    edges = tuple(
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if abs(dist[i, j] - shortest) < EPS
    )
    return Solid(kind, verts, edges)


def snap(points: np.ndarray, vertices: np.ndarray, eps: float = EPS) -> np.ndarray:
    """Index of the unique vertex within ``eps`` of every point."""
    dist = np.linalg.norm(points[:, None] - vertices[None], axis=-1)
    hits = dist < eps
    counts = hits.sum(axis=1)
    if (counts != 1).any():
        bad = int(np.flatnonzero(counts != 1)[0])
        raise ClosureFailure(
            f"point {points[bad]} matches {int(counts[bad])} vertices within {eps}"
        )
    return hits.argmax(axis=1)


def edge_permutation(vperm: np.ndarray, edges) -> np.ndarray:
    lookup = {frozenset(e): k for k, e in enumerate(edges)}
    return np.array([lookup[frozenset((vperm[a], vperm[b]))] for a, b in edges])


def _rot(axis, fold: int) -> np.ndarray:
    axis = np.asarray(axis, float)
    return Rotation.from_rotvec(2 * np.pi / fold * axis / np.linalg.norm(axis)).as_matrix()


def _generators(kind: str) -> list[np.ndarray]:
    # one face rotation and one vertex rotation
    if kind == "tetrahedron":
        return [_rot((1, -1, -1), 3), _rot((1, 1, 1), 3)]
    if kind == "cube":
        return [_rot((0, 0, 1), 4), _rot((1, 1, 1), 3)]
    if kind == "dodecahedron":
        return [_rot((0, PHI, 1), 5), _rot((1, 1, 1), 3)]
    raise ValueError(f"unknown solid kind {kind!r}")


def close_group(vertices: np.ndarray, edges, generators, eps: float = EPS, kind: str = "") -> RotationGroup:
    """Close generator matrices under multiplication, keyed by vertex permutation."""
    n = len(vertices)
    ident = np.eye(3)
    gens = [(g, snap(vertices @ g.T, vertices, eps)) for g in generators]
    mats = [ident]
    perms = [np.arange(n)]
    seen = {tuple(range(n)): 0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for gm, gp in gens:
                p = gp[perms[i]]
                key = tuple(p)
                if key not in seen:
                    m = gm @ mats[i]
                    # re-snap the product matrix so it stays consistent with the permutation
                    if not (snap(vertices @ m.T, vertices, eps) == p).all():
                        raise ClosureFailure("matrix product disagrees with permutation product")
                    seen[key] = len(mats)
                    mats.append(m)
                    perms.append(p)
                    nxt.append(seen[key])
        frontier = nxt
    perms_arr = np.array(perms)
    order = len(perms)
    mul = np.empty((order, order), dtype=int)
    for g in range(order):
        for h in range(order):
            mul[g, h] = seen[tuple(perms_arr[g][perms_arr[h]])]
    eperms = np.array([edge_permutation(p, edges) for p in perms_arr])
    return RotationGroup(np.array(mats), perms_arr, eperms, mul, kind)


def rotation_group(solid: Solid) -> RotationGroup:
    return close_group(solid.vertices, solid.edges, _generators(solid.kind), kind=solid.kind)


def element_orders(group: RotationGroup) -> np.ndarray:
    n = group.vertex_perms.shape[1]
    ident = np.arange(n)
    out = np.empty(group.order, dtype=int)
    for g, p in enumerate(group.vertex_perms):
        k, q = 1, p
        while not (q == ident).all():
            q = p[q]
            k += 1
        out[g] = k
    return out


def element_order_histogram(group: RotationGroup) -> dict[int, int]:
    return dict(sorted(Counter(element_orders(group).tolist()).items()))


def rotation_axes(group: RotationGroup, fold: int) -> list[RotationAxis]:
    """One canonical-sign axis per antipodal pair, with a 2*pi/fold generator."""
    orders = element_orders(group)
    candidates = np.flatnonzero(orders == fold)
    if len(candidates) == 0:
        raise NoSuchAxes(f"group of order {group.order} has no elements of order {fold}")
    axes: list[RotationAxis] = []
    angle = 2 * np.pi / fold
    for g in candidates:
        rv = Rotation.from_matrix(group.matrices[g]).as_rotvec()
        theta = np.linalg.norm(rv)
        d = _canonical_sign(np.where(np.abs(rv) < EPS, 0.0, rv / theta))
        # keep only the +2*pi/fold rotation about the canonical direction
        if fold != 2 and not np.allclose(rv, angle * d, atol=1e-7):
            continue
        if any(np.allclose(a.direction, d, atol=1e-7) for a in axes):
            continue
        axes.append(RotationAxis(d, fold, int(g)))
    return axes


def _fit_components(dodeca: Solid, chirality: str) -> tuple[tuple[int, ...], ...]:
    verts = dodeca.vertices
    dist = np.linalg.norm(verts[:, None] - verts[None], axis=-1)
    adjacent = {frozenset(e) for e in dodeca.edges}
    target = np.sqrt(8.0)  # tetrahedron edge length for unit-cube-corner vertices
    far = np.abs(dist - target) < EPS
    quads = [
        q for q in itertools.combinations(range(len(verts)), 4)
        if all(far[a, b] and frozenset((a, b)) not in adjacent for a, b in itertools.combinations(q, 2))
    ]
    partitions = []

    def extend(chosen, used):
        if len(used) == len(verts):
            partitions.append(tuple(chosen))
            return
        first = min(set(range(len(verts))) - used)
        for q in quads:
            if first in q and used.isdisjoint(q):
                extend(chosen + [q], used | set(q))

    extend([], set())
    if len(partitions) != 2:
        raise ClosureFailure(f"expected 2 chiral tetrahedron partitions, found {len(partitions)}")
    seed = tuple(sorted(int(i) for i in snap(_vertex_table("tetrahedron"), verts)))
    right = [p for p in partitions if seed in p]
    left = [p for p in partitions if seed not in p]
    if chirality == "right":
        return right[0]
    if chirality == "left":
        return left[0]
    raise ValueError(f"chirality must be 'left' or 'right', not {chirality!r}")


def build_fit(chirality: str = "right") -> PolyModel:
    """Five intersecting tetrahedra on the vertices of the canonical dodecahedron.

    ``chirality="right"`` picks the mirror form containing the tetrahedron
    (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1).
    """
    dodeca = build_solid("dodecahedron")
    tetras = _fit_components(dodeca, chirality)
    edges = tuple((a, b) for t in tetras for a, b in itertools.combinations(t, 2))
    components = tuple(tuple(range(6 * c, 6 * c + 6)) for c in range(len(tetras)))
    group = rotation_group(dodeca)
    action = np.array([edge_permutation(p, edges) for p in group.vertex_perms])
    return PolyModel(
        "fit", group, edges, components, action, dodeca.vertices,
        meta={"chirality": chirality, "tetrahedra": tetras},
    )


def solid_model(kind: str) -> PolyModel:
    """A base solid viewed as a one-component polypolyhedron."""
    solid = build_solid(kind)
    group = rotation_group(solid)
    return PolyModel(
        kind, group, solid.edges, (tuple(range(len(solid.edges))),),
        group.edge_perms, solid.vertices,
    )


def edge_orbits(action: np.ndarray) -> list[list[int]]:
    n = action.shape[1]
    seen = np.zeros(n, bool)
    orbits = []
    for e in range(n):
        if not seen[e]:
            orb = sorted(set(action[:, e].tolist()))
            seen[orb] = True
            orbits.append(orb)
    return orbits
