import itertools

import numpy as np
import pytest

from polypoly.coloring import Coloring, is_symmetric_coloring
from polypoly.geometry import PolyModel, build_solid, rotation_axes, snap
from polypoly.groups import stabilizer_of_point
from polypoly.structures import (
    AmbiguousAxis,
    NoDecomposition,
    TooLarge,
    axial_orbit_matchings,
    band_decomposition,
    band_of_edge,
    bands_as_coloring,
    decomposition_action,
    induced_action,
    is_closed_circuit,
    is_invariant,
    is_matching,
    matching_decompositions,
    matching_of_band,
    opposite_edge,
    segment_distance,
    solid_group,
)


@pytest.fixture(scope="module")
def bands(fit):
    return band_decomposition(fit)


def test_segment_distance_against_sampling():
    rng = np.random.default_rng(7)
    s = np.linspace(0, 1, 801)
    for _ in range(20):
        p0, p1, q0, q1 = rng.normal(size=(4, 3))
        P = p0 + np.outer(s, p1 - p0)
        Q = q0 + np.outer(s, q1 - q0)
        sampled = np.min(np.linalg.norm(P[:, None] - Q[None], axis=-1))
        exact = segment_distance(p0, p1, q0, q1)
        assert exact <= sampled + 1e-12
        assert sampled - exact < 5e-3


def test_band_of_every_edge(fit):
    comp = fit.component_of_edge()
    for e in range(fit.n_edges):
        band = band_of_edge(fit, e)
        assert len(band.edge_indices) == 5
        assert sorted(comp[list(band.edge_indices)]) == [0, 1, 2, 3, 4]
        assert band.edge_indices[0] == min(band.edge_indices)
        gen = fit.edge_action[band.axis.generator_index]
        assert all(gen[a] == b for a, b in zip(band.edge_indices, band.edge_indices[1:] + band.edge_indices[:1]))
        for other in band.edge_indices:
            assert band_of_edge(fit, other).edge_indices == band.edge_indices


def test_band_decomposition(fit, bands):
    assert len(bands) == 6
    assert sorted(e for b in bands for e in b.edge_indices) == list(range(30))
    assert len({tuple(b.axis.direction.round(9)) for b in bands}) == 6
    assert all(is_closed_circuit(b) for b in bands)
    coloring = Coloring(tuple(bands_as_coloring(fit, bands)))
    assert is_symmetric_coloring(fit, coloring)
    # each tetrahedron sees six different colours
    for members in fit.components:
        assert len({coloring.edge_colors[e] for e in members}) == 6


def test_band_stabilizers(fit, bands):
    action = induced_action(fit.edge_action, [b.edge_indices for b in bands], fit.group.mul)
    for p in range(6):
        assert len(stabilizer_of_point(action, p)) == 10


def test_ambiguous_axis_on_dodecahedron_edges(groups):
    # dodecahedron edges lie in two faces, so two 5-fold axes are perpendicular to them
    solid = build_solid("dodecahedron")
    g = groups["dodecahedron"]
    model = PolyModel("dodecahedron", g, solid.edges, (tuple(range(30)),), g.edge_perms, solid.vertices)
    with pytest.raises(AmbiguousAxis):
        band_of_edge(model, 0)


def test_maximal_selector_is_exposed(fit):
    band = band_of_edge(fit, 0, selector="max")
    assert len(band.edge_indices) == 5
    assert band.axis.generator_index != band_of_edge(fit, 0).axis.generator_index


def test_matching_of_band(bands, dodecahedron):
    ms = [matching_of_band(b, dodecahedron) for b in bands]
    assert sorted(e for m in ms for e in m.edge_indices) == list(range(30))
    for b, m in zip(bands, ms):
        assert np.allclose(m.axis.direction, b.axis.direction)
        assert is_matching(dodecahedron, m.edge_indices)
        cands = {c.edge_indices for c in axial_orbit_matchings(dodecahedron, m.axis)}
        assert m.edge_indices in cands
    for m1, m2 in itertools.permutations(ms, 2):
        assert any(opposite_edge(dodecahedron, e) in m2.edge_indices for e in m1.edge_indices)
    # the six M(B) form one of the decompositions found by search
    found = [frozenset(d.edge_sets()) for d in matching_decompositions(dodecahedron, 5)]
    assert frozenset(m.edge_indices for m in ms) in found


def test_matching_of_band_commutes_with_rotations(fit, bands, dodecahedron):
    g = solid_group("dodecahedron")
    ms = {b.edge_indices: matching_of_band(b, dodecahedron).edge_indices for b in bands}
    for x in range(0, 60, 7):
        for b in bands:
            moved_band = tuple(sorted(fit.edge_action[x][list(b.edge_indices)]))
            target = next(k for k in ms if tuple(sorted(k)) == moved_band)
            assert tuple(sorted(g.edge_perms[x][list(ms[b.edge_indices])])) == ms[target]


@pytest.mark.parametrize("kind,fold,count", [("dodecahedron", 5, 4), ("cube", 3, 2), ("tetrahedron", 2, 2)])
def test_axial_candidates(kind, fold, count):
    solid = build_solid(kind)
    g = solid_group(kind)
    for ax in rotation_axes(g, fold):
        cands = axial_orbit_matchings(solid, ax)
        assert len(cands) == count
        for m in cands:
            assert is_matching(solid, m.edge_indices)
            assert set(g.edge_perms[ax.generator_index][list(m.edge_indices)]) == set(m.edge_indices)


# solution counts frozen from the exhaustive search itself
@pytest.mark.parametrize("kind,fold,n_matchings,size,solutions,invariant", [
    ("dodecahedron", 5, 6, 5, 2, 2),
    ("cube", 3, 4, 3, 2, 2),
    ("tetrahedron", 2, 3, 2, 1, 1),
    ("dodecahedron", 3, 10, 3, 22, 2),
    ("cube", 4, 3, 4, 1, 1),
])
def test_decompositions(kind, fold, n_matchings, size, solutions, invariant):
    solid = build_solid(kind)
    decs = matching_decompositions(solid, fold)
    assert len(decs) == solutions
    assert sum(is_invariant(d) for d in decs) == invariant
    g = solid_group(kind)
    for d in decs:
        assert len(d.matchings) == n_matchings
        assert sorted(e for m in d.matchings for e in m.edge_indices) == list(range(len(solid.edges)))
        for m in d.matchings:
            assert len(m.edge_indices) == size
            assert is_matching(solid, m.edge_indices)
            gen = g.edge_perms[m.axis.generator_index]
            assert set(gen[list(m.edge_indices)]) == set(m.edge_indices)
    keys = [d.edge_sets() for d in decs]
    assert keys == sorted(keys)


@pytest.mark.parametrize("kind,fold", [("cube", 3), ("dodecahedron", 5)])
def test_two_solutions_are_mirror_images(kind, fold):
    solid = build_solid(kind)
    decs = matching_decompositions(solid, fold)
    mirror = snap(solid.vertices * np.array([-1.0, 1.0, 1.0]), solid.vertices)
    index = {frozenset(e): k for k, e in enumerate(solid.edges)}

    def reflect(d):
        return frozenset(
            frozenset(index[frozenset((mirror[a], mirror[b]))] for a, b in (solid.edges[e] for e in es))
            for es in d.edge_sets()
        )

    a, b = (frozenset(frozenset(es) for es in d.edge_sets()) for d in decs)
    assert reflect(decs[0]) == b and reflect(decs[1]) == a
    for d in decs:
        assert decomposition_action(d).is_transitive()


def test_no_decomposition():
    with pytest.raises(NoDecomposition):
        matching_decompositions(build_solid("cube"), 2)


def test_search_budget():
    with pytest.raises(TooLarge):
        matching_decompositions(build_solid("dodecahedron"), 2, budget=2000)
