import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polypoly.groups import (
    GroupAction,
    NotASubgroup,
    TooLarge,
    act_on_labeling,
    all_labelings,
    burnside_kcolor_count,
    burnside_rainbow_count,
    conjugacy_classes,
    coset_action,
    generate_subgroup,
    is_subgroup,
    lexmin_rainbow_representatives,
    orbit_enum_count,
    rainbow_labelings,
    stabilizer_of_point,
)
from polypoly.geometry import rotation_axes
from polypoly.structures import decomposition_action, matching_decompositions, solid_group
from polypoly.geometry import build_solid


def cyclic(groups, kind, fold):
    g = groups[kind]
    return generate_subgroup(g, [rotation_axes(g, fold)[0].generator_index])


def dihedral(g, fold):
    gen = rotation_axes(g, fold)[0].generator_index
    for h in range(g.order):
        sub = generate_subgroup(g, [gen, h])
        if len(sub) == 2 * fold:
            return sub
    raise AssertionError


def test_coset_action_on_six_points(groups):
    g = groups["dodecahedron"]
    cs = coset_action(g, dihedral(g, 5))
    assert cs.n == 6 and cs.action.is_transitive()
    assert cs.n * len(cs.stabilizer) == g.order
    assert list(cs.representatives) == sorted(cs.representatives)


def test_coset_action_on_twelve_points(groups):
    cs = coset_action(groups["dodecahedron"], cyclic(groups, "dodecahedron", 5))
    assert cs.n == 12
    assert burnside_rainbow_count(cs.action) == math.factorial(12) // 60


def test_full_stabilizer_gives_one_point(groups):
    g = groups["cube"]
    cs = coset_action(g, range(g.order))
    assert cs.n == 1 and (cs.action.perms == 0).all()
    assert stabilizer_of_point(cs.action, 0) == tuple(range(g.order))


def test_not_a_subgroup(groups):
    g = groups["tetrahedron"]
    gen = rotation_axes(g, 3)[0].generator_index
    with pytest.raises(NotASubgroup):
        coset_action(g, [g.identity, gen])


def test_action_must_be_homomorphism(groups):
    g = groups["tetrahedron"]
    perms = np.tile(np.arange(3), (g.order, 1))
    perms[1] = [1, 0, 2]
    with pytest.raises(ValueError):
        GroupAction(perms, g.mul)


def test_fit_band_counts(band_action):
    assert burnside_rainbow_count(band_action) == 12
    assert orbit_enum_count(band_action, rainbow_labelings(6)) == 12
    assert burnside_kcolor_count(band_action, 1) == 1
    # frozen from explicit enumeration of all 64 labelings
    assert orbit_enum_count(band_action, all_labelings(6, 2)) == 8
    assert burnside_kcolor_count(band_action, 2) == 8
    assert len(stabilizer_of_point(band_action, 3)) == 10


@pytest.mark.parametrize("kind,fold,expected,stab", [("cube", 3, 1, 6), ("tetrahedron", 2, 2, 4)])
def test_base_solid_matching_actions(kind, fold, expected, stab):
    dec = matching_decompositions(build_solid(kind), fold)[0]
    action = decomposition_action(dec)
    n = action.n_points
    assert burnside_rainbow_count(action) == expected
    assert orbit_enum_count(action, rainbow_labelings(n)) == expected
    assert len(stabilizer_of_point(action, 0)) == stab


def test_tetrahedron_kernel_is_the_two_folds():
    action = decomposition_action(matching_decompositions(build_solid("tetrahedron"), 2)[0])
    g = solid_group("tetrahedron")
    kernel = set(action.kernel().tolist())
    two_folds = {a.generator_index for a in rotation_axes(g, 2)}
    assert kernel == two_folds | {g.identity}


def test_guards():
    with pytest.raises(TooLarge):
        list(rainbow_labelings(11))
    with pytest.raises(TooLarge):
        all_labelings(30, 2)
    action = GroupAction(np.array([[0]]))
    with pytest.raises(TooLarge):
        orbit_enum_count(action, ((i,) for i in range(10**7 + 1)))


def test_orbit_enum_rejects_unclosed_sets():
    action = GroupAction(np.array([[0, 1], [1, 0]]))
    with pytest.raises(ValueError):
        orbit_enum_count(action, [(0, 1)])


def test_act_on_labeling_is_an_action(band_action):
    g = solid_group("dodecahedron")
    lab = (0, 1, 2, 3, 4, 5)
    for a, b in [(3, 7), (11, 40), (59, 2)]:
        left = act_on_labeling(band_action.perms[g.mul[a, b]], lab)
        right = act_on_labeling(band_action.perms[a], act_on_labeling(band_action.perms[b], lab))
        assert left == right


def test_conjugacy_classes_of_a5():
    sizes = sorted(len(c) for c in conjugacy_classes(solid_group("dodecahedron")))
    assert sizes == [1, 12, 12, 15, 20]


def test_lexmin_representatives(band_action):
    reps = lexmin_rainbow_representatives(band_action)
    assert len(reps) == 12 and reps == sorted(reps)
    assert reps[0] == (0, 1, 2, 3, 4, 5)
    # distinct orbits
    images = [{act_on_labeling(p, r) for p in band_action.perms} for r in reps]
    assert all(a.isdisjoint(b) for a, b in itertools.combinations(images, 2))


# random small actions: coset actions of random subgroups of the three groups
@st.composite
def small_actions(draw):
    kind = draw(st.sampled_from(["tetrahedron", "cube", "dodecahedron"]))
    g = solid_group(kind)
    gens = draw(st.lists(st.integers(0, g.order - 1), min_size=1, max_size=2))
    sub = generate_subgroup(g, gens)
    cs = coset_action(g, sub)
    return g, cs


@settings(max_examples=40, deadline=None)
@given(small_actions())
def test_orbit_stabilizer_and_subgroup(data):
    g, cs = data
    assert is_subgroup(g, cs.stabilizer)
    for p in range(cs.n):
        stab = stabilizer_of_point(cs.action, p)
        assert is_subgroup(g, stab)
        assert cs.n * len(stab) == g.order


@settings(max_examples=40, deadline=None)
@given(small_actions(), st.integers(1, 3))
def test_burnside_matches_enumeration(data, k):
    _, cs = data
    n = cs.n
    if n > 8 or k**n > 10**5:
        return
    action = cs.action
    assert burnside_kcolor_count(action, k) == orbit_enum_count(action, all_labelings(n, k))
    assert burnside_rainbow_count(action) == orbit_enum_count(action, rainbow_labelings(n))
    assert burnside_kcolor_count(action, n) >= burnside_rainbow_count(action)
