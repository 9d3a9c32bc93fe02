"""Permutation actions, coset actions and Burnside counting.

All counts are Python ints, so nothing overflows (12! is already past 2**32).
"""
from __future__ import annotations

import itertools
import math
import operator
from dataclasses import dataclass

import numpy as np

from .geometry import RotationGroup

ENUM_LIMIT = 10**7


class NotASubgroup(ValueError):
    pass


class TooLarge(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GroupAction:
    """One permutation of ``n`` points per group element.

    ``perms[g][i]`` is the image of point ``i`` under element ``g``. When a
    composition table is supplied the homomorphism property is checked.
    """

    perms: np.ndarray
    mul: np.ndarray | None = None

    def __post_init__(self):
        perms = np.asarray(self.perms, dtype=int)
        object.__setattr__(self, "perms", perms)
        n = perms.shape[1]
        if not (np.sort(perms, axis=1) == np.arange(n)).all():
            raise ValueError("every row of perms must be a permutation")
        if not (perms == np.arange(n)).all(axis=1).any():
            raise ValueError("action has no identity element")
        if self.mul is not None:
            # perm(g*h) == perm(g) o perm(h)
            for g in range(len(perms)):
                if not (perms[self.mul[g]] == perms[g][perms]).all():
                    raise ValueError("perms do not respect the composition table")

    @property
    def group_order(self) -> int:
        return len(self.perms)

    @property
    def n_points(self) -> int:
        return self.perms.shape[1]

    def is_transitive(self) -> bool:
        return len(set(self.perms[:, 0].tolist())) == self.n_points

    def kernel(self) -> np.ndarray:
        return np.flatnonzero((self.perms == np.arange(self.n_points)).all(axis=1))

    def image(self) -> np.ndarray:
        """Distinct permutations, i.e. the group as it is seen by the points."""
        return np.unique(self.perms, axis=0)


@dataclass(frozen=True, eq=False)
class CosetScheme:
    group: RotationGroup
    stabilizer: tuple[int, ...]
    representatives: tuple[int, ...]
    action: GroupAction

    @property
    def n(self) -> int:
        return self.action.n_points


def is_subgroup(group: RotationGroup, elements) -> bool:
    s = set(int(x) for x in elements)
    if group.identity not in s:
        return False
    inv = group.inverse
    return all(int(group.mul[a, b]) in s for a in s for b in s) and all(int(inv[a]) in s for a in s)


def generate_subgroup(group: RotationGroup, generators) -> tuple[int, ...]:
    elems = {group.identity}
    frontier = list(elems)
    gens = [int(g) for g in generators]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = int(group.mul[g, x])
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(elems))


def coset_action(group: RotationGroup, stabilizer) -> CosetScheme:
    """Left-multiplication action on the cosets gH.

    Cosets are numbered by their smallest element index.
    """
    H = tuple(sorted(set(int(h) for h in stabilizer)))
    if not is_subgroup(group, H):
        raise NotASubgroup(f"{len(H)} elements do not form a subgroup")
    coset_of = np.full(group.order, -1, dtype=int)
    reps = []
    for g in range(group.order):
        if coset_of[g] < 0:
            coset_of[group.mul[g, list(H)]] = len(reps)
            reps.append(g)
    perms = coset_of[group.mul[:, reps]]
    return CosetScheme(group, H, tuple(reps), GroupAction(perms, group.mul))


def stabilizer_of_point(action: GroupAction, point: int) -> tuple[int, ...]:
    return tuple(np.flatnonzero(action.perms[:, point] == point).tolist())


def cycle_counts(action: GroupAction) -> list[int]:
    out = []
    for p in action.perms:
        seen = np.zeros(len(p), bool)
        c = 0
        for i in range(len(p)):
            if not seen[i]:
                c += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = p[j]
        out.append(c)
    return out


def rainbow_fixed_counts(action: GroupAction) -> list[int]:
    """Injective labelings fixed by each element: n! if it fixes every point, else 0."""
    n = action.n_points
    trivial = (action.perms == np.arange(n)).all(axis=1)
    return [math.factorial(n) if t else 0 for t in trivial]


def burnside_rainbow_count(action: GroupAction) -> int:
    total = sum(rainbow_fixed_counts(action))
    q, r = divmod(total, action.group_order)
    assert r == 0, "Burnside sum not divisible by the group order"
    return q


def burnside_kcolor_count(action: GroupAction, k: int) -> int:
    if k < 1:
        raise ValueError("need at least one colour")
    total = sum(k**c for c in cycle_counts(action))
    q, r = divmod(total, action.group_order)
    assert r == 0, "Burnside sum not divisible by the group order"
    return q


def act_on_labeling(perm: np.ndarray, labeling) -> tuple:
    """Labeling moved by ``perm``: the label on point i ends up on perm[i]."""
    out = [None] * len(labeling)
    for i, lab in enumerate(labeling):
        out[perm[i]] = lab
    return tuple(out)


def orbit_enum_count(action: GroupAction, labelings) -> int:
    """Count orbits of an explicit, action-closed set of labelings by BFS."""
    labelings = [tuple(x) for x in labelings]
    if len(labelings) > ENUM_LIMIT:
        raise TooLarge(f"{len(labelings)} labelings exceeds the {ENUM_LIMIT} guard")
    universe = set(labelings)
    # the image is a group, so one application of every element sweeps the whole orbit;
    # out[perm[i]] = x[i] is the same as out[j] = x[perm^-1[j]]
    if action.n_points < 2:
        return len(universe)
    movers = [operator.itemgetter(*np.argsort(p).tolist()) for p in action.image()]
    seen: set = set()
    orbits = 0
    for lab in labelings:
        if lab in seen:
            continue
        orbits += 1
        for mover in movers:
            y = mover(lab)
            if y not in universe:
                raise ValueError("labeling set is not closed under the action")
            seen.add(y)
    return orbits


def rainbow_labelings(n: int):
    if math.factorial(n) > ENUM_LIMIT:
        raise TooLarge(f"{n}! labelings exceeds the {ENUM_LIMIT} guard")
    return itertools.permutations(range(n))


def all_labelings(n: int, k: int):
    if k**n > ENUM_LIMIT:
        raise TooLarge(f"{k}**{n} labelings exceeds the {ENUM_LIMIT} guard")
    return itertools.product(range(k), repeat=n)


def conjugacy_classes(group: RotationGroup) -> list[tuple[int, ...]]:
    inv = group.inverse
    seen = np.zeros(group.order, bool)
    classes = []
    for g in range(group.order):
        if seen[g]:
            continue
        cls = sorted({int(group.mul[group.mul[x, g], inv[x]]) for x in range(group.order)})
        seen[cls] = True
        classes.append(tuple(cls))
    return classes


def are_conjugate_subgroups(group: RotationGroup, H, K) -> bool:
    H, K = set(H), set(K)
    if len(H) != len(K):
        return False
    inv = group.inverse
    return any(
        {int(group.mul[group.mul[x, h], inv[x]]) for h in H} == K for x in range(group.order)
    )


def lexmin_rainbow_representatives(action: GroupAction, limit: int | None = None) -> list[tuple[int, ...]]:
    """Lexicographically minimal injective labeling of each orbit, in lex order.

    A labeling L is a representative iff no moved copy of it is smaller. Stops
    after ``limit`` representatives when given.
    """
    n = action.n_points
    perms = [p for p in action.image() if not (p == np.arange(n)).all()]
    reps = []
    for lab in rainbow_labelings(n):
        if all(act_on_labeling(p, lab) >= lab for p in perms):
            reps.append(lab)
            if limit is not None and len(reps) >= limit:
                break
    return reps
