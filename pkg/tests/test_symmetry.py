import random
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conelab.catalog import ab_cone, orthant, qpn, random_seed_vector, random_simplicial
from conelab.cone import from_generators
from conelab.symmetry import (
    OnesAxis,
    Perm,
    apply,
    contains_ones_axis,
    is_permutation_invariant,
    orbit,
    orbit_cone,
    permute_cone,
)


def test_apply_examples():
    x = (3, -1, 7)
    assert apply(Perm.identity(3), x) == x
    assert apply(Perm.transposition(3), ("a", "b", "c")) == ("b", "a", "c")
    assert apply(Perm.cycle(3), (-1, 1, 1)) == (1, -1, 1)


def test_perm_algebra():
    c = Perm.cycle(4)
    t = Perm.transposition(4)
    assert (c * c.inverse()) == Perm.identity(4)
    x = (1, 2, 3, 4)
    assert apply(c * t, x) == apply(c, apply(t, x))
    assert c.matrix().apply(x) == apply(c, x)
    with pytest.raises(ValueError):
        Perm((0, 0, 1))


def test_invariance_examples():
    for n in range(1, 6):
        assert is_permutation_invariant(orthant(n))
    assert is_permutation_invariant(qpn(4, 3))
    assert not is_permutation_invariant(from_generators([(1, 0), (1, 1)]))


def test_orbit_cone_examples():
    assert orbit_cone([(1, 0, 0)]).extreme_rays() == orthant(3).extreme_rays()
    assert orbit_cone([(-1, 1, 1)]).extreme_rays() == qpn(3, 2).extreme_rays()
    K = orbit_cone([(1, 1)])
    assert K.generators == ((1, 1),)
    assert len(orbit((1, 2, 3, 4))) == 24
    assert len(orbit((1, 1, 2, 2))) == 6


def test_ones_axis_examples():
    assert contains_ones_axis(orthant(4)) is OnesAxis.PlusOne
    assert contains_ones_axis(ab_cone(4, -1, 0)) is OnesAxis.MinusOne
    assert contains_ones_axis(qpn(4, 3)) is OnesAxis.PlusOne
    assert contains_ones_axis(qpn(3, 1)) is OnesAxis.PlusOne
    assert contains_ones_axis(from_generators([(1, 1), (-1, -1)])) is OnesAxis.Both
    assert contains_ones_axis(from_generators([(1, 0)])) is OnesAxis.Neither


def _random_perm_verdict(K, rng, trials=24):
    n = K.dim
    for _ in range(trials):
        imgs = list(range(n))
        rng.shuffle(imgs)
        p = Perm(tuple(imgs))
        if not all(K.contains(apply(p, g)) for g in K.generators):
            return False
    return True


def test_generator_sufficiency_on_catalog():
    rng = random.Random(3)
    cones = [orthant(n) for n in range(2, 5)]
    cones += [qpn(n, p) for n in range(2, 6) for p in range(1, n + 1)]
    cones += [random_simplicial(n, s) for n in range(2, 5) for s in range(5)]
    cones += [ab_cone(4, 5, -1), from_generators([(1, 0, 0), (0, 1, 0)])]
    for K in cones:
        assert is_permutation_invariant(K) == _random_perm_verdict(K, rng)


@given(st.integers(2, 4), st.integers(0, 10**6), st.integers(1, 2))
def test_orbit_cones_are_invariant(n, seed, k):
    rng = random.Random(seed)
    K = orbit_cone([random_seed_vector(n, rng) for _ in range(k)])
    assert is_permutation_invariant(K)


@given(st.integers(2, 5), st.integers(0, 10**6))
def test_pointed_orbit_cones_hit_ones_axis(n, seed):
    K = orbit_cone([random_seed_vector(n, random.Random(seed))])
    if K.is_pointed() and not K.is_zero():
        assert contains_ones_axis(K) is not OnesAxis.Neither


@given(st.integers(2, 4), st.integers(0, 10**6), st.data())
def test_apply_preserves_extreme_rays(n, seed, data):
    K = random_simplicial(n, seed)
    p = Perm(tuple(data.draw(st.permutations(range(n)))))
    image = sorted(apply(p, r) for r in K.extreme_rays())
    assert tuple(image) == permute_cone(p, K).extreme_rays()
