import json
import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conelab.catalog import orthant, qpn, random_simplicial
from conelab.cone import (
    Cone,
    double_description,
    from_document,
    from_generators,
    from_inequalities,
    to_document,
)
from conelab.errors import ConeError, DocumentError, NotPointed
from conelab.exact import dot
from oracles import brute_extreme_rays, brute_facets

Q34_RAYS = [(-1, 1, 1, 1), (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0),
            (1, -1, 1, 1), (1, 0, 0, 0), (1, 1, -1, 1), (1, 1, 1, -1)]
Q23_RAYS = [(-1, 1, 1), (1, -1, 1), (1, 1, -1)]


def pair_sums(n):
    return [[int(i in S) for i in range(n)] for S in combinations(range(n), 2)]


def test_from_generators_normalizes():
    K = from_generators([(1, 0), (1, 1)])
    assert K.generators == ((1, 0), (1, 1))
    assert from_generators([(2, 0), (1, 0)]).generators == ((1, 0),)


def test_zero_cone():
    Z = Cone(3, generators=[])
    assert Z.contains((0, 0, 0))
    assert not Z.contains((1, 0, 0))
    assert Z.is_pointed() and not Z.is_solid() and Z.dimension() == 0
    assert Z.extreme_rays() == ()


def test_dual_examples():
    assert orthant(3).dual().extreme_rays() == orthant(3).extreme_rays()
    D = from_generators([(1, 0), (1, 1)]).dual()
    assert D.extreme_rays() == ((0, 1), (1, -1))
    assert D.extreme_rays() == tuple(brute_facets([(1, 0), (1, 1)], 2))
    Q = qpn(4, 3)
    assert Q.dual().dual().extreme_rays() == Q.extreme_rays()


def test_double_description_examples():
    dd = double_description([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert dd.rays == ((0, 0, 1), (0, 1, 0), (1, 0, 0)) and dd.lineality == ()
    dd = double_description(pair_sums(3))
    assert list(dd.rays) == Q23_RAYS == brute_extreme_rays(pair_sums(3), 3)
    dd = double_description([(1, 0), (-1, 0)])
    assert dd.rays == () and dd.lineality == ((0, 1),)
    assert set(dd.generators) == {(0, 1), (0, -1)}


def test_double_description_empty_is_full_space():
    dd = double_description([], dim=2)
    assert dd.rays == () and dd.lineality == ((1, 0), (0, 1))


def test_extreme_rays_examples():
    assert orthant(4).extreme_rays() == tuple(sorted(tuple(int(i == j) for j in range(4)) for i in range(4)))
    assert list(qpn(4, 3).extreme_rays()) == Q34_RAYS == brute_extreme_rays(pair_sums(4), 4)
    assert list(qpn(3, 2).extreme_rays()) == Q23_RAYS


def test_extreme_rays_from_redundant_generators():
    K = from_generators([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert K.extreme_rays() == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def test_extreme_rays_of_lower_dimensional_cone():
    K = from_generators([(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    assert K.is_pointed() and not K.is_solid()
    assert K.extreme_rays() == ((0, 1, 0), (1, 0, 0))


def test_extreme_rays_requires_pointed():
    with pytest.raises(NotPointed):
        qpn(3, 1).extreme_rays()


def test_contains_examples():
    assert orthant(3).contains((1, 2, 3))
    Q = qpn(3, 2)
    assert Q.contains((-1, 1, 1))
    assert not Q.contains((-2, 1, 0))
    assert Q.contains((0, 0, 0))
    assert Q.contains(("1/2", "-1/3", "1/3"))


def test_predicates():
    for n in range(1, 5):
        assert orthant(n).is_proper()
    H = qpn(3, 1)
    assert H.is_solid() and not H.is_pointed()
    assert H.contains((1, 1, 1)) and H.contains((-1, 1, 0)) and H.contains((1, -1, 0))
    ray = from_generators([(1, 0)])
    assert ray.is_pointed() and not ray.is_solid() and not ray.is_proper()


def test_dimension():
    assert orthant(4).dimension() == 4
    assert from_generators([(1, 1, 1)]).dimension() == 1
    assert from_generators([(1, 0, 0), (0, 1, 0)]).dimension() == 2


def test_full_space_and_line():
    full = from_inequalities([], dim=2)
    assert full.contains((-5, 7)) and full.is_solid() and not full.is_pointed()
    line = from_generators([(1, 1), (-1, -1)])
    assert not line.is_pointed() and line.dimension() == 1
    D = line.dual()
    assert not D.is_pointed() and D.dimension() == 1
    assert D.contains((1, -1)) and D.contains((-1, 1)) and not D.contains((1, 0))


@pytest.mark.parametrize("n,p", [(n, p) for n in range(2, 6) for p in range(2, n + 1)])
def test_vh_fixpoint(n, p):
    K = qpn(n, p)
    V = from_generators(K.extreme_rays())
    assert Cone(n, inequalities=V.inequalities).extreme_rays() == K.extreme_rays()


@pytest.mark.parametrize("n,p", [(n, p) for n in range(2, 6) for p in range(2, n + 1)])
def test_extreme_rays_match_brute_force(n, p):
    K = qpn(n, p)
    assert list(K.extreme_rays()) == brute_extreme_rays(list(K.inequalities), n)


def test_generators_satisfy_inequalities_exactly():
    for K in [qpn(5, 3), random_simplicial(4, 7), from_generators([(1, 2, 3), (3, 2, 1), (2, 2, 2)])]:
        for g in K.generators:
            for h in K.inequalities:
                assert dot(g, h) >= 0


@given(st.integers(2, 5), st.integers(0, 10**6), st.integers(0, 10**6))
def test_duality_reverses_order(n, s1, s2):
    K = random_simplicial(n, s1)
    M = from_generators(list(K.generators) + list(random_simplicial(n, s2).generators))
    assert M.contains_cone(K)
    assert K.dual().contains_cone(M.dual())


@given(st.integers(2, 5), st.integers(0, 10**6))
def test_proper_rays_pass_tight_rank_and_regenerate(n, seed):
    K = random_simplicial(n, seed)
    rays = K.extreme_rays()
    assert len(rays) == n
    R = from_generators(rays)
    assert sorted(R.inequalities) == sorted(K.inequalities)


def test_document_round_trip():
    K = qpn(4, 3)
    doc = to_document(K, complete=True)
    text = json.dumps(doc, sort_keys=True)
    again = json.dumps(to_document(from_document(json.loads(text)), complete=True), sort_keys=True)
    assert again == text
    g_only = to_document(from_generators([(1, 0), (1, 1)]))
    assert g_only == {"dim": 2, "generators": [["1", "0"], ["1", "1"]]}
    assert to_document(from_document(g_only)) == g_only


@pytest.mark.parametrize("doc", [
    {"dim": 0, "generators": []},
    {"dim": 2},
    {"dim": 2, "generators": [["1"]]},
    {"dim": 2, "generators": [[0.5, 1]]},
    {"dim": 2, "generators": [["1/0", "1"]]},
    {"dim": "2", "generators": []},
    {"dim": 2, "generators": [["1", "0"]], "inequalities": [["1", "0"]]},
    [],
])
def test_bad_documents(doc):
    with pytest.raises(DocumentError):
        from_document(doc)


def test_mixed_dimensions_rejected():
    with pytest.raises(ConeError):
        from_generators([(1, 0), (1, 0, 0)])


def test_concurrent_completion_is_single_flight():
    import threading

    K = qpn(5, 3)
    results = []

    def work():
        results.append(K.extreme_rays())

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len({id(r) for r in results}) == 1
