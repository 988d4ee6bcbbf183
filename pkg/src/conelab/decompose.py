"""Direct-sum structure of pointed cones.

A pointed polyhedral cone splits as K1 + K2 with span(K1) and span(K2)
meeting only in 0 exactly when its extreme rays split into two sets whose
ranks add up to the total rank.  So the finest decomposition is given by the
connected components of the vector matroid on the extreme rays.

Components are found from the fundamental-circuit graph of one basis: every
non-basis ray is linked to the basis rays appearing with nonzero coefficient
in its expansion.  A matroid's components are the connected components of
this graph for any basis.  :func:`bipartition_components` is an exponential
brute-force check of the same thing, usable up to a dozen or so rays.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .cone import Cone, IntVec, _int_rank
from .errors import NotPermutationInvariant, NotPointed, NotProper, ZeroCone
from .exact import Matrix, row_space_basis, rref
from .symmetry import Perm, is_permutation_invariant


@dataclass(frozen=True)
class Decomposition:
    components: tuple[Cone, ...]
    rays: tuple[tuple[IntVec, ...], ...]
    spans: tuple[tuple[tuple[Fraction, ...], ...], ...]
    total_rank: int
    component_ranks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.components)

    @property
    def certified(self) -> bool:
        return self.total_rank == sum(self.component_ranks)


def _check_pointed_nonzero(K: Cone) -> None:
    if not K.is_pointed():
        raise NotPointed("direct-sum decomposition needs a pointed cone")
    if K.is_zero():
        raise ZeroCone("the zero cone has no decomposition")


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def matroid_components(vectors: Sequence[Sequence]) -> list[list[int]]:
    """Connected components (as index lists) of the vector matroid on ``vectors``.

    The rref of the matrix with the vectors as columns gives both a greedy
    basis (the pivot columns) and, in each non-pivot column, the coefficients
    expressing that vector over the basis.
    """
    m = len(vectors)
    if m == 0:
        return []
    R, pivots = rref(Matrix.from_columns(vectors))
    ds = _DisjointSet(m)
    pivset = set(pivots)
    for j in range(m):
        if j in pivset:
            continue
        for i, pc in enumerate(pivots):
            if R[i, j]:
                ds.union(j, pc)
    groups: dict[int, list[int]] = {}
    for j in range(m):
        groups.setdefault(ds.find(j), []).append(j)
    return sorted(groups.values())


def bipartition_components(vectors: Sequence[Sequence]) -> list[list[int]]:
    """Brute-force matroid components from all rank-additive bipartitions.

    A subset S separates when rank(S) + rank(rest) = rank(all).  Separators
    are closed under intersection, so the component of element i is the
    intersection of every separator containing i.
    """
    m = len(vectors)
    if m == 0:
        return []
    n = len(vectors[0])
    cache: dict[int, int] = {}

    def rk(mask: int) -> int:
        r = cache.get(mask)
        if r is None:
            r = _int_rank([vectors[i] for i in range(m) if mask >> i & 1], n)
            cache[mask] = r
        return r

    full = (1 << m) - 1
    total = rk(full)
    comp = [full] * m
    for mask in range(1, full):
        if rk(mask) + rk(full ^ mask) != total:
            continue
        for i in range(m):
            if mask >> i & 1:
                comp[i] &= mask
    groups = {c for c in comp}
    return sorted([i for i in range(m) if c >> i & 1] for c in groups)


def _build(K: Cone, rays: Sequence[IntVec], groups: list[list[int]]) -> Decomposition:
    n = K.dim
    parts = sorted(tuple(sorted(rays[i] for i in g)) for g in groups)
    comps = tuple(Cone(n, generators=p) for p in parts)
    spans = tuple(tuple(row_space_basis(p)) for p in parts)
    return Decomposition(
        components=comps,
        rays=tuple(parts),
        spans=spans,
        total_rank=_int_rank(rays, n),
        component_ranks=tuple(len(s) for s in spans),
    )


def decompose(K: Cone) -> Decomposition:
    """Finest direct-sum decomposition; components ordered by their least ray."""
    _check_pointed_nonzero(K)
    rays = K.extreme_rays()
    return _build(K, rays, matroid_components(rays))


def decompose_bruteforce(K: Cone) -> Decomposition:
    _check_pointed_nonzero(K)
    rays = K.extreme_rays()
    return _build(K, rays, bipartition_components(rays))


def is_irreducible(K: Cone) -> bool:
    return len(decompose(K)) == 1


@dataclass(frozen=True)
class OrthantForm:
    """K = A(R^n_+) with A = (a-b)I + bE; ``assignment[i]`` indexes the ray whose a-entry sits at coordinate i."""

    a: Fraction
    b: Fraction
    assignment: Perm

    def matrix(self, n: Optional[int] = None) -> Matrix:
        n = n or self.assignment.n
        return Matrix([[self.a if i == j else self.b for j in range(n)] for i in range(n)])


def _ray_pattern(r: IntVec) -> Optional[tuple[int, int, int]]:
    """(a, b, slot) when r has one entry a at ``slot`` and n-1 entries b != a."""
    n = len(r)
    if n == 1:
        return r[0], 0, 0
    counts: dict[int, int] = {}
    for x in r:
        counts[x] = counts.get(x, 0) + 1
    if len(counts) != 2:
        return None
    (u, cu), (v, cv) = counts.items()
    if n == 2:
        # both values occur once; convention: the a-slot carries the larger value
        a, b = max(u, v), min(u, v)
    elif cu == 1 and cv == n - 1:
        a, b = u, v
    elif cv == 1 and cu == n - 1:
        a, b = v, u
    else:
        return None
    return a, b, r.index(a)


def recognize_orthant_form(K: Cone) -> Optional[OrthantForm]:
    """Detect K = ((a-b)I + bE)(R^n_+) from K's primitive extreme rays.

    Rays carry no canonical scale, so (a, b) is reported for the primitive
    representatives, with a the entry that occurs once.  Returns None when
    the ray set does not have this shape.
    """
    if not K.is_proper():
        raise NotProper("orthant-form recognition needs a proper cone")
    if not is_permutation_invariant(K):
        raise NotPermutationInvariant("orthant-form recognition needs a permutation invariant cone")
    n = K.dim
    rays = K.extreme_rays()
    if len(rays) != n:
        return None
    pats = [_ray_pattern(r) for r in rays]
    if any(p is None for p in pats):
        return None
    ab = {(p[0], p[1]) for p in pats}
    if len(ab) != 1:
        return None
    a, b = ab.pop()
    slots = [p[2] for p in pats]
    if sorted(slots) != list(range(n)):
        return None
    ray_at = [0] * n
    for k, s in enumerate(slots):
        ray_at[s] = k
    return OrthantForm(Fraction(a), Fraction(b), Perm(tuple(ray_at)))
