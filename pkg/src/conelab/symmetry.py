"""The symmetric group acting on R^n by coordinate permutation."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cone import Cone, IntVec
from .errors import ConeError
from .exact import Matrix, primitive, to_rat


@dataclass(frozen=True)
class Perm:
    """A permutation of ``0..n-1``; ``images[i]`` is where index i goes.

    As a matrix it sends e_i to e_{images[i]}, so ``apply(p, x)[images[i]] == x[i]``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation of 0..{len(imgs) - 1}: {imgs!r}")
        object.__setattr__(self, "images", imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int = 0, j: int = 1) -> "Perm":
        imgs = list(range(n))
        imgs[i], imgs[j] = imgs[j], imgs[i]
        return cls(tuple(imgs))

    @classmethod
    def cycle(cls, n: int) -> "Perm":
        """The long cycle 0 -> 1 -> ... -> n-1 -> 0."""
        return cls(tuple((i + 1) % n for i in range(n)))

    def __call__(self, x: Sequence) -> tuple:
        return apply(self, x)

    def compose(self, other: "Perm") -> "Perm":
        """``self * other``: apply ``other`` first."""
        return Perm(tuple(self.images[other.images[i]] for i in range(self.n)))

    __mul__ = compose

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def matrix(self) -> Matrix:
        n = self.n
        return Matrix([[int(self.images[j] == i) for j in range(n)] for i in range(n)])


def apply(p: Perm, x: Sequence) -> tuple:
    if len(x) != p.n:
        raise ValueError(f"dimension mismatch: permutation of {p.n}, vector of {len(x)}")
    out = [None] * p.n
    for i, j in enumerate(p.images):
        out[j] = x[i]
    return tuple(out)


def permute_cone(p: Perm, K: Cone) -> Cone:
    return Cone(K.dim, generators=[apply(p, g) for g in K.generators])


def group_generators(n: int) -> list[Perm]:
    if n == 1:
        return []
    if n == 2:
        return [Perm.transposition(2)]
    return [Perm.transposition(n), Perm.cycle(n)]


def is_permutation_invariant(K: Cone) -> bool:
    """True iff sigma(K) = K for every permutation sigma.

    Only the transposition (0 1) and the long cycle are tested: they generate
    the group, and sigma(K) contained in K already forces equality because
    sigma has finite order.  Images of the generators (extreme rays when K is
    proper) are checked against K's inequalities.
    """
    gens = K.extreme_rays() if K.is_proper() else K.generators
    for p in group_generators(K.dim):
        if not all(K.contains(apply(p, g)) for g in gens):
            return False
    return True


def orbit(seed: Sequence) -> list[IntVec]:
    """Distinct primitive images of one nonzero seed, found by worklist closure."""
    start = primitive([to_rat(x) for x in seed])
    if not any(start):
        return []
    gens = group_generators(len(start))
    seen = {start}
    work = deque([start])
    while work:
        v = work.popleft()
        for p in gens:
            w = apply(p, v)
            if w not in seen:
                seen.add(w)
                work.append(w)
    return sorted(seen)


def orbit_cone(seeds: Iterable[Sequence]) -> Cone:
    seeds = list(seeds)
    if not seeds:
        raise ConeError("orbit_cone needs at least one seed")
    n = len(seeds[0])
    vectors: set[IntVec] = set()
    for s in seeds:
        if len(s) != n:
            raise ConeError("seeds must share one dimension")
        vectors.update(orbit(s))
    return Cone(n, generators=sorted(vectors))


def orbit_key(v: Sequence) -> tuple:
    """Orbit invariant of a primitive vector: its sorted entries."""
    return tuple(sorted(v))


class OnesAxis(enum.Enum):
    PlusOne = "PlusOne"
    MinusOne = "MinusOne"
    Both = "Both"
    Neither = "Neither"


def contains_ones_axis(K: Cone) -> OnesAxis:
    ones = (1,) * K.dim
    plus = K.contains(ones)
    minus = K.contains(tuple(-x for x in ones))
    if plus and minus:
        return OnesAxis.Both
    if plus:
        return OnesAxis.PlusOne
    if minus:
        return OnesAxis.MinusOne
    return OnesAxis.Neither
