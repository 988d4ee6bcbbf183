"""Named cones and reproducible random test cones.

Random data comes from :class:`random.Random` (Mersenne Twister) seeded with
an integer, drawing only integers via ``randrange``; CPython produces the
same stream on every platform, so a seed reproduces the same cone.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .cone import Cone
from .errors import ConeError, InvalidAB
from .exact import Matrix, rank, to_rat
from .symmetry import orbit_cone


def orthant(n: int) -> Cone:
    if n < 1:
        raise ConeError("orthant needs n >= 1")
    basis = [[int(i == j) for j in range(n)] for i in range(n)]
    return Cone(n, generators=basis, inequalities=basis)


def qpn(n: int, p: int) -> Cone:
    """{u : sum of the n-p+1 smallest entries of u is >= 0}.

    The sum of the k smallest entries is the minimum of all k-subset sums,
    so the cone is cut out by one inequality per k-subset.
    """
    if not 1 <= p <= n:
        raise ConeError(f"qpn needs 1 <= p <= n, got n={n}, p={p}")
    k = n - p + 1
    rows = [[int(i in S) for i in range(n)] for S in combinations(range(n), k)]
    return Cone(n, inequalities=rows)


def ab_matrix(n: int, a, b) -> Matrix:
    """(a-b)I + bE: diagonal a, off-diagonal b."""
    a, b = to_rat(a), to_rat(b)
    return Matrix([[a if i == j else b for j in range(n)] for i in range(n)])


def check_ab(n: int, a, b) -> None:
    a, b = to_rat(a), to_rat(b)
    if a == b or a == (1 - n) * b:
        raise InvalidAB(f"(a, b) = ({a}, {b}) makes (a-b)I + bE singular for n = {n}")


def ab_cone(n: int, a, b) -> Cone:
    check_ab(n, a, b)
    A = ab_matrix(n, a, b)
    return Cone(n, generators=[A.col(j) for j in range(n)])


def direct_sum(K1: Cone, K2: Cone) -> Cone:
    n1, n2 = K1.dim, K2.dim
    gens = [tuple(g) + (0,) * n2 for g in K1.generators]
    gens += [(0,) * n1 + tuple(g) for g in K2.generators]
    return Cone(n1 + n2, generators=gens)


def random_rational(rng: random.Random, lo: int = -3, hi: int = 3, max_den: int = 1) -> Fraction:
    return Fraction(rng.randrange(lo, hi + 1), rng.randrange(1, max_den + 1))


def random_invertible(n: int, rng: random.Random, lo: int = -3, hi: int = 3, max_den: int = 1) -> Matrix:
    while True:
        B = Matrix([[random_rational(rng, lo, hi, max_den) for _ in range(n)] for _ in range(n)])
        if rank(B) == n:
            return B


def random_simplicial(n: int, seed: int) -> Cone:
    """B(R^n_+) for a random invertible integer B with entries in [-3, 3]."""
    B = random_invertible(n, random.Random(seed))
    return Cone(n, generators=[B.col(j) for j in range(n)])


def random_ab(n: int, rng: random.Random, lo: int = -4, hi: int = 4, max_den: int = 3) -> tuple[Fraction, Fraction]:
    while True:
        a = random_rational(rng, lo, hi, max_den)
        b = random_rational(rng, lo, hi, max_den)
        if a != b and a != (1 - n) * b:
            return a, b


def random_seed_vector(n: int, rng: random.Random, lo: int = -5, hi: int = 5, max_den: int = 4) -> tuple[Fraction, ...]:
    return tuple(random_rational(rng, lo, hi, max_den) for _ in range(n))


class Kind(enum.Enum):
    Orthant = "orthant"
    Qpn = "qpn"
    ABCone = "ab"
    Orbit = "orbit"
    DirectSum = "direct-sum"
    RandomSimplicial = "random-simplicial"


@dataclass
class CatalogSpec:
    kind: Kind
    n: Optional[int] = None
    p: Optional[int] = None
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None
    seeds: Sequence[Sequence] = field(default_factory=list)
    parts: Sequence[Cone] = field(default_factory=list)
    rng_seed: int = 0

    def validate(self) -> None:
        k = self.kind
        if k in (Kind.Orthant, Kind.Qpn, Kind.ABCone, Kind.RandomSimplicial):
            if self.n is None or self.n < 1:
                raise ConeError(f"{k.value} needs n >= 1")
        if k is Kind.Qpn and (self.p is None or not 1 <= self.p <= self.n):
            raise ConeError("qpn needs 1 <= p <= n")
        if k is Kind.ABCone:
            if self.a is None or self.b is None:
                raise ConeError("ab needs both a and b")
            check_ab(self.n, self.a, self.b)
        if k is Kind.Orbit and not self.seeds:
            raise ConeError("orbit needs at least one seed")
        if k is Kind.DirectSum and len(self.parts) != 2:
            raise ConeError("direct-sum needs exactly two cones")

    def build(self) -> Cone:
        self.validate()
        k = self.kind
        if k is Kind.Orthant:
            return orthant(self.n)
        if k is Kind.Qpn:
            return qpn(self.n, self.p)
        if k is Kind.ABCone:
            return ab_cone(self.n, self.a, self.b)
        if k is Kind.Orbit:
            return orbit_cone(self.seeds)
        if k is Kind.DirectSum:
            return direct_sum(*self.parts)
        return random_simplicial(self.n, self.rng_seed)

    def name(self) -> str:
        k = self.kind
        if k is Kind.Orthant:
            return f"orthant({self.n})"
        if k is Kind.Qpn:
            return f"qpn({self.n},{self.p})"
        if k is Kind.ABCone:
            return f"ab({self.n},{self.a},{self.b})"
        if k is Kind.RandomSimplicial:
            return f"random-simplicial({self.n},seed={self.rng_seed})"
        return k.value
