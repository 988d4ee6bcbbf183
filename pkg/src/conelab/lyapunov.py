"""Lyapunov-like transformations and the Lyapunov rank of a proper polyhedral cone.

L is Lyapunov-like on K when ``x in K, s in K*, <x, s> = 0`` implies
``<L x, s> = 0``.  For polyhedral K it suffices to impose ``s^T L x = 0`` on
complementary pairs of *extreme* rays: writing x = sum a_i x_i and
s = sum b_j s_j with nonnegative coefficients, ``<x, s> = 0`` forces every
term a_i b_j <x_i, s_j> to vanish, so each pair with a_i b_j > 0 is itself
complementary.  Each such pair gives one linear equation on the entries of L.

Flattening is row-major: ``vec(L)[i*n + j] = L[i][j]``, and the constraint row
for the pair (x, s) is ``vec(s x^T)``, whose inner product with ``vec(L)`` is
``s^T L x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cone import Cone, IntVec, _int_rank
from .errors import NotProper
from .exact import Matrix, dot, nullspace_basis


@dataclass(frozen=True)
class CompPair:
    x: IntVec
    s: IntVec


def _require_proper(K: Cone) -> None:
    if not K.is_proper():
        raise NotProper("Lyapunov rank is defined here only for proper cones")


def complementary_pairs(K: Cone) -> list[CompPair]:
    _require_proper(K)
    xs = K.extreme_rays()
    ss = K.dual().extreme_rays()
    return [CompPair(x, s) for x in xs for s in ss if dot(x, s) == 0]


def constraint_row(pair: CompPair) -> tuple[int, ...]:
    return tuple(si * xj for si in pair.s for xj in pair.x)


def constraint_rows(K: Cone) -> list[tuple[int, ...]]:
    return [constraint_row(p) for p in complementary_pairs(K)]


def lyapunov_rank(K: Cone) -> int:
    """beta(K) = n^2 - rank of the complementarity constraint matrix."""
    n = K.dim
    return n * n - _int_rank(sorted(set(constraint_rows(K))), n * n)


@dataclass(frozen=True)
class LyapunovBasis:
    mats: tuple[Matrix, ...]

    def __len__(self) -> int:
        return len(self.mats)

    def __iter__(self):
        return iter(self.mats)


def ll_basis(K: Cone) -> LyapunovBasis:
    n = K.dim
    rows = sorted(set(constraint_rows(K)))
    C = Matrix(rows, cols=n * n)
    return LyapunovBasis(tuple(Matrix.from_flat(n, n, v) for v in nullspace_basis(C)))


def is_lyapunov_like(K: Cone, L: Matrix) -> bool:
    n = K.dim
    if L.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got {L.rows}x{L.cols}")
    for p in complementary_pairs(K):
        if dot(p.s, L.apply(p.x)) != 0:
            return False
    return True


def bilinear_form(L: Matrix, x: Sequence, s: Sequence):
    """``s^T L x``."""
    return dot(s, L.apply(x))
