"""Polyhedral cones with paired generator (V) and inequality (H) descriptions.

A cone is ``{x : <h, x> >= 0 for every H-row h}`` and equally
``cone(generators)``.  Whichever description is missing is produced on demand
by the double description method; both are then certified against each
other (every generator satisfies every H-row).  All vectors are stored as
primitive integer tuples.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ConeError, DocumentError, NotPointed
from .exact import (
    Matrix,
    _bareiss_rank,
    canonical_line,
    dot,
    primitive,
    rat_str,
    row_space_basis,
    to_rat,
)

IntVec = tuple[int, ...]


def _normalize_set(vectors: Iterable[Sequence], n: int) -> tuple[IntVec, ...]:
    out = set()
    for v in vectors:
        if len(v) != n:
            raise ConeError(f"vector {tuple(v)!r} does not have dimension {n}")
        p = primitive([to_rat(x) for x in v])
        if any(p):
            out.add(p)
    return tuple(sorted(out))


def _int_rank(rows: Sequence[IntVec], n: int) -> int:
    return _bareiss_rank([list(r) for r in rows], n)


def _lineality_basis(vectors: Sequence[Sequence], n: int) -> tuple[IntVec, ...]:
    # rref rows are canonical for the subspace, so the basis does not depend
    # on how the lineality vectors were produced
    return tuple(canonical_line(r) for r in row_space_basis(vectors))


@dataclass(frozen=True)
class DDResult:
    """Minimal generators of ``{x : H x >= 0}``: pointed rays plus a lineality basis."""

    dim: int
    rays: tuple[IntVec, ...]
    lineality: tuple[IntVec, ...]

    @property
    def generators(self) -> tuple[IntVec, ...]:
        neg = tuple(tuple(-x for x in v) for v in self.lineality)
        return tuple(sorted(set(self.rays) | set(self.lineality) | set(neg)))


def double_description(H: Sequence[Sequence], dim: Optional[int] = None) -> DDResult:
    """Generators of the cone ``{x : <h, x> >= 0 for all h in H}``.

    Inequalities are inserted in the given order, starting from the whole
    space (a basis treated as lineality).  A lineality direction not
    orthogonal to the new row is split off as a ray; otherwise the usual
    positive/negative ray combination step runs, with two rays considered
    adjacent iff the processed rows tight at both have rank ``n - d - 2``
    (``d`` = current lineality dimension).

    For pointed results the rays returned are exactly the extreme rays.
    """
    if dim is None:
        if not H:
            raise ConeError("dimension required when H is empty")
        dim = len(H[0])
    n = dim
    lin: list[list[int]] = [[int(i == j) for j in range(n)] for i in range(n)]
    rays: list[IntVec] = []
    masks: list[int] = []
    processed: list[IntVec] = []

    for raw in H:
        if len(raw) != n:
            raise ConeError(f"inequality {tuple(raw)!r} does not have dimension {n}")
        h = primitive([to_rat(x) for x in raw])
        if not any(h):
            continue
        k = len(processed)
        bit = 1 << k

        split = next((i for i, l in enumerate(lin) if dot(h, l)), None)
        if split is not None:
            l0 = lin.pop(split)
            h0 = dot(h, l0)
            if h0 < 0:
                l0 = [-x for x in l0]
                h0 = -h0
            lin = [list(primitive([h0 * a - dot(h, l) * b for a, b in zip(l, l0)])) for l in lin]
            # previous rows annihilate l0, so old tight sets carry over unchanged
            rays = [primitive([h0 * a - dot(h, r) * b for a, b in zip(r, l0)]) for r in rays]
            masks = [m | bit for m in masks]
            rays.append(primitive(l0))
            masks.append(bit - 1)
            processed.append(h)
            continue

        vals = [dot(h, r) for r in rays]
        new_rays: list[IntVec] = []
        new_masks: list[int] = []
        pos, neg = [], []
        for r, m, v in zip(rays, masks, vals):
            if v > 0:
                pos.append((r, m, v))
                new_rays.append(r)
                new_masks.append(m)
            elif v == 0:
                new_rays.append(r)
                new_masks.append(m | bit)
            else:
                neg.append((r, m, v))

        target = n - len(lin) - 2
        rank_cache: dict[int, int] = {}
        for p, mp, vp in pos:
            for q, mq, vq in neg:
                common = mp & mq
                if target > 0 and common.bit_count() < target:
                    continue
                rk = rank_cache.get(common)
                if rk is None:
                    rows = [processed[i] for i in range(k) if common >> i & 1]
                    rk = _int_rank(rows, n)
                    rank_cache[common] = rk
                if rk != target:
                    continue
                new_rays.append(primitive([vp * a - vq * b for a, b in zip(q, p)]))
                new_masks.append(common | bit)

        seen: dict[IntVec, int] = {}
        for r, m in zip(new_rays, new_masks):
            seen.setdefault(r, m)
        rays = list(seen)
        masks = list(seen.values())
        processed.append(h)

    return DDResult(dim=n, rays=tuple(sorted(rays)), lineality=_lineality_basis(lin, n) if lin else ())


class Cone:
    """Closed convex polyhedral cone in R^n.

    Build with :meth:`from_generators` or :meth:`from_inequalities`.  The
    other description, extreme rays and predicates are computed lazily and
    cached; each cache is filled at most once under a per-cone lock.
    """

    def __init__(
        self,
        dim: int,
        generators: Optional[Iterable[Sequence]] = None,
        inequalities: Optional[Iterable[Sequence]] = None,
    ):
        if not isinstance(dim, int) or dim < 1:
            raise ConeError(f"ambient dimension must be a positive integer, got {dim!r}")
        if generators is None and inequalities is None:
            raise ConeError("a cone needs generators or inequalities")
        self.dim = dim
        self._gens = None if generators is None else _normalize_set(generators, dim)
        self._ineqs = None if inequalities is None else _normalize_set(inequalities, dim)
        self._given = (generators is not None, inequalities is not None)
        self._lock = threading.RLock()
        self._rays: Optional[tuple[IntVec, ...]] = None
        self._dual: Optional[Cone] = None
        self._flags: dict[str, bool] = {}

    @classmethod
    def from_generators(cls, vectors: Iterable[Sequence], dim: Optional[int] = None) -> "Cone":
        vectors = list(vectors)
        if dim is None:
            if not vectors:
                raise ConeError("dimension required for an empty generator list")
            dim = len(vectors[0])
        return cls(dim, generators=vectors)

    @classmethod
    def from_inequalities(cls, rows: Iterable[Sequence], dim: Optional[int] = None) -> "Cone":
        rows = list(rows)
        if dim is None:
            if not rows:
                raise ConeError("dimension required for an empty inequality list")
            dim = len(rows[0])
        return cls(dim, inequalities=rows)

    def _certify(self) -> None:
        for g in self._gens:
            for h in self._ineqs:
                if dot(g, h) < 0:
                    raise AssertionError(f"representations disagree: <{h}, {g}> < 0")

    @property
    def generators(self) -> tuple[IntVec, ...]:
        if self._gens is None:
            with self._lock:
                if self._gens is None:
                    gens = double_description(self._ineqs, self.dim).generators
                    self._gens = gens
                    self._certify()
        return self._gens

    @property
    def inequalities(self) -> tuple[IntVec, ...]:
        if self._ineqs is None:
            with self._lock:
                if self._ineqs is None:
                    # K = K**: H-rows of K are generators of K*
                    ineqs = double_description(self._gens, self.dim).generators
                    self._ineqs = ineqs
                    self._certify()
        return self._ineqs

    def _flag(self, name: str, compute) -> bool:
        val = self._flags.get(name)
        if val is None:
            with self._lock:
                val = self._flags.get(name)
                if val is None:
                    val = compute()
                    self._flags[name] = val
        return val

    def is_pointed(self) -> bool:
        return self._flag("pointed", lambda: _int_rank(self.inequalities, self.dim) == self.dim)

    def is_solid(self) -> bool:
        return self._flag("solid", lambda: _int_rank(self.generators, self.dim) == self.dim)

    def is_proper(self) -> bool:
        return self.is_pointed() and self.is_solid()

    def is_zero(self) -> bool:
        return not self.generators

    def dimension(self) -> int:
        return _int_rank(self.generators, self.dim)

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.dim:
            raise ConeError(f"point has dimension {len(x)}, cone lives in R^{self.dim}")
        x = [to_rat(v) for v in x]
        return all(dot(h, x) >= 0 for h in self.inequalities)

    def extreme_rays(self) -> tuple[IntVec, ...]:
        """Canonical (sorted, primitive) extreme rays; requires a pointed cone."""
        if self._rays is None:
            if not self.is_pointed():
                raise NotPointed("cone contains a line; extreme rays are undefined")
            with self._lock:
                if self._rays is None:
                    H = self.inequalities
                    n = self.dim
                    keep = []
                    for g in self.generators:
                        tight = [h for h in H if dot(h, g) == 0]
                        if _int_rank(tight, n) == n - 1:
                            keep.append(g)
                    self._rays = tuple(sorted(keep))
        return self._rays

    def dual(self) -> "Cone":
        if self._dual is None:
            with self._lock:
                if self._dual is None:
                    d = Cone(self.dim, inequalities=self.generators)
                    if self._ineqs is not None:
                        d._gens = self._ineqs
                    d._dual = self
                    self._dual = d
        return self._dual

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_set(self, other: "Cone") -> bool:
        return self.dim == other.dim and self.contains_cone(other) and other.contains_cone(self)

    def __repr__(self) -> str:
        parts = [f"dim={self.dim}"]
        if self._gens is not None:
            parts.append(f"{len(self._gens)} generators")
        if self._ineqs is not None:
            parts.append(f"{len(self._ineqs)} inequalities")
        return f"Cone({', '.join(parts)})"


def from_generators(vectors: Iterable[Sequence], dim: Optional[int] = None) -> Cone:
    return Cone.from_generators(vectors, dim)


def from_inequalities(rows: Iterable[Sequence], dim: Optional[int] = None) -> Cone:
    return Cone.from_inequalities(rows, dim)


def dual(K: Cone) -> Cone:
    return K.dual()


def extreme_rays(K: Cone) -> tuple[IntVec, ...]:
    return K.extreme_rays()


def contains(K: Cone, x: Sequence) -> bool:
    return K.contains(x)


def is_pointed(K: Cone) -> bool:
    return K.is_pointed()


def is_solid(K: Cone) -> bool:
    return K.is_solid()


def is_proper(K: Cone) -> bool:
    return K.is_proper()


def dimension(K: Cone) -> int:
    return K.dimension()


def linear_image(K: Cone, B: Matrix) -> Cone:
    """``B(K)`` for a square matrix B, built from the images of K's generators."""
    if B.rows != K.dim or B.cols != K.dim:
        raise ConeError(f"expected a {K.dim}x{K.dim} matrix, got {B.rows}x{B.cols}")
    return Cone(K.dim, generators=[B.apply(g) for g in K.generators])


# JSON cone documents


def _vec_to_json(v: Sequence) -> list[str]:
    return [rat_str(x) for x in v]


def _vec_from_json(v, n: int) -> tuple:
    if not isinstance(v, list) or len(v) != n:
        raise DocumentError(f"expected a list of {n} rationals, got {v!r}")
    out = []
    for x in v:
        if isinstance(x, float) or isinstance(x, bool):
            raise DocumentError(f"rationals must be strings or integers, got {x!r}")
        try:
            out.append(to_rat(x))
        except (TypeError, ValueError) as exc:
            raise DocumentError(str(exc)) from exc
    return tuple(out)


def to_document(K: Cone, complete: bool = False, metadata: Optional[dict] = None) -> dict:
    """JSON-ready dict.  Only the given descriptions are written unless ``complete``."""
    doc: dict = {"dim": K.dim}
    if complete or K._given[0]:
        doc["generators"] = [_vec_to_json(g) for g in K.generators]
    if complete or K._given[1]:
        doc["inequalities"] = [_vec_to_json(h) for h in K.inequalities]
    if metadata:
        doc["metadata"] = dict(metadata)
    return doc


def from_document(doc) -> Cone:
    if not isinstance(doc, dict):
        raise DocumentError("cone document must be a JSON object")
    n = doc.get("dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError(f"'dim' must be a positive integer, got {n!r}")
    gens = doc.get("generators")
    ineqs = doc.get("inequalities")
    if gens is None and ineqs is None:
        raise DocumentError("document needs 'generators' and/or 'inequalities'")
    for key, val in (("generators", gens), ("inequalities", ineqs)):
        if val is not None and not isinstance(val, list):
            raise DocumentError(f"'{key}' must be a list of vectors")
    gens = None if gens is None else [_vec_from_json(v, n) for v in gens]
    ineqs = None if ineqs is None else [_vec_from_json(v, n) for v in ineqs]
    K = Cone(n, generators=gens, inequalities=ineqs)
    if gens is not None and ineqs is not None:
        # both descriptions supplied: they must be the same set
        if not Cone(n, generators=gens).same_set(Cone(n, inequalities=ineqs)):
            raise DocumentError("generators and inequalities describe different cones")
    return K
