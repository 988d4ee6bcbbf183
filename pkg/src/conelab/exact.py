"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (always in lowest terms, positive
denominator).  Vectors are plain tuples of Fractions or ints.  Matrices are
immutable :class:`Matrix` objects stored row-major.

Rank and determinant use fraction-free (Bareiss) elimination on integer rows;
``rref``, ``nullspace_basis`` and ``solve`` use Gauss-Jordan over Fractions.
No floating point is used anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

Rat = Fraction
RatVec = tuple


def to_rat(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they carry binary rounding that would silently
    leak into exact computations.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational string")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {x!r}") from exc
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rat_str(q) -> str:
    q = to_rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(xs: Iterable) -> tuple:
    return tuple(to_rat(x) for x in xs)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def is_zero(v: Sequence) -> bool:
    return not any(v)


def integer_row(v: Sequence) -> tuple[int, ...]:
    """Positive multiple of ``v`` with integer entries (denominators cleared)."""
    den = 1
    for x in v:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return tuple(int(x * den) for x in v)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Primitive integer vector on the same open ray as ``v``.

    Denominators are cleared and the gcd divided out; the sign is kept, so the
    result is a *positive* multiple of ``v``.  The zero vector maps to itself.
    """
    w = integer_row(v)
    g = 0
    for x in w:
        g = gcd(g, x)
    if g <= 1:
        return w
    return tuple(x // g for x in w)


def canonical_line(v: Sequence) -> tuple[int, ...]:
    """Primitive integer vector spanning the same line, first nonzero entry positive."""
    w = primitive(v)
    for x in w:
        if x:
            return w if x > 0 else tuple(-y for y in w)
    return w


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: Optional[int] = None):
        rows = tuple(tuple(to_rat(x) for x in r) for r in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged matrix rows")
            if cols is not None and cols != width:
                raise ValueError("column count does not match data")
        else:
            width = cols if cols is not None else 0
        object.__setattr__(self, "_data", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(m)], cols=n)

    @classmethod
    def ones(cls, m: int, n: int) -> "Matrix":
        return cls([[1] * n for _ in range(m)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None) -> "Matrix":
        if not columns:
            return cls.zeros(rows or 0, 0)
        return cls(zip(*columns))

    @classmethod
    def from_flat(cls, m: int, n: int, entries: Sequence) -> "Matrix":
        if len(entries) != m * n:
            raise ValueError(f"expected {m * n} entries, got {len(entries)}")
        return cls([entries[i * n:(i + 1) * n] for i in range(m)], cols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def to_rows(self) -> tuple[tuple, ...]:
        return self._data

    def flatten(self) -> tuple:
        return tuple(x for r in self._data for x in r)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._data), cols=self.rows) if self.rows else Matrix([], cols=0)

    T = property(transpose)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(([a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)), cols=self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(([a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)), cols=self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix(([-a for a in r] for r in self._data), cols=self.cols)

    def scale(self, c) -> "Matrix":
        c = to_rat(c)
        return Matrix(([c * a for a in r] for r in self._data), cols=self.cols)

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError(f"dimension mismatch: matrix has {self.cols} columns, vector {len(v)}")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self._data)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            cols = other.transpose().to_rows()
            return Matrix(([dot(r, c) for c in cols] for r in self._data), cols=other.cols)
        return self.apply(other)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(rat_str(x) for x in r) for r in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def _as_rows(M) -> tuple[list, int]:
    if isinstance(M, Matrix):
        return [list(r) for r in M.to_rows()], M.cols
    rows = [list(r) for r in M]
    return rows, (len(rows[0]) if rows else 0)


def _bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    # Integer-only Bareiss; rows are modified in place.  A column with no
    # pivot is skipped, which is the same as deleting it, so exact division
    # by the previous pivot stays valid.
    a = [r for r in rows if any(r)]
    m = len(a)
    r = 0
    prev = 1
    for c in range(ncols):
        if r == m:
            break
        piv = r
        while piv < m and not a[piv][c]:
            piv += 1
        if piv == m:
            continue
        a[r], a[piv] = a[piv], a[r]
        prow = a[r]
        p = prow[c]
        for i in range(r + 1, m):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - f * prow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def rank(M) -> int:
    """Exact rank of a Matrix or of a sequence of rational rows."""
    rows, ncols = _as_rows(M)
    return _bareiss_rank([list(integer_row(r)) for r in rows], ncols)


def det(M) -> Fraction:
    """Exact determinant via fraction-free elimination."""
    rows, n = _as_rows(M)
    if len(rows) != n:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for r in rows:
        ir = integer_row(r)
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        scale /= den
        a.append(list(ir))
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = k
        while piv < n and not a[piv][k]:
            piv += 1
        if piv == n:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (p * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = p
    return sign * a[n - 1][n - 1] * scale


def rref(M) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the (increasing) pivot columns."""
    rows, ncols = _as_rows(M)
    a = [[to_rat(x) for x in r] for r in rows]
    m = len(a)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = r
        while piv < m and not a[piv][c]:
            piv += 1
        if piv == m:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        if p != 1:
            a[r] = [x / p for x in a[r]]
        prow = a[r]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return Matrix(a, cols=ncols), pivots


def nullspace_basis(M) -> list[tuple]:
    """Basis of {v : M v = 0}; one vector per free column of the rref."""
    R, pivots = rref(M)
    n = R.cols
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i, free]
        basis.append(tuple(v))
    return basis


def row_space_basis(vectors: Sequence[Sequence]) -> list[tuple]:
    """Canonical basis of the span: nonzero rows of the rref."""
    if not vectors:
        return []
    R, pivots = rref(vectors)
    return [R.row(i) for i in range(len(pivots))]


def solve(M: Matrix, b: Sequence) -> Optional[tuple]:
    """One solution of ``M x = b`` (free variables set to 0), or None if inconsistent."""
    if len(b) != M.rows:
        raise ValueError(f"dimension mismatch: {M.rows} rows vs right-hand side of length {len(b)}")
    aug = [list(M.row(i)) + [to_rat(b[i])] for i in range(M.rows)]
    R, pivots = rref(Matrix(aug, cols=M.cols + 1))
    if pivots and pivots[-1] == M.cols:
        return None
    x = [Fraction(0)] * M.cols
    for i, pc in enumerate(pivots):
        x[pc] = R[i, M.cols]
    return tuple(x)


def inverse(M: Matrix) -> Matrix:
    n = M.rows
    if M.cols != n:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(M.row(i)) + [int(i == j) for j in range(n)] for i in range(n)]
    R, pivots = rref(Matrix(aug, cols=2 * n))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix((R.row(i)[n:] for i in range(n)), cols=n)
