from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conelab.exact import (
    Matrix,
    canonical_line,
    det,
    inverse,
    nullspace_basis,
    primitive,
    rank,
    rat_str,
    rref,
    solve,
    to_rat,
)
from oracles import leibniz_det, sym_rank

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    # bias toward rank deficiency: copy or zero some rows
    rows = [draw(st.lists(rationals, min_size=n, max_size=n)) for _ in range(m)]
    for i in range(m):
        if i and draw(st.booleans()) and draw(st.booleans()):
            j = draw(st.integers(0, i - 1))
            c = draw(rationals)
            rows[i] = [c * x for x in rows[j]]
    return Matrix(rows)


def ab_matrix(n, a, b):
    return Matrix([[a if i == j else b for j in range(n)] for i in range(n)])


def test_rank_examples():
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix.ones(3, 3)) == 1
    # eigenvalues -2, -2, 1: all nonzero
    A = ab_matrix(3, -1, 1)
    assert leibniz_det(A.tolist()) == 4
    assert rank(A) == 3


def test_rref_examples():
    R, piv = rref(Matrix.zeros(2, 3))
    assert R == Matrix.zeros(2, 3) and piv == []
    R, piv = rref(Matrix([[2, 4], [1, 2]]))
    assert R == Matrix([[1, 2], [0, 0]]) and piv == [0]
    R, piv = rref(ab_matrix(4, 3, 1))
    assert R == Matrix.identity(4) and piv == [0, 1, 2, 3]


def test_nullspace_examples():
    assert nullspace_basis(Matrix.identity(3)) == []
    (v,) = nullspace_basis(Matrix([[1, -1]]))
    assert canonical_line(v) == (1, 1)
    E = Matrix.ones(3, 3)
    basis = nullspace_basis(E)
    assert len(basis) == 2
    assert all(E.apply(v) == (0, 0, 0) for v in basis)
    assert rank(basis) == 2


def test_solve_examples():
    b = (Fraction(1, 2), Fraction(-3), Fraction(7))
    assert solve(Matrix.identity(3), b) == b
    x = solve(Matrix([[1, 1]]), [0])
    assert x[0] + x[1] == 0
    assert solve(Matrix([[1], [1]]), [1, 2]) is None
    with pytest.raises(ValueError):
        solve(Matrix([[1, 1]]), [1, 2])


def test_rational_strings():
    assert rat_str(Fraction(-6, 4)) == "-3/2"
    assert rat_str(5) == "5"
    assert to_rat("-3/2") == Fraction(-3, 2)
    assert to_rat(" 4 ") == 4
    with pytest.raises(TypeError):
        to_rat(0.5)
    with pytest.raises(ValueError):
        to_rat("1/0")


def test_primitive_keeps_direction():
    assert primitive([Fraction(2, 3), Fraction(-4, 3), 0]) == (1, -2, 0)
    assert primitive([-2, -4]) == (-1, -2)
    assert canonical_line([-2, -4]) == (1, 2)
    assert canonical_line([0, -3, 6]) == (0, 1, -2)
    assert primitive([0, 0]) == (0, 0)


def test_matrix_is_immutable():
    M = Matrix.identity(2)
    with pytest.raises(AttributeError):
        M.rows = 3


def test_inverse_and_det():
    A = ab_matrix(3, -1, 1)
    assert inverse(A) @ A == Matrix.identity(3)
    assert det(A) == 4
    with pytest.raises(ZeroDivisionError):
        inverse(Matrix.ones(2, 2))


@given(matrices())
def test_rank_matches_sympy(M):
    assert rank(M) == sym_rank(M.tolist())


@given(matrices())
def test_rank_transpose(M):
    assert rank(M) == rank(M.transpose())


@given(matrices())
def test_rank_nullity(M):
    basis = nullspace_basis(M)
    assert len(basis) + rank(M) == M.cols
    assert all(not any(M.apply(v)) for v in basis)
    if basis:
        assert rank(basis) == len(basis)


@given(matrices())
def test_rref_idempotent(M):
    R, piv = rref(M)
    R2, piv2 = rref(R)
    assert R2 == R and piv2 == piv
    assert piv == sorted(piv)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_leibniz(rows):
    assert det(Matrix(rows)) == leibniz_det(rows)


@given(matrices(), st.data())
def test_solve_consistent(M, data):
    x0 = data.draw(st.lists(rationals, min_size=M.cols, max_size=M.cols))
    b = M.apply(x0)
    x = solve(M, b)
    assert x is not None and M.apply(x) == b
