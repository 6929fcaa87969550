from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from smallgobelin.errors import InputError, NoSolution
from smallgobelin.exactlin import (
    GF,
    QQ,
    FieldSpec,
    Matrix,
    Subspace,
    image,
    kernel_basis,
    preimage,
    rank,
    solve,
    subspace_intersect,
    subspace_sum,
)

F7 = GF(7)


def small_matrix(max_rows=5, max_cols=5, lo=-3, hi=3):
    return st.integers(0, max_rows).flatmap(
        lambda r: st.integers(0, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r).map(
                lambda rows: (r, c, rows)
            )
        )
    )


def mat(field, r, c, rows):
    return Matrix(field, rows, r, c)


def test_field_validation():
    assert QQ.characteristic == 0 and QQ.kind == "Rationals"
    assert GF(2).kind == "PrimeField"
    with pytest.raises(InputError):
        FieldSpec(4)
    with pytest.raises(InputError):
        GF(2**31 + 11)


def test_field_coercion():
    assert QQ("3/6") == Fraction(1, 2)
    assert QQ(Fraction(4, 2)) == 2 and type(QQ(Fraction(4, 2))) is int
    assert F7(-1) == 6
    assert F7(Fraction(1, 2)) == 4
    assert F7.inv(3) * 3 % 7 == 1
    with pytest.raises(ZeroDivisionError):
        F7.inv(0)


def test_rank_examples():
    assert rank(Matrix.zeros(QQ, 0, 0)) == 0
    assert rank(Matrix.identity(QQ, 3)) == 3
    assert rank(Matrix(QQ, [[1, 2, 3], [2, 4, 6]])) == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(QQ, 2)).dim == 0
    assert kernel_basis(Matrix.zeros(QQ, 2, 2)) == Subspace.full(QQ, 2)
    k = kernel_basis(Matrix(GF(2), [[1, 1]]))
    assert k.vectors == ((1, 1),)


def test_solve():
    b = (Fraction(1, 3), 2, -5)
    assert solve(Matrix.identity(QQ, 3), b) == b
    with pytest.raises(NoSolution):
        solve(Matrix(QQ, [[1, 1], [2, 2]]), (1, 3))
    with pytest.raises(InputError):
        solve(Matrix.identity(QQ, 2), (1, 2, 3))
    # free variables are zero
    assert solve(Matrix(QQ, [[1, 1]]), (4,)) == (4, 0)


def test_mixed_fields_rejected():
    with pytest.raises(InputError):
        Matrix(QQ, [[1]]) @ Matrix(F7, [[1]])
    with pytest.raises(InputError):
        Subspace(QQ, 2, [(1, 0)]) + Subspace(F7, 2, [(1, 0)])


def test_canonical_form_is_unique():
    a = Subspace(QQ, 3, [(1, 2, 3), (0, 1, 1)])
    b = Subspace(QQ, 3, [(2, 5, 7), (Fraction(1, 2), 1, Fraction(3, 2))])
    assert a == b
    assert a.vectors == b.vectors
    for row, p in zip(a.vectors, a.pivots):
        assert row[p] > 0
        assert all(type(x) is int for x in row)


def test_remainder_and_coordinates():
    u = Subspace(QQ, 3, [(1, 0, 1), (0, 1, 1)])
    assert u.remainder((2, 3, 5)) == (0, 0, 0)
    r = u.remainder((0, 0, 1))
    assert all(r[p] == 0 for p in u.pivots)
    c = u.coordinates((2, 3, 5))
    assert sum(ci * vi[0] for ci, vi in zip(c, u.vectors)) == 2


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_rank_matches_sympy(m):
    r, c, rows = m
    ours = rank(mat(QQ, r, c, rows))
    theirs = sympy.Matrix(r, c, [x for row in rows for x in row]).rank() if r and c else 0
    assert ours == theirs


@settings(max_examples=60, deadline=None)
@given(small_matrix(), st.sampled_from([QQ, GF(2), GF(5), GF(32749)]))
def test_rank_nullity_and_kernel(m, field):
    r, c, rows = m
    M = mat(field, r, c, rows)
    K = kernel_basis(M)
    assert K.dim + rank(M) == c
    for v in K.vectors:
        assert all(x == 0 for x in M.apply(v))
    assert image(M).dim == rank(M)


@settings(max_examples=60, deadline=None)
@given(small_matrix(4, 5), small_matrix(4, 5), st.sampled_from([QQ, GF(3)]))
def test_lattice_dimension_formula(m1, m2, field):
    n = 5
    u = Subspace(field, n, [tuple(row) for row in m1[2] if len(row) == n])
    v = Subspace(field, n, [tuple(row) for row in m2[2] if len(row) == n])
    s = u + v
    i = u & v
    assert s.dim + i.dim == u.dim + v.dim
    assert i <= u and i <= v and u <= s and v <= s
    assert subspace_sum(u, v) == s and subspace_intersect(u, v) == i
    assert u.annihilator().annihilator() == u


@settings(max_examples=40, deadline=None)
@given(small_matrix(4, 4), small_matrix(4, 4))
def test_preimage(m, vs):
    r, c, rows = m
    if r == 0 or c == 0:
        return
    M = mat(QQ, r, c, rows)
    V = Subspace(QQ, r, [tuple(x) for x in vs[2] if len(x) == r])
    P = preimage(M, V)
    for x in P.vectors:
        assert V.contains(M.apply(x))
    assert P.dim == kernel_basis(M).dim + (image(M) & V).dim


def test_block_and_stack():
    I = Matrix.identity(QQ, 2)
    Z = Matrix.zeros(QQ, 2, 2)
    B = Matrix.block(QQ, [[I, Z], [Z, I]])
    assert B == Matrix.identity(QQ, 4)
    assert I.hstack(Z).shape == (2, 4)
    assert I.vstack(Z).shape == (4, 2)
    assert B.T == B
