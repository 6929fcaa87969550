import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smallgobelin.errors import ComplexBroken, InputError, NotACycle, NotChainCompatible
from smallgobelin.exactlin import GF, QQ, Matrix, Subspace, kernel_basis, rank
from smallgobelin.homology import (
    BMatrix,
    ScalarComplex,
    Subquotient,
    check_short_exact,
    euler_characteristic,
    exact_at,
    induced_map,
)


def circle(field=QQ):
    """Simplicial circle: 3 vertices, 3 edges."""
    d1 = Matrix(field, [[-1, 0, 1], [1, -1, 0], [0, 1, -1]])
    return ScalarComplex(field, (3, 3), {1: d1})


def test_circle_homology():
    c = circle()
    assert [c.homology_at(i).dim for i in range(2)] == [1, 1]
    assert c.homology_dims() == [1, 1]
    assert euler_characteristic(c.homology_dims()) == 0


def test_broken_complex_detected():
    d1 = Matrix(QQ, [[1, 0]])
    d2 = Matrix(QQ, [[1], [0]])
    with pytest.raises(ComplexBroken):
        ScalarComplex(QQ, (1, 2, 1), {1: d1, 2: d2})


def test_cochain_convention():
    d0 = Matrix(QQ, [[1], [1]])
    c = ScalarComplex(QQ, (1, 2), {0: d0}, cochain=True)
    assert c.homology_dims() == [0, 1]


def test_subquotient_classes():
    z = Subspace(QQ, 3, [(1, 0, 0), (0, 1, 0)])
    w = Subspace(QQ, 3, [(1, 1, 0)])
    h = Subquotient(z, w)
    assert h.dim == 1
    assert h.class_coords((1, 1, 0)) == (0,)
    a = h.class_coords((1, 0, 0))
    b = h.class_coords((0, 1, 0))
    assert a == tuple(-x for x in b)
    assert h.class_coords(h.lift(a)) == a
    with pytest.raises(NotACycle):
        h.class_coords((0, 0, 1))
    with pytest.raises(ComplexBroken):
        Subquotient(w, z)


def test_induced_map_and_exactness():
    c = circle()
    h0 = c.homology_at(0)
    # the identity induces the identity
    m = induced_map(h0, h0, Matrix.identity(QQ, 3))
    assert m == Matrix.identity(QQ, 1)
    with pytest.raises(NotChainCompatible):
        induced_map(c.homology_at(1), c.homology_at(1), Matrix(QQ, [[1, 0, 0], [0, 0, 0], [0, 0, 0]]))


def test_short_exact_report():
    i = Matrix(QQ, [[1], [0]])
    p = Matrix(QQ, [[0, 1]])
    rep = check_short_exact(i, p)
    assert rep.passed and rep.dims == (1, 2, 1)
    assert not check_short_exact(Matrix(QQ, [[1], [0]]), Matrix(QQ, [[1, 1]])).passed
    with pytest.raises(InputError):
        exact_at(Matrix(QQ, [[1]]), Matrix(QQ, [[1, 1]]))


def test_bmatrix_expand(A4):
    x = A4("x")
    m = BMatrix(A4, [[x, 1]])
    e = m.expand()
    assert e.shape == (4, 8)
    v = tuple(A4("1").coords) + tuple(A4("x^2").coords)
    assert e.apply(v) == (x + x**2).coords
    assert (m @ m.transpose()).entries[0][0] == x**2 + 1
    assert BMatrix.zeros(A4, 2, 3).is_zero()


matrices = st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=1, max_size=3)


@settings(max_examples=50, deadline=None)
@given(matrices, st.sampled_from([QQ, GF(3)]))
def test_two_term_complex_homology_by_rank(rows, field):
    d = Matrix(field, rows)
    c = ScalarComplex(field, (len(rows), 3), {1: d})
    h = c.homology_at(1)
    assert h.dim == kernel_basis(d).dim
    assert c.homology_at(0).dim == len(rows) - rank(d)
    assert euler_characteristic(c.homology_dims()) == len(rows) - 3
