import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smallgobelin import algebra
from smallgobelin.algebra import (
    Submodule,
    annihilator,
    choose_trace,
    colon,
    ideal,
    orthogonal,
    socle_and_checks,
    submodule_generated,
    trace_from_functional,
    vec,
)
from smallgobelin.errors import InputError, NotGorenstein, NotLocal
from smallgobelin.exactlin import GF
from smallgobelin.flags import random_ideal


def test_arithmetic(A4):
    x = A4("x")
    assert x**4 == A4.zero()
    assert (1 + x) * (1 - x + x**2 - x**3) == A4.one()
    assert (1 + x).inverse() == A4("1 - x + x^2 - x^3")
    assert not x.is_unit()
    assert str(A4("2*x^3 - x")) == "-x + 2*x^3"


def test_axioms(A4, AXY, CUSP):
    for A in (A4, AXY, CUSP):
        assert A.check_axioms()


def test_socle_of_truncated_line(A4):
    rep = socle_and_checks(A4)
    assert rep.is_local and rep.is_gorenstein_local
    assert rep.nilradical.dim == 3
    assert rep.socle.elements() == [A4("x^3")]


def test_colon_and_orthogonal(A4):
    I = ideal(A4, [A4("x^3")])
    assert colon(I, A4("x^2").coords).dim == 3
    t = choose_trace(A4)
    orth = orthogonal(ideal(A4, [A4("x^2")]), t)
    assert orth == ideal(A4, [A4("x^2")])
    assert orth.dim == 2


def test_not_local():
    A = algebra(["x"], ["x^2 - x"])
    with pytest.raises(NotLocal):
        choose_trace(A)


def test_not_gorenstein():
    A = algebra(["x", "y"], ["x^2", "x*y", "y^2"])
    rep = socle_and_checks(A)
    assert rep.is_local and rep.socle.dim == 2
    with pytest.raises(NotGorenstein):
        choose_trace(A)


def test_prime_field_gorenstein(CUSP):
    rep = socle_and_checks(CUSP)
    assert rep.is_gorenstein_local
    # nilradical through the Frobenius in characteristic p
    assert rep.nilradical.dim == CUSP.mu - 1


def test_small_characteristic_nilradical():
    A = algebra(["x", "y"], ["x^3", "y^2"], GF(2))
    rep = socle_and_checks(A)
    assert rep.is_local and rep.is_gorenstein_local


def test_submodule_of_free_module(A4):
    x = A4("x")
    m = submodule_generated(A4, 2, [vec(x**2, -x**3)])
    assert m.dim == 2 and m.is_closed()
    assert m.contains(vec(x**3, A4.zero()))


def test_trace_rejects_functional_vanishing_on_socle(A4):
    with pytest.raises(NotGorenstein):
        trace_from_functional(A4, [1, 1, 1, 0])


ALGEBRAS = [
    (["x"], ["x^4"]),
    (["x", "y"], ["x^2", "y^2"]),
    (["x", "y"], ["x*y", "x^2-y^2"]),
    (["x", "y"], ["x^3", "y^2"]),
]


@pytest.fixture(scope="module")
def algebras():
    return [algebra(v, r) for v, r in ALGEBRAS]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, len(ALGEBRAS) - 1), st.integers(0, 2**32))
def test_gorenstein_duality(algebras, which, seed):
    A = algebras[which]
    rng = random.Random(seed)
    I = random_ideal(A, rng)
    ann = annihilator(I)
    assert I.dim + ann.dim == A.mu
    assert annihilator(ann) == I
    t1 = choose_trace(A)
    t2 = trace_from_functional(A, [c + 1 for c in t1.functional])
    assert orthogonal(I, t1) == orthogonal(I, t2) == ann


@settings(max_examples=30, deadline=None)
@given(st.integers(0, len(ALGEBRAS) - 1), st.integers(0, 2**32))
def test_ideal_operations_are_ideals(algebras, which, seed):
    A = algebras[which]
    rng = random.Random(seed)
    I, J = random_ideal(A, rng), random_ideal(A, rng)
    for K in (I + J, I & J, annihilator(I), colon(I, rng.choice(A.basis()).coords)):
        assert K.is_closed()
    assert (I & J) <= I <= (I + J)


def test_mixed_algebras_rejected(A4, AXY):
    with pytest.raises(InputError):
        A4("x") + AXY("x")
    with pytest.raises(InputError):
        Submodule.zero(A4) + Submodule.zero(AXY)
