import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smallgobelin import SyzygyPair, algebra
from smallgobelin.algebra import Submodule, ideal, vec
from smallgobelin.checks import all_passed
from smallgobelin.errors import NotACycle, SyzygyViolation, UnitElement
from smallgobelin.exactlin import Matrix, rank
from smallgobelin.harness import random_syzygy
from smallgobelin.homology import induced_map
from smallgobelin.koszul import (
    colon_in_h1,
    dimension_table,
    gram_h1,
    gram_h1_dual,
    h1_action,
    h1_perp,
    kappa_iso,
    kappa_matrix,
    koszul,
    h1_splitting_check,
)


def test_dims_truncated_line(A4):
    k = koszul(A4, "x^2", "x^3")
    assert [h.dim for h in k.H] == [2, 4, 2]
    assert [h.dim for h in k.Hc] == [2, 4, 2]
    assert (k.nu, k.nu1, k.nu2) == (2, 2, 3)


def test_dims_xy(AXY):
    k = koszul(AXY, "x", "y")
    assert k.nu == 1
    assert [h.dim for h in k.H] == [1, 2, 1]


def test_zero_elements(AXY, CUSP):
    for A in (AXY, CUSP):
        k = koszul(A, 0, 0)
        mu = A.mu
        assert [h.dim for h in k.H] == [mu, 2 * mu, mu]
        assert k.nu == mu


def test_unit_rejected(A4):
    with pytest.raises(UnitElement):
        koszul(A4, "1 + x", "x")
    with pytest.raises(UnitElement):
        SyzygyPair(A4, "x", "2", 0, 0, 0, 0)


def test_syzygy_row_named(A4):
    with pytest.raises(SyzygyViolation) as e:
        SyzygyPair(A4, "x^2", "x^3", 1, 0, 0, 0)
    assert e.value.row == 1
    with pytest.raises(SyzygyViolation) as e:
        SyzygyPair(A4, "x^2", "x^3", 0, 0, "x", 1)
    assert e.value.row == 2


def test_diagnostics_s1(S1):
    assert S1.diagnostics() == {"mu": 4, "nu": 2, "nu1": 2, "nu2": 3, "tau1_dim": 2, "tau2_dim": 2}


def test_h1_action(A4):
    k = koszul(A4, "x^2", "x^3")
    cls = k.H1.class_coords(vec(A4("x"), A4(-1)))
    assert h1_action(k, 1, cls) == cls
    assert not all(c == 0 for c in cls)
    assert all(c == 0 for c in h1_action(k, "x^2", cls))
    # (-x^3, x^2) generates the boundaries
    assert all(c == 0 for c in k.H1.class_coords(vec(A4("-x^3"), A4("x^2"))))


def test_colon_in_h1_examples(A4):
    k = koszul(A4, "x^2", "x^3")
    zero, full = Submodule.zero(A4), Submodule.full(A4)
    t1 = vec(A4("x^2"), A4(0))
    t2 = vec(A4("x"), A4(-1))
    assert colon_in_h1(k, zero, t1, k.boundary_generator) == full
    assert colon_in_h1(k, zero, t2, t1) == ideal(A4, [A4("x^2")])
    with pytest.raises(NotACycle):
        colon_in_h1(k, zero, vec(A4(1), A4(0)), t1)


def test_colon_containment_case(A4):
    k = koszul(A4, "x^2", "x^3")
    t2 = vec(A4("x"), A4(-1))
    xt2 = vec(A4("x^2"), A4("-x"))
    assert colon_in_h1(k, Submodule.full(A4), t2, xt2) == Submodule.full(A4)


def test_gram_nondegenerate(A4, AXY, CUSP):
    cases = [(A4, "x^2", "x^3"), (AXY, "x", "y"), (AXY, "x", "x"), (CUSP, "x", "y"), (CUSP, 0, "y^2")]
    for A, f1, f2 in cases:
        k = koszul(A, f1, f2)
        g = gram_h1(k)
        assert g.shape == (2 * k.nu, 2 * k.nu)
        assert rank(g) == 2 * k.nu
        assert rank(gram_h1_dual(k)) == 2 * k.nu


def test_kappa_iso(A4):
    k = koszul(A4, "x^2", "x^3")
    kap = kappa_iso(k)
    assert kap.shape == (4, 4)
    assert rank(kap) == 4
    back = induced_map(k.Hc[1], k.H1, kappa_matrix(A4))
    assert back @ kap == Matrix.identity(A4.field, 4).scale(-1)
    # the forms correspond under kappa
    assert kap.transpose() @ gram_h1_dual(k) @ kap == gram_h1(k)


def test_dimension_table_and_h1_splitting(A4, AXY, CUSP):
    for A, f1, f2 in [(A4, "x^2", "x^3"), (AXY, "x", "y"), (AXY, "x+y", "x*y"), (CUSP, "x", "y^2"), (A4, 0, 0)]:
        k = koszul(A, f1, f2)
        assert all_passed(dimension_table(k))
        assert all_passed(h1_splitting_check(k))


def test_cycle_module_dims(A4, CUSP):
    from smallgobelin.algebra import orthogonal, submodule_generated

    for A, f1, f2 in [(A4, "x^2", "x^3"), (CUSP, "x", "y^2")]:
        k = koszul(A, f1, f2)
        gen = submodule_generated(A, 2, [k.cycle_generator])
        assert gen.dim == A.mu - k.nu
        assert orthogonal(gen, k.trace).dim == A.mu + k.nu
        assert orthogonal(gen, k.trace).space == k.H1.cycles


def test_h1_perp_contains_boundaries(S1):
    k = S1.koszul
    p = h1_perp(k, S1.tau2)
    assert k.H1.boundaries <= p <= k.H1.cycles


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_colon_in_h1_is_ideal(seed):
    rng = random.Random(seed)
    A = algebra(["x", "y"], ["x^3", "y^2"])
    f1, f2 = A("x^2"), A("x*y")
    k = koszul(A, f1, f2)
    tA = vec(*random_syzygy(A, f1, f2, rng))
    tB = vec(*random_syzygy(A, f1, f2, rng))
    from smallgobelin.flags import random_ideal

    I = random_ideal(A, rng)
    c = colon_in_h1(k, I, tA, tB)
    assert c.is_closed()
    # Koszul homology is killed by (f1, f2)
    assert k.ideal_f <= c
    assert I <= colon_in_h1(k, I, tA, tA)
