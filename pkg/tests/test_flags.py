import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smallgobelin import SyzygyPair, algebra
from smallgobelin.algebra import Submodule, colon, ideal
from smallgobelin.checks import all_passed
from smallgobelin.errors import NotStabilized
from smallgobelin.flags import (
    colon_step,
    compute_flags,
    fixed_point_extremality,
    flag_gap_monotonicity,
    flag_structure_checks,
    iterate_flag,
    phi_psi_dims,
)
from smallgobelin.harness import random_syzygy


def test_s1_flags(S1, A4):
    fr = compute_flags(S1)
    x2 = ideal(A4, [A4("x^2")])
    assert fr.L(1) == x2 and fr.F(1) == x2
    assert fr.stab["L"] == 1 and fr.stab["F"] == 1
    assert fr.dims(2)["F"] == [4, 2, 2]
    # single nonzero gap on the F side at j = 0
    gaps = [fr.F(j).dim - fr.F(j + 1).dim for j in range(4)]
    assert gaps == [2, 0, 0, 0]
    assert fr.F(1).dim - fr.L(1).dim == 0 == fr.Fp(1).dim - fr.Lp(1).dim


def test_zero_syzygies_flags(S0, A4):
    fr = compute_flags(S0)
    full = Submodule.full(A4)
    for j in range(1, 4):
        assert fr.L(j) == full and fr.F(j) == full and fr.Lp(j) == full and fr.Fp(j) == full
    assert fr.L(0) == Submodule.zero(A4)
    assert all_passed(phi_psi_dims(S0, fr))


def test_one_zero_flags(A4):
    # tau1 = 0: every colon is all of B, so L_1 = ... = F_0 = B
    s = SyzygyPair(A4, "x^2", "x^3", 0, 0, "x", -1)
    fr = compute_flags(s)
    assert fr.L(1) == Submodule.full(A4)
    assert fr.F(1).dim - fr.L(1).dim == 0


def test_g_multiple_structure(A4):
    # tau1 = x * tau2 over Q[x]/(x^4), tau2 = (x, -1)
    s = SyzygyPair(A4, "x^2", "x^3", "x^2", "-x", "x", -1)
    fr = compute_flags(s)
    g = A4("x")
    L1 = fr.L(1)
    assert L1 == ideal(A4, [g])
    assert L1.dim == 3
    for j in range(1, 5):
        assert fr.L(j) == colon(L1, (g ** (j - 1)).coords)
        assert fr.Fp(j) == ideal(A4, [g ** j]) + fr.Lp(1)
    m = next(i for i in range(5) if L1.contains((g ** i).coords))
    assert m == 1
    # L_2 = (L_1 : g) = B, so L first repeats at index m + 1
    assert fr.L(2) == Submodule.full(A4)
    assert fr.stab["L"] == m + 1 == 2


def test_g_multiple_deeper():
    A = algebra(["x"], ["x^8"])
    s = SyzygyPair(A, "x^4", "x^6", "x^4", "-x^2", "x^2", -1)
    fr = compute_flags(s)
    g = A("x^2")
    L1 = fr.L(1)
    m = next(i for i in range(9) if L1.contains((g ** i).coords))
    assert fr.stab["L"] == m + 1
    assert all(fr.L(j) == colon(L1, (g ** (j - 1)).coords) for j in range(1, 7))


def test_swap(S1):
    assert all_passed(flag_structure_checks(S1, compute_flags(S1)))
    sw = compute_flags(S1.swapped())
    fr = compute_flags(S1)
    assert sw.L(1) == fr.Lp(1) and sw.Fp(2) == fr.F(2)


def test_extremality(S0, S1):
    for s in (S0, S1):
        checks = fixed_point_extremality(s, trials=10, seed=3)
        assert all_passed(checks), [c for c in checks if not c.passed]


def test_iterate_limit(S1, A4):
    with pytest.raises(NotStabilized):
        iterate_flag(S1, Submodule.full(A4), False, max_steps=0)
    terms, stab = iterate_flag(S1, Submodule.full(A4), False, max_steps=3)
    assert stab == 1 and len(terms) == 2


def test_colon_step_monotone(S1, A4):
    small = ideal(A4, [A4("x^3")])
    big = ideal(A4, [A4("x")])
    assert colon_step(S1, small) <= colon_step(S1, big)
    assert colon_step(S1, small, primed=True) <= colon_step(S1, big, primed=True)


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_flag_theorems_random(seed):
    rng = random.Random(seed)
    A = algebra(["x", "y"], ["x^3", "y^3"])
    f1, f2 = A("x*y"), A("x^2")
    t1 = random_syzygy(A, f1, f2, rng)
    t2 = random_syzygy(A, f1, f2, rng)
    s = SyzygyPair(A, f1, f2, *t1, *t2)
    fr = compute_flags(s)
    assert fr.length <= s.koszul.nu
    assert all_passed(flag_structure_checks(s, fr))
    assert all_passed(flag_gap_monotonicity(fr))
    assert all_passed(phi_psi_dims(s, fr))
    assert all_passed(fixed_point_extremality(s, fr, trials=4, seed=seed))
