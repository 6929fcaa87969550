"""Acceptance criteria, one test per criterion.

Each criterion prints ``criterion N: PASS`` or ``criterion N: FAIL`` (the
lines are also repeated in the pytest terminal summary).  Run this file
directly for a plain report:  python tests/test_acceptance.py
"""

import sys
import time
from functools import lru_cache

import pytest

from smallgobelin import SyzygyPair, algebra
from smallgobelin.gobelin import build, g2_differential, g1_closed_forms_check
from smallgobelin.harness import analyze, check_family, corpus, family, run_suite, stable_differences
from smallgobelin.homology import BMatrix
from smallgobelin.koszul import dimension_table, koszul

RESULTS = {}


@lru_cache(maxsize=None)
def scenarios():
    return tuple(corpus())


def _failures(checks):
    return [f"{c.name}: expected {c.expected}, got {c.actual}" for c in checks if not c.passed]


def criterion_1():
    bad = []
    for sc in scenarios():
        k = analyze(sc).koszul
        if tuple(h.dim for h in k.H) != (k.nu, 2 * k.nu, k.nu):
            bad.append(sc.name)
    k = koszul(algebra(["x"], ["x^4"]), "x^2", "x^3")
    if tuple(h.dim for h in k.H) != (2, 4, 2):
        bad.append("Q[x]/(x^4), (x^2, x^3)")
    return bad


def criterion_2():
    bad = []
    for sc in scenarios():
        bad += [f"{sc.name}: {m}" for m in _failures(dimension_table(analyze(sc).koszul))]
    return bad


def criterion_3():
    bad = []
    wanted = ("50 random ideals", "two different trace maps")
    for sc in scenarios():
        v = run_suite(sc, "algebra")
        picked = [c for c in v.checks if any(w in c.name for w in wanted)]
        assert len(picked) == 3
        bad += [f"{sc.name}: {m}" for m in _failures(picked)]
    return bad


def _golden(s):
    f1, f2, c11, c12, c21, c22 = s.f1, s.f2, s.c11, s.c12, s.c21, s.c22
    z = s.algebra.zero()
    gold = {
        2: [[-f2, c11, c21], [f1, c12, c22]],
        3: [[-c12, -c22, c11, c21], [f1, z, f2, z], [z, f1, z, f2]],
        4: [[-f2, z, c11, c21, z], [z, -f2, z, c11, c21], [f1, z, c12, c22, z], [z, f1, z, c12, c22]],
    }
    return all(g2_differential(s, k) == BMatrix(s.algebra, m) for k, m in gold.items())


def criterion_4():
    bad = []
    for sc in scenarios():
        a = analyze(sc)
        for gc in (a.g1, a.g2, a.g1_dual, a.g2_dual):
            cx = gc.complex
            for i, m in cx.d.items():
                nxt = cx.d.get(i - 1 if cx.cochain else i + 1)
                if nxt is not None and not (m @ nxt).is_zero():
                    bad.append(f"{sc.name}: {gc.which} degree {i}")
        if not _golden(a.pair):
            bad.append(f"{sc.name}: golden matrices")
    return bad


def criterion_5():
    bad = []
    for sc in scenarios():
        a = analyze(sc)
        checks = g1_closed_forms_check(a.pair, 5, a.g1, a.g1_dual)
        bad += [f"{sc.name}: {m}" for m in _failures(checks)]
        d = a.g1.dims()
        bad += [f"{sc.name}: H_{2 * j} != H_{2 * j + 1}" for j in range(1, len(d) // 2)
                if d[2 * j] != d[2 * j + 1]]
    return bad


def criterion_6():
    bad = []
    for sc in scenarios():
        assert sc.max_degree >= 6
        v = run_suite(sc, "les")
        bad += [f"{sc.name}: {m}" for m in _failures(v.checks)]
    return bad


def criterion_7():
    bad = []
    for sc in scenarios():
        assert sc.max_degree >= 7  # j runs through 1..3
        v = run_suite(sc, "cdos")
        per = v.notes["per_degree"]
        if sorted(per) != [1, 2, 3]:
            bad.append(f"{sc.name}: degrees {sorted(per)}")
        if not v.notes["variants"]:
            bad.append(f"{sc.name}: no convention holds ({per})")
        print(f"  {sc.name}: conventions {','.join(v.notes['variants'])}")
    return bad


_FAMILY_ALGEBRAS = [
    dict(ring=("x",), relations=("x^4",), f1="x^2", f2="x^3"),
    dict(ring=("x", "y"), relations=("x^2", "y^2"), f1="x", f2="y"),
    dict(ring=("x", "y"), relations=("x^3", "y^2"), f1="x^2", f2="x*y", b1="y", b2="x"),
]


def _family_dims_ok(sc, J=6):
    exp = [int(x) for x in sc.annotations["g2"].split()][:J + 1]
    return analyze(sc).g2.dims()[:J + 1] == exp


def criterion_8():
    bad = []
    for params in _FAMILY_ALGEBRAS:
        zero, homologous = family("zero_syzygies", max_degree=6, **params)
        nu = analyze(zero).koszul.nu
        if analyze(zero).g2.dims() != [(j + 1) * nu for j in range(7)]:
            bad.append(f"{zero.name}: {analyze(zero).g2.dims()}")
        if analyze(homologous).g2.dims() != analyze(zero).g2.dims():
            bad.append(f"{homologous.name}: {analyze(homologous).g2.dims()}")
    return bad


def criterion_9():
    bad = []
    cases = [
        dict(tau2=("x", "-1")),
        dict(tau2=("x^3", "0")),
        dict(ring=("x", "y"), relations=("x^3", "y^2"), f1="x^2", f2="x*y", tau2=("y", "-x")),
        dict(ring=("x", "y"), relations=("x^2", "y^2"), f1="x", f2="y", tau2=("x*y", "0")),
    ]
    for params in cases:
        sc, = family("one_zero", max_degree=6, **params)
        if not _family_dims_ok(sc):
            bad.append(f"{sc.name}: expected {sc.annotations['g2']}, got {analyze(sc).g2.dims()}")
    sc, = family("one_zero", max_degree=6, tau2=("x^3", "0"))
    if analyze(sc).g2.dims() != [2, 3, 4, 5, 6, 7, 8]:
        bad.append(f"x^3 case: {analyze(sc).g2.dims()}")
    return bad


@lru_cache(maxsize=None)
def g_multiple_scenarios():
    scs = [s for s in scenarios() if s.name.startswith("gmult")]
    scs += family("g_multiple", ring=("x", "y"), relations=("x^3", "y^3"), f1="x^2", f2="y^2",
                  tau2=("y^2", "-x^2"), g="x", max_degree=6)
    return tuple(scs)


def criterion_10():
    bad = []
    for sc in g_multiple_scenarios():
        v = check_family(sc)
        bad += [f"{sc.name}: {m}" for m in _failures(v.checks)]
    return bad


def criterion_11():
    bad = []
    for sc in scenarios():
        v = run_suite(sc, "flags")
        if sum("random fixed points" in c.name for c in v.checks) != 2:
            bad.append(f"{sc.name}: extremality checks missing")
        bad += [f"{sc.name}: {m}" for m in _failures(v.checks)]
    return bad


def criterion_12():
    bad = []
    for sc in scenarios():
        a = analyze(sc)
        start = 2 * a.flags.length
        even, odd = stable_differences(a.g2.dims(), start)
        if len(set(even)) > 1 or len(set(odd)) > 1:
            bad.append(f"{sc.name}: from {start}, even {even}, odd {odd}")
    return bad


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 13)}


def evaluate(n):
    t = time.perf_counter()
    bad = CRITERIA[n]()
    line = f"criterion {n}: {'PASS' if not bad else 'FAIL'} ({time.perf_counter() - t:.1f} s)"
    RESULTS[n] = line
    print(line)
    for b in bad[:10]:
        print(f"    {b}")
    return bad


CRITERION_10_REASON = (
    "the stabilization index of L is min{i : g^i in L_1} + 1, not min{i : g^i in L_1}: "
    "L_j = (L_1 : g^(j-1)) equals B exactly when g^(j-1) is in L_1"
)


@pytest.mark.parametrize("n", [n for n in CRITERIA if n != 10])
def test_criterion(n):
    assert evaluate(n) == []


@pytest.mark.xfail(strict=True, reason=CRITERION_10_REASON)
def test_criterion_10():
    assert evaluate(10) == []


def test_criterion_10_shifted_index():
    """What does hold for the g-multiple family: every identity, with the index shifted by one."""
    for sc in g_multiple_scenarios():
        v = check_family(sc)
        for c in v.checks:
            if c.name.startswith("stabilization index"):
                assert c.actual == c.expected + 1
            else:
                assert c.passed, c


def test_g_multiple_dims_small():
    A = algebra(["x"], ["x^4"])
    s = SyzygyPair(A, "x^2", "x^3", "x^2", "-x", "x", -1)
    # nu + j (nu - tau2) with nu = tau2 = 2
    assert build(s, "G2", 6).dims() == [2] * 7


if __name__ == "__main__":
    failed = [n for n in CRITERIA if evaluate(n)]
    sys.exit(1 if failed else 0)
