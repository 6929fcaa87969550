"""Verification suites over scenarios, the three example families, and a
built-in corpus of scenarios."""

import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .algebra import (
    annihilator,
    choose_trace,
    ideal,
    orthogonal,
    colon,
    scalar_mul,
    submodule_generated,
    trace_from_functional,
    vec,
)
from .checks import Check, all_passed, equal, holds
from .errors import (
    GobelinError,
    InputError,
    NotGorenstein,
    NotZeroDimensional,
    SyzygyViolation,
    UnitElement,
)
from .exactlin import GF, QQ, Subspace, kernel_basis, rank
from .flags import (
    compute_flags,
    cycle_component_checks,
    fixed_point_extremality,
    flag_gap_monotonicity,
    flag_structure_checks,
    phi_psi_dims,
    random_ideal,
)
from .gobelin import (
    build_g1,
    build_g1_dual,
    build_g2,
    build_g2_dual,
    les_maps,
    dual_image_check,
    g1_closed_forms_check,
)
from .koszul import _kappa, dimension_table, gram_h1, gram_h1_dual, kappa_iso, h1_splitting_check
from .scenario import ELEMENT_KEYS, Scenario

__all__ = [
    "SUITES",
    "FAMILIES",
    "ScenarioInvalid",
    "SuiteVerdict",
    "Analysis",
    "analyze",
    "run_suite",
    "run_all",
    "dimension_identities",
    "stable_differences",
    "family",
    "check_family",
    "corpus",
    "random_syzygy",
]

SUITES = ("algebra", "koszul", "g1", "les", "cdos", "flags", "dual")
FAMILIES = ("zero_syzygies", "one_zero", "g_multiple")


class ScenarioInvalid(InputError):
    """A scenario violates a precondition.

    ``hypothesis`` is True when the input is well formed but a mathematical
    hypothesis fails (syzygy row, Gorenstein, locality, unit, dimension zero).
    """

    def __init__(self, message, hypothesis=False, cause=None):
        super().__init__(message)
        self.hypothesis = hypothesis
        self.cause = cause


@dataclass
class SuiteVerdict:
    name: str
    checks: list
    notes: dict = dc_field(default_factory=dict)

    @property
    def passed(self):
        return all_passed(self.checks)

    @property
    def first_failure(self):
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self):
        out = {"name": self.name, "checks": [c.to_json() for c in self.checks], "pass": self.passed}
        if self.notes:
            out["notes"] = {str(k): _plain(v) for k, v in self.notes.items()}
        return out


def _plain(x):
    return Check("", None, x, True).to_json()["actual"]


class Analysis:
    """Everything computed for one scenario, built lazily and shared by the suites."""

    def __init__(self, sc):
        self.scenario = sc
        try:
            self.pair = sc.pair()
        except (SyzygyViolation, NotGorenstein, UnitElement, NotZeroDimensional) as e:
            raise ScenarioInvalid(str(e), hypothesis=True, cause=e) from e
        self.J = sc.max_degree

    @property
    def algebra(self):
        return self.pair.algebra

    @property
    def koszul(self):
        return self.pair.koszul

    @cached_property
    def flags(self):
        return compute_flags(self.pair)

    @cached_property
    def g1(self):
        return build_g1(self.pair, self.J)

    @cached_property
    def g2(self):
        return build_g2(self.pair, self.J)

    @cached_property
    def g1_dual(self):
        return build_g1_dual(self.pair, self.J)

    @cached_property
    def g2_dual(self):
        return build_g2_dual(self.pair, self.J)

    def hyper(self):
        return {
            "g1": self.g1.dims(),
            "g2": self.g2.dims(),
            "g1_dual": self.g1_dual.dims(),
            "g2_dual": self.g2_dual.dims(),
        }


def analyze(sc):
    """The cached Analysis of a scenario."""
    a = sc.__dict__.get("_analysis")
    if a is None:
        a = Analysis(sc)
        sc.__dict__["_analysis"] = a
    return a


# ---------------------------------------------------------------------------
# suites


def _second_trace(alg, first, rng):
    """Another functional that is nonzero on the socle."""
    while True:
        ell = [x + rng.choice((-1, 0, 1, 2)) for x in first.functional]
        try:
            t = trace_from_functional(alg, ell)
        except NotGorenstein:
            continue
        if t.functional != first.functional:
            return t


def _suite_algebra(a):
    alg = a.algebra
    s = a.pair
    rng = random.Random(a.scenario.seed)
    checks = []
    try:
        alg.check_axioms()
        checks.append(holds("multiplication table is commutative, associative and unital", True))
    except InputError as e:
        checks.append(holds("multiplication table is commutative, associative and unital", False, str(e)))
    rep = s.socle_report
    checks.append(holds("algebra is local", rep.is_local))
    checks.append(equal("socle dimension", 1, rep.socle.dim))
    t1 = s.trace
    checks.append(equal("trace pairing has full rank", alg.mu, rank(_gram_matrix(t1))))
    t2 = _second_trace(alg, t1, rng)
    dims_ok = True
    double_ok = True
    orth_ok = True
    for _ in range(50):
        I = random_ideal(alg, rng)
        ann = annihilator(I)
        dims_ok &= I.dim + ann.dim == alg.mu
        double_ok &= annihilator(ann) == I
        orth_ok &= orthogonal(I, t1) == orthogonal(I, t2) == ann
    checks.append(holds("dim I + dim Ann(I) = mu for 50 random ideals", dims_ok))
    checks.append(holds("Ann(Ann(I)) = I for 50 random ideals", double_ok))
    checks.append(holds("orthogonal of I is Ann(I) under two different trace maps", orth_ok))
    checks.extend(dimension_table(a.koszul))
    # kappa is an isometry of the pairing on B^2
    iso = True
    for _ in range(10):
        u = tuple(alg.field(rng.randint(-2, 2)) for _ in range(2 * alg.mu))
        v = tuple(alg.field(rng.randint(-2, 2)) for _ in range(2 * alg.mu))
        iso &= t1.pair(_kappa(alg, u), _kappa(alg, v)) == t1.pair(u, v)
    checks.append(holds("kappa preserves the pairing on B^2", iso))
    return SuiteVerdict("algebra", checks)


def _gram_matrix(t):
    from .exactlin import Matrix

    return Matrix(t.algebra.field, [list(r) for r in t.gram])


def _suite_koszul(a):
    k = a.koszul
    alg = a.algebra
    nu, mu = k.nu, alg.mu
    checks = [
        equal("dim H0, H1, H2 = nu, 2nu, nu", (nu, 2 * nu, nu), tuple(h.dim for h in k.H)),
        equal("dim H^0, H^1, H^2 = nu, 2nu, nu", (nu, 2 * nu, nu), tuple(h.dim for h in k.Hc)),
        equal("induced form on H_1 is nondegenerate", 2 * nu, rank(gram_h1(k))),
        equal("induced form on H^1 is nondegenerate", 2 * nu, rank(gram_h1_dual(k))),
        equal("kappa induces an isomorphism H_1 -> H^1", 2 * nu, rank(kappa_iso(k))),
    ]
    gen = submodule_generated(alg, 2, [k.cycle_generator])
    perp = orthogonal(gen, k.trace)
    checks.append(equal("dim <(f1,f2)> = mu - nu", mu - nu, gen.dim))
    checks.append(equal("dim <(f1,f2)>^perp = mu + nu", mu + nu, perp.dim))
    checks.append(holds("syzygies of (f1, f2) are <(f1,f2)>^perp", perp.space == k.H1.cycles))
    checks.extend(h1_splitting_check(k))
    return SuiteVerdict("koszul", checks)


def _suite_g1(a):
    J = min(5, a.J)
    checks = g1_closed_forms_check(a.pair, J, a.g1, a.g1_dual)
    d = a.g1.dims()
    checks.append(holds("dim H_j(G1) constant for j >= 2", len(set(d[2:])) <= 1, d))
    return SuiteVerdict("g1", checks)


def _dd_checks(gc):
    cx = gc.complex
    ok = True
    for i, m in cx.d.items():
        nxt = cx.d.get(i - 1 if cx.cochain else i + 1)
        if nxt is not None:
            ok &= (m @ nxt).is_zero()
    return holds(f"d o d = 0 in {gc.which} through degree {gc.max_degree + 1}", ok)


def _suite_les(a):
    J = min(6, a.J)
    checks = [_dd_checks(g) for g in (a.g1, a.g2, a.g1_dual, a.g2_dual)]
    rep = les_maps(a.pair, J, a.g1, a.g2)
    checks.extend(rep.checks)
    for (label, k), ok in rep.nodes:
        checks.append(holds(f"exact at {label} in degree {k}", ok))
    return SuiteVerdict("les", checks, {"ranks": rep.ranks})


def dimension_identities(s, fr, h1, h2, j):
    """Whether the even and odd dimension identities hold at j for both conventions.

    Returns {"A": (even, odd), "B": (even, odd)}; A uses
    dim L_1 - dim(L'_j & L_1) (= dim Ann(L'_j & L_1)/Ann(L_1)), B the same
    with the flags exchanged.
    """
    X = {
        "A": fr.L(1).dim - (fr.Lp(j) & fr.L(1)).dim,
        "B": fr.Lp(1).dim - (fr.L(j) & fr.Lp(1)).dim,
    }
    g_prev = fr.F(j - 1).dim - (fr.F(j - 1) & fr.Fp(1)).dim
    g_cur = fr.F(j).dim - (fr.F(j) & fr.Fp(1)).dim
    out = {}
    for name, x in X.items():
        even = h2[2 * j] == h2[2 * j - 2] - g_prev + h1[2 * j] - x
        odd = h2[2 * j + 1] == h2[2 * j - 1] - x + h1[2 * j + 1] - g_cur
        out[name] = (even, odd)
    return out


def stable_differences(dims, start):
    """Differences dims[j+2] - dims[j] for j >= start, split by parity of j."""
    even, odd = [], []
    for j in range(start, len(dims) - 2):
        (even if j % 2 == 0 else odd).append(dims[j + 2] - dims[j])
    return even, odd


def _suite_cdos(a):
    s = a.pair
    fr = a.flags
    k = a.koszul
    h1 = a.g1.dims()
    h2 = a.g2.dims()
    nu = k.nu
    checks = [equal("dim H_0(G2) = nu", nu, h2[0])]
    if a.J >= 1:
        span = submodule_generated(a.algebra, 2, [s.tau1, s.tau2]).space + k.H1.boundaries
        t12 = span.dim - k.H1.boundaries.dim
        checks.append(equal("dim H_1(G2) = 2nu - dim <tau1, tau2>", 2 * nu - t12, h2[1]))
    per_j = {}
    holding = {"A": True, "B": True}
    for j in range(1, (a.J - 1) // 2 + 1):
        res = dimension_identities(s, fr, h1, h2, j)
        per_j[j] = {v: list(r) for v, r in res.items()}
        for v in res:
            holding[v] &= all(res[v])
        checks.append(holds(f"degree {2 * j} and {2 * j + 1} identities hold for some convention",
                            any(all(r) for r in res.values()), per_j[j]))
    variants = [v for v, ok in holding.items() if ok]
    checks.append(holds("one convention satisfies every identity", bool(variants), variants))
    start = 2 * fr.length
    even, odd = stable_differences(h2, start)
    checks.append(holds("H_(j+2)(G2) - H_j(G2) constant on the stabilized range, even j",
                        len(set(even)) <= 1, {"from": start, "diffs": even}))
    checks.append(holds("H_(j+2)(G2) - H_j(G2) constant on the stabilized range, odd j",
                        len(set(odd)) <= 1, {"from": start, "diffs": odd}))
    return SuiteVerdict("cdos", checks, {"variants": variants, "per_degree": per_j})


def _suite_flags(a):
    s = a.pair
    fr = a.flags
    checks = []
    checks.extend(flag_structure_checks(s, fr))
    checks.extend(flag_gap_monotonicity(fr))
    checks.extend(phi_psi_dims(s, fr))
    checks.extend(fixed_point_extremality(s, fr, trials=10, seed=a.scenario.seed))
    for j in range(1, min(3, a.J // 2) + 1):
        checks.extend(cycle_component_checks(s, fr, j, a.g2, a.g2_dual))
    return SuiteVerdict("flags", checks, {"stab": fr.stab, "dims": fr.dims()})


def _suite_dual(a):
    s = a.pair
    fr = a.flags
    checks = [
        equal("dim H^j(G1*) = dim H_j(G1)", a.g1.dims(), a.g1_dual.dims()),
        equal("dim H^j(G2*) = dim H_j(G2)", a.g2.dims(), a.g2_dual.dims()),
    ]
    literal = {}
    alg = a.algebra
    mu = alg.mu
    for j in range(1, min(3, a.J // 2) + 1):
        lit, alt = dual_image_check(s, j, fr, a.g2_dual)
        literal[j] = lit
        checks.append(holds(f"image of H^{2 * j}(G2*) in H^{2 * j}(G1*) is pi_1^-1(L_1 & L'_{j})", alt))
        z = a.g1_dual.homology(2 * j).cycles
        first = Subspace(alg.field, mu, [v[:mu] for v in z.vectors])
        checks.append(holds(f"first components of H^{2 * j}(G1*) cocycles fill L_1", first == fr.L(1).space))
    return SuiteVerdict("dual", checks, {"pi1_inverse_of_L_j_and_Lp_1": literal})


_RUNNERS = {
    "algebra": _suite_algebra,
    "koszul": _suite_koszul,
    "g1": _suite_g1,
    "les": _suite_les,
    "cdos": _suite_cdos,
    "flags": _suite_flags,
    "dual": _suite_dual,
}


def run_suite(sc, suite):
    """Run one named suite (or "all", returning a list) on a scenario."""
    if suite == "all":
        return run_all(sc)
    if suite not in _RUNNERS:
        raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    a = analyze(sc) if isinstance(sc, Scenario) else sc
    return _RUNNERS[suite](a)


def run_all(sc):
    a = analyze(sc) if isinstance(sc, Scenario) else sc
    return [_RUNNERS[name](a) for name in sorted(SUITES)]


# ---------------------------------------------------------------------------
# families


def _scenario(ring, relations, field, elements, name, max_degree, seed, annotations):
    return Scenario(tuple(ring), tuple(relations), {k: str(v) for k, v in elements.items()}, field,
                    max_degree, seed, name, annotations)


def _dims_text(xs):
    return " ".join(str(x) for x in xs)


def family(name, ring=("x",), relations=("x^4",), f1="x^2", f2="x^3", tau2=("x", "-1"), g="x",
           b1="1", b2=None, field=QQ, max_degree=8, seed=0):
    """Scenarios of one example family with their closed-form expectations.

    zero_syzygies: tau1 = tau2 = 0, plus the homologous pair
      tau_i = b_i * (-f2, f1); expected dim H_j(G2) = (j+1) nu.
    one_zero: tau1 = 0; expected nu + j (nu - tau), tau = dim B*tau2 in H_1.
    g_multiple: tau1 = g * tau2; expected nu + j (nu - tau2) and, for non-unit g,
      stabilization of L at min{i : g^i in L_1}.  A unit g behaves as one_zero.
    """
    if name not in FAMILIES:
        raise InputError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    pres_sc = _scenario(ring, relations, field, dict.fromkeys(ELEMENT_KEYS, "0") | {"f1": f1, "f2": f2},
                        "", max_degree, seed, {})
    alg = pres_sc.algebra
    F1, F2 = alg(f1), alg(f2)
    J = max_degree
    base = {"f1": F1, "f2": F2}
    tag = f"{name} over {field} [{', '.join(ring)}]/({'; '.join(relations)})"
    if name == "zero_syzygies":
        nu = ideal(alg, [F1, F2]).codim
        exp = {"family": name, "g2": _dims_text((j + 1) * nu for j in range(J + 1))}
        out = [_scenario(ring, relations, field, base | dict.fromkeys(("c11", "c12", "c21", "c22"), alg.zero()),
                         tag, J, seed, dict(exp))]
        B1 = alg(b1)
        B2 = alg(b2) if b2 is not None else alg(ring[0])
        homologous = {"c11": -B1 * F2, "c12": B1 * F1, "c21": -B2 * F2, "c22": B2 * F1}
        out.append(_scenario(ring, relations, field, base | homologous, tag + " (homologous to zero)", J, seed,
                             dict(exp)))
        return out
    T2 = (alg(tau2[0]), alg(tau2[1]))
    if name == "one_zero":
        sc = _scenario(ring, relations, field, base | {"c11": alg.zero(), "c12": alg.zero(), "c21": T2[0], "c22": T2[1]},
                       tag, J, seed, {})
        k = analyze(sc).koszul
        nu, tau = k.nu, k.orbit_dim(vec(*T2))
        sc.annotations.update({"family": name, "tau": str(tau),
                               "g2": _dims_text(nu + j * (nu - tau) for j in range(J + 1))})
        return [sc]
    G = alg(g)
    sc = _scenario(ring, relations, field, base | {"c11": G * T2[0], "c12": G * T2[1], "c21": T2[0], "c22": T2[1]},
                   tag + f", g = {G}", J, seed, {})
    k = analyze(sc).koszul
    nu, tau2_dim = k.nu, k.orbit_dim(vec(*T2))
    ann = {"family": name, "g": str(G), "tau2": str(tau2_dim),
           "g2": _dims_text(nu + j * (nu - tau2_dim) for j in range(J + 1))}
    if G.is_unit():
        ann["unit"] = "1"
    else:
        fr = analyze(sc).flags
        L1 = fr.L(1)
        m = next(i for i in range(alg.mu + 1) if L1.contains((G ** i).coords))
        ann["stab_index"] = str(m)
    sc.annotations.update(ann)
    return [sc]


def check_family(sc):
    """Compare a family scenario with its annotated expectations."""
    a = analyze(sc)
    ann = sc.annotations
    checks = []
    if "g2" in ann:
        exp = [int(x) for x in ann["g2"].split()]
        J = min(len(exp) - 1, a.J)
        checks.append(equal("dim H_j(G2) matches the family formula", exp[:J + 1], a.g2.dims()[:J + 1]))
    if ann.get("family") != "g_multiple":
        return SuiteVerdict("family", checks)
    alg = a.algebra
    fr = a.flags
    G = alg(ann["g"])
    n = fr.length + 2
    if "unit" in ann:
        same = all(fr.L(j) == fr.Lp(j) and fr.F(j) == fr.Fp(j) for j in range(n + 1))
        checks.append(holds("unit multiple: the two flags coincide", same))
        return SuiteVerdict("family", checks)
    L1, Lp1 = fr.L(1), fr.Lp(1)
    checks.append(holds("L_j = (L_1 : g^(j-1))",
                        all(fr.L(j) == colon(L1, (G ** (j - 1)).coords) for j in range(1, n + 1))))
    checks.append(holds("F'_j = <g^j> + L'_1", all(fr.Fp(j) == ideal(alg, [G ** j]) + Lp1 for j in range(1, n + 1))))
    checks.append(equal("stabilization index of L equals min{i : g^i in L_1}", int(ann["stab_index"]), fr.stab["L"]))
    return SuiteVerdict("family", checks, {"stab": fr.stab})


# ---------------------------------------------------------------------------
# corpus


def random_syzygy(alg, f1, f2, rng, coeffs=(-1, 0, 0, 1, 2)):
    """A random element of the syzygy module of (f1, f2) as a pair of elements."""
    f1, f2 = alg(f1), alg(f2)
    basis = kernel_basis(f1.operator().hstack(f2.operator())).vectors
    v = [0] * (2 * alg.mu)
    for b in basis:
        c = rng.choice(coeffs)
        if c:
            v = [x + c * y for x, y in zip(v, b)]
    mu = alg.mu
    return alg.element(v[:mu]), alg.element(v[mu:])


def _random_scenario(name, ring, relations, f1, f2, seed, field=QQ, J=8):
    sc = _scenario(ring, relations, field, dict.fromkeys(ELEMENT_KEYS, "0") | {"f1": f1, "f2": f2}, name, J, seed, {})
    alg = sc.algebra
    rng = random.Random(seed)
    c11, c12 = random_syzygy(alg, f1, f2, rng)
    c21, c22 = random_syzygy(alg, f1, f2, rng)
    sc.elements.update({"c11": str(c11), "c12": str(c12), "c21": str(c21), "c22": str(c22)})
    return sc


def _fixed(name, ring, relations, els, field=QQ, J=8, seed=0):
    keys = ELEMENT_KEYS
    return Scenario(tuple(ring), tuple(relations), dict(zip(keys, els)), field, J, seed, name)


def corpus(include_random=True):
    """The built-in scenario corpus, covering every algebra the acceptance suite uses."""
    F = GF(32749)
    out = [
        _fixed("S0", ["x"], ["x^4"], ["x^2", "x^3", "0", "0", "0", "0"]),
        _fixed("S1", ["x"], ["x^4"], ["x^2", "x^3", "x^2", "0", "x", "-1"]),
        _fixed("x4-ones", ["x"], ["x^4"], ["x^2", "x^3", "0", "0", "x^3", "0"]),
        _fixed("x2y2", ["x", "y"], ["x^2", "y^2"], ["x", "y", "x", "0", "0", "y"]),
        _fixed("x3y2", ["x", "y"], ["x^3", "y^2"], ["x^2", "x*y", "y", "-x", "x*y", "0"]),
        _fixed("xy-quadric", ["x", "y"], ["x*y", "x^2-y^2"], ["x", "y", "y", "0", "x", "-y"]),
        _fixed("x3y3", ["x", "y"], ["x^3", "y^3"], ["x^2", "y^2", "0", "y", "x", "0"]),
        _fixed("x2y2z2", ["x", "y", "z"], ["x^2", "y^2", "z^2"], ["x*y", "z", "x*z", "0", "x", "0"]),
        _fixed("Fp-x2y3", ["x", "y"], ["x^2", "y^3"], ["x", "y^2", "y^2", "-x", "x*y", "0"], field=F),
        _fixed("Fp-cusp", ["x", "y"], ["x*y", "x^2+y^3"], ["x", "y", "y", "0", "x", "y^2"], field=F),
        _fixed("degenerate", ["x", "y"], ["x^2", "y^2"], ["0", "0", "0", "0", "0", "0"]),
    ]
    if include_random:
        out += [
            _random_scenario("random-x2y2z2", ["x", "y", "z"], ["x^2", "y^2", "z^2"], "x*y", "z", 7),
            _random_scenario("random-x3y3", ["x", "y"], ["x^3", "y^3"], "x*y", "x^2", 3),
            _random_scenario("random-x3y2", ["x", "y"], ["x^3", "y^2"], "x^2", "x*y", 5),
            _random_scenario("random-Fp-cusp", ["x", "y"], ["x*y", "x^2+y^3"], "x^2", "x+y", 11, field=F),
            _random_scenario("random-x2y2z2-deep", ["x", "y", "z"], ["x^2", "y^2", "z^2"], "x*y", "z", 0),
            _random_scenario("random-x4y4", ["x", "y"], ["x^4", "y^4"], "x^3", "x*y^2", 4),
        ]
    gm = family("g_multiple")[0]
    gm.name = "gmult-x4"
    deep = family("g_multiple", relations=("x^8",), f1="x^4", f2="x^6", tau2=("x^2", "-1"))[0]
    deep.name = "gmult-x8"
    out += [gm, deep]
    return out
