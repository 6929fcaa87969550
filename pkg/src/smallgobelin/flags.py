"""The flags of colon ideals L_j, F_j (and primed versions) built from two
syzygies, their stabilization, and the flag-level identities."""

import random
from dataclasses import dataclass

from .algebra import Submodule, ideal
from .checks import equal, holds
from .errors import NotStabilized
from .exactlin import Subspace
from .koszul import colon_in_h1

__all__ = [
    "FlagReport",
    "colon_step",
    "iterate_flag",
    "compute_flags",
    "random_ideal",
    "fixed_point_extremality",
    "flag_gap_monotonicity",
    "phi_psi_dims",
    "flag_structure_checks",
    "cycle_component_checks",
]


def colon_step(s, I, primed=False):
    """``(I*tau2 : tau1)`` in H_1, or ``(I*tau1 : tau2)`` when primed."""
    k = s.koszul
    if primed:
        return colon_in_h1(k, I, s.tau1, s.tau2)
    return colon_in_h1(k, I, s.tau2, s.tau1)


def iterate_flag(s, start, primed, max_steps):
    """Iterate the colon map from ``start`` until two consecutive terms agree.

    Returns (terms X_0..X_s, s) where s is the first index with X_s = X_{s+1}.
    """
    terms = [start]
    for _ in range(max_steps + 1):
        nxt = colon_step(s, terms[-1], primed)
        if nxt == terms[-1]:
            return terms, len(terms) - 1
        terms.append(nxt)
    raise NotStabilized(f"flag did not stabilize within {max_steps} steps")


@dataclass
class FlagReport:
    L_terms: list
    F_terms: list
    Lp_terms: list
    Fp_terms: list
    stab: dict

    @staticmethod
    def _get(terms, j):
        return terms[min(j, len(terms) - 1)]

    def L(self, j):
        return self._get(self.L_terms, j)

    def F(self, j):
        return self._get(self.F_terms, j)

    def Lp(self, j):
        return self._get(self.Lp_terms, j)

    def Fp(self, j):
        return self._get(self.Fp_terms, j)

    @property
    def L_inf(self):
        return self.L_terms[-1]

    @property
    def F_inf(self):
        return self.F_terms[-1]

    @property
    def Lp_inf(self):
        return self.Lp_terms[-1]

    @property
    def Fp_inf(self):
        return self.Fp_terms[-1]

    def dims(self, upto=None):
        n = upto if upto is not None else max(len(self.L_terms), len(self.F_terms), len(self.Lp_terms), len(self.Fp_terms))
        return {
            "L": [self.L(j).dim for j in range(n + 1)],
            "F": [self.F(j).dim for j in range(n + 1)],
            "Lp": [self.Lp(j).dim for j in range(n + 1)],
            "Fp": [self.Fp(j).dim for j in range(n + 1)],
        }

    @property
    def length(self):
        return max(self.stab.values())


def compute_flags(s, max_steps=None):
    """Both flags and their primed versions; ``max_steps`` defaults to nu + 2."""
    alg = s.algebra
    if max_steps is None:
        max_steps = s.koszul.nu + 2
    zero = Submodule.zero(alg)
    full = Submodule.full(alg)
    L, sL = iterate_flag(s, zero, False, max_steps)
    F, sF = iterate_flag(s, full, False, max_steps)
    Lp, sLp = iterate_flag(s, zero, True, max_steps)
    Fp, sFp = iterate_flag(s, full, True, max_steps)
    return FlagReport(L, F, Lp, Fp, {"L": sL, "F": sF, "Lp": sLp, "Fp": sFp})


# ---------------------------------------------------------------------------


def random_ideal(alg, rng, max_gens=3):
    """An ideal generated by 1..max_gens random elements with coefficients in {-1, 0, 1}."""
    n = rng.randint(1, max_gens)
    gens = [alg.element([rng.choice((-1, 0, 1)) for _ in range(alg.mu)]) for _ in range(n)]
    return ideal(alg, gens)


def _fixed_point_from(s, start, upward):
    """A fixed point of the (monotone) colon map reached from ``start``.

    Upward: climb X -> X + T(X) until stable (then T(X) <= X) and descend
    by T.  Downward: X -> X & T(X), then climb by T.
    """
    x = start
    while True:
        t = colon_step(s, x)
        y = x + t if upward else x & t
        if y == x:
            break
        x = y
    while True:
        t = colon_step(s, x)
        if t == x:
            return x
        x = t


def fixed_point_extremality(s, fr=None, trials=10, seed=0):
    fr = fr or compute_flags(s)
    rng = random.Random(seed)
    checks = [
        holds("L_inf is a fixed point", colon_step(s, fr.L_inf) == fr.L_inf),
        holds("F_inf is a fixed point", colon_step(s, fr.F_inf) == fr.F_inf),
        holds("L'_inf is a fixed point", colon_step(s, fr.Lp_inf, True) == fr.Lp_inf),
        holds("F'_inf is a fixed point", colon_step(s, fr.Fp_inf, True) == fr.Fp_inf),
    ]
    ok_fixed = True
    ok_sandwich = True
    for t in range(trials):
        I = _fixed_point_from(s, random_ideal(s.algebra, rng), upward=(t % 2 == 0))
        ok_fixed &= colon_step(s, I) == I
        ok_sandwich &= fr.L_inf <= I <= fr.F_inf
    checks.append(holds(f"{trials} random fixed points are fixed", ok_fixed))
    checks.append(holds(f"{trials} random fixed points lie between L_inf and F_inf", ok_sandwich))
    return checks


def flag_gap_monotonicity(fr, upto=None):
    n = upto if upto is not None else fr.length + 2
    checks = []
    for name, get, descending in (("F", fr.F, True), ("L", fr.L, False), ("F'", fr.Fp, True), ("L'", fr.Lp, False)):
        gaps = [abs(get(j).dim - get(j + 1).dim) for j in range(n + 1)]
        ok = all(a >= b for a, b in zip(gaps, gaps[1:]))
        checks.append(holds(f"{name} gaps weakly decrease", ok, gaps))
    return checks


def phi_psi_dims(s, fr, upto=None):
    n = upto if upto is not None else fr.length + 2
    checks = []
    left = [fr.F(j).dim - fr.L(j).dim for j in range(n + 1)]
    right = [fr.Fp(j).dim - fr.Lp(j).dim for j in range(n + 1)]
    checks.append(equal("dim F_j/L_j = dim F'_j/L'_j", left, right))
    a = [(fr.L(1) & fr.Lp(j)).dim - (fr.L(1) & fr.Lp(j - 1)).dim for j in range(1, n + 1)]
    b = [(fr.L(j) & fr.Lp(1)).dim - (fr.L(j - 1) & fr.Lp(1)).dim for j in range(1, n + 1)]
    checks.append(equal("dim (L_1&L'_j)/(L_1&L'_{j-1}) = dim (L_j&L'_1)/(L_{j-1}&L'_1)", a, b))
    return checks


def flag_structure_checks(s, fr, upto=None):
    """Nesting, stabilization length, ideal property and the tau1/tau2 swap."""
    n = upto if upto is not None else fr.length + 2
    k = s.koszul
    f_ideal = k.ideal_f
    checks = []
    chain_ok = True
    for j in range(n):
        chain_ok &= fr.L(j) <= fr.L(j + 1) and fr.F(j + 1) <= fr.F(j)
        chain_ok &= fr.Lp(j) <= fr.Lp(j + 1) and fr.Fp(j + 1) <= fr.Fp(j)
    chain_ok &= fr.L_inf <= fr.F_inf and fr.Lp_inf <= fr.Fp_inf
    checks.append(holds("flags are nested", chain_ok))
    checks.append(holds("flag length at most nu", fr.length <= k.nu, fr.stab))
    contain = all(f_ideal <= X(j) for X in (fr.L, fr.F, fr.Lp, fr.Fp) for j in range(1, n + 1))
    checks.append(holds("every flag member with j >= 1 contains (f1, f2)", contain))
    closed = all(X(j).is_closed() for X in (fr.L, fr.F, fr.Lp, fr.Fp) for j in range(n + 1))
    checks.append(holds("every flag member is an ideal", closed))
    sw = compute_flags(s.swapped())
    same = all(sw.L(j) == fr.Lp(j) and sw.F(j) == fr.Fp(j) and sw.Lp(j) == fr.L(j) and sw.Fp(j) == fr.F(j)
               for j in range(n + 1))
    checks.append(holds("exchanging tau1 and tau2 swaps the primed and unprimed flags", same))
    return checks


def _slot_projection(alg, space, slot):
    mu = alg.mu
    return Subspace(alg.field, mu, [v[slot * mu:(slot + 1) * mu] for v in space.vectors])


def cycle_component_checks(s, fr, j, g2, g2d):
    """Components of degree-2j cycles of G2 and cocycles of its dual lie in the flags.

    Cycles (a_1..a_j, b_1..b_{j+1}): b_k in F'_{k-1} & F_{j-k+1}, and the
    b_1 (resp. b_{j+1}) components fill F_j (resp. F'_j).  Cocycles: a_i in
    L_i & L'_{j+1-i}, with a_1 filling L_1 & L'_j and a_j filling L_j & L'_1.
    """
    alg = s.algebra
    z = g2.homology(2 * j).cycles
    checks = []
    ok = True
    for kk in range(1, j + 2):
        comp = _slot_projection(alg, z, j + kk - 1)
        ok &= comp <= (fr.Fp(kk - 1) & fr.F(j - kk + 1)).space
    checks.append(holds(f"degree {2 * j} cycle components b_k lie in F'_(k-1) & F_(j-k+1)", ok))
    checks.append(holds(f"b_1 components of degree {2 * j} cycles fill F_{j}",
                        _slot_projection(alg, z, j) == fr.F(j).space))
    checks.append(holds(f"b_(j+1) components of degree {2 * j} cycles fill F'_{j}",
                        _slot_projection(alg, z, 2 * j) == fr.Fp(j).space))
    zc = g2d.homology(2 * j).cycles
    ok = True
    for i in range(1, j + 1):
        comp = _slot_projection(alg, zc, i - 1)
        ok &= comp <= (fr.L(i) & fr.Lp(j + 1 - i)).space
    checks.append(holds(f"degree {2 * j} cocycle components a_i lie in L_i & L'_(j+1-i)", ok))
    checks.append(holds(f"a_1 components of degree {2 * j} cocycles fill L_1 & L'_{j}",
                        _slot_projection(alg, zc, 0) == (fr.L(1) & fr.Lp(j)).space))
    checks.append(holds(f"a_j components of degree {2 * j} cocycles fill L_{j} & L'_1",
                        _slot_projection(alg, zc, j - 1) == (fr.L(j) & fr.Lp(1)).space))
    return checks
