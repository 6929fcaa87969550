"""Total complexes of the small Gobelins G1 and G2, their duals, the long
exact sequence relating them, and closed forms for the homology of G1.

Degree k of tot(G2) is B^(k+1), ordered as (a_1..a_m, b_1..b_n) with
m = (k+1)//2 entries of a-type followed by the b-type entries.  Degree
k >= 1 of tot(G1) is B^2 = (a, b).
"""

from dataclasses import dataclass, field as dc_field

from .algebra import Submodule, annihilator, ideal, submodule_generated, vec
from .checks import Check, equal, holds
from .errors import InputError, NotChainCompatible
from .exactlin import Matrix, Subspace, image, kernel_basis, rank
from .homology import BMatrix, ScalarComplex, Subquotient, check_short_exact, exact_at, induced_map
from .koszul import colon_in_h1, colon_modulo, h1_perp

__all__ = [
    "GobelinComplex",
    "LesReport",
    "a_count",
    "phi",
    "psi",
    "g1_differential",
    "g2_differential",
    "build_g1",
    "build_g2",
    "build_g1_dual",
    "build_g2_dual",
    "build",
    "iota",
    "sigma_star",
    "les_maps",
    "g1_closed_forms_check",
    "g1_even_sequence_check",
    "g1_dual_even_sequence_check",
    "dual_image_check",
    "connecting_formula",
]


def a_count(k):
    """Number of a-type entries in degree k of tot(G2)."""
    return (k + 1) // 2


def phi(s, j):
    """The (2j-1) x 2j differential leaving degree 2j-1."""
    alg = s.algebra
    z = alg.zero()
    m = [[z] * (2 * j) for _ in range(2 * j - 1)]
    for i in range(j - 1):
        m[i][i] = -s.c12
        m[i][i + 1] = -s.c22
        m[i][j + i] = s.c11
        m[i][j + i + 1] = s.c21
    for i in range(j):
        m[j - 1 + i][i] = s.f1
        m[j - 1 + i][j + i] = s.f2
    return BMatrix(alg, m, 2 * j - 1, 2 * j)


def psi(s, j):
    """The 2j x (2j+1) differential leaving degree 2j."""
    alg = s.algebra
    z = alg.zero()
    m = [[z] * (2 * j + 1) for _ in range(2 * j)]
    for i in range(j):
        m[i][i] = -s.f2
        m[i][j + i] = s.c11
        m[i][j + i + 1] = s.c21
        m[j + i][i] = s.f1
        m[j + i][j + i] = s.c12
        m[j + i][j + i + 1] = s.c22
    return BMatrix(alg, m, 2 * j, 2 * j + 1)


def g2_differential(s, k):
    """d_k : B^(k+1) -> B^k of tot(G2), k >= 1."""
    if k < 1:
        raise InputError("differentials start in degree 1")
    return phi(s, (k + 1) // 2) if k % 2 else psi(s, k // 2)


def g1_differential(s, k):
    """d_k of tot(G1): (f1 f2), then C_psi and C_phi alternating."""
    alg = s.algebra
    if k < 1:
        raise InputError("differentials start in degree 1")
    if k == 1:
        return BMatrix(alg, [[s.f1, s.f2]])
    if k % 2 == 0:
        return BMatrix(alg, [[-s.f2, s.c11], [s.f1, s.c12]])
    return BMatrix(alg, [[-s.c12, s.c11], [s.f1, s.f2]])


def _rank_g1(k):
    return 1 if k == 0 else 2


def _rank_g2(k):
    return k + 1


_KINDS = {
    "G1": (_rank_g1, g1_differential, False),
    "G2": (_rank_g2, g2_differential, False),
    "G1dual": (_rank_g1, g1_differential, True),
    "G2dual": (_rank_g2, g2_differential, True),
}


@dataclass
class GobelinComplex:
    which: str
    max_degree: int
    complex: ScalarComplex
    ranks: tuple
    bmatrices: dict
    _homology: dict = dc_field(default_factory=dict, repr=False)

    def homology(self, j):
        """The (co)homology subquotient in degree j (0 <= j <= max_degree)."""
        if not 0 <= j <= self.max_degree:
            raise InputError(f"degree {j} outside 0..{self.max_degree}")
        if j not in self._homology:
            self._homology[j] = self.complex.homology_at(j)
        return self._homology[j]

    def dims(self):
        return [self.homology(j).dim for j in range(self.max_degree + 1)]

    @property
    def is_dual(self):
        return self.which.endswith("dual")


def build(s, which, J=8):
    """Build a total complex through degree J+1 so degrees 0..J have full homology."""
    if which not in _KINDS:
        raise InputError(f"unknown complex {which!r}")
    if J < 0:
        raise InputError("max degree must be nonnegative")
    rank_of, diff, dual = _KINDS[which]
    mu = s.algebra.mu
    ranks = tuple(rank_of(k) for k in range(J + 2))
    dims = tuple(r * mu for r in ranks)
    bmats = {}
    scalar = {}
    for k in range(1, J + 2):
        m = diff(s, k)
        if dual:
            m = m.transpose()
            bmats[k - 1] = m
            scalar[k - 1] = m.expand()
        else:
            bmats[k] = m
            scalar[k] = m.expand()
    cx = ScalarComplex(s.algebra.field, dims, scalar, cochain=dual, name=which)
    return GobelinComplex(which, J, cx, ranks, bmats)


def build_g1(s, J=8):
    return build(s, "G1", J)


def build_g2(s, J=8):
    return build(s, "G2", J)


def build_g1_dual(s, J=8):
    return build(s, "G1dual", J)


def build_g2_dual(s, J=8):
    return build(s, "G2dual", J)


# ---------------------------------------------------------------------------
# Chain maps between the total complexes.


def _placement(field, mu, n_src, n_dst, slots):
    """Scalar matrix sending block i of B^n_src to block slots[i] of B^n_dst."""
    rows = [[0] * (n_src * mu) for _ in range(n_dst * mu)]
    for i, t in enumerate(slots):
        if t is None:
            continue
        for c in range(mu):
            rows[t * mu + c][i * mu + c] = 1
    return Matrix(field, rows)


def _g1_slots(k):
    return [0] if k == 0 else [0, a_count(k)]


def iota(s, k):
    """G1_k -> G2_k: a to slot 0, b to the first b-slot."""
    alg = s.algebra
    return _placement(alg.field, alg.mu, _rank_g1(k), _rank_g2(k), _g1_slots(k))


def projection(s, k):
    """G2_k -> G1_k: keep the slots used by iota (the dual of iota)."""
    return iota(s, k).transpose()


def sigma_star(s, k):
    """G2_k -> G2_{k-2}: drop slot 0 and the first b-slot."""
    alg = s.algebra
    mu = alg.mu
    if k < 2:
        return Matrix.zeros(alg.field, 0, _rank_g2(k) * mu)
    drop = set(_g1_slots(k))
    keep = [i for i in range(_rank_g2(k)) if i not in drop]
    return _placement(alg.field, mu, _rank_g2(k - 2), _rank_g2(k), keep).transpose()


def section(s, k):
    """G2_{k-2} -> G2_k inserting zeros at the dropped slots (sigma* o section = id)."""
    return sigma_star(s, k).transpose()


def connecting_chain_map(s, k):
    """Chain-level connecting map G2_{k-1} -> G1_k: project(d_{k+1}(section(x)))."""
    d = g2_differential(s, k + 1).expand()
    return projection(s, k) @ d @ section(s, k + 1)


def connecting_formula(s, k):
    """The explicit formula for the connecting map on G2_{k-1} -> G1_k.

    Odd k: alpha -> b_1 (c21, c22).  Even k: alpha -> (-c22 a_1 + c21 b_1, 0).
    """
    alg = s.algebra
    src = _rank_g2(k - 1)
    z = alg.zero()
    grid = [[z] * src for _ in range(2)]
    b1 = a_count(k - 1)
    if k % 2:
        grid[0][b1] = s.c21
        grid[1][b1] = s.c22
    else:
        grid[0][0] = -s.c22
        grid[0][b1] = s.c21
    return BMatrix(alg, grid, 2, src).expand()


@dataclass
class LesReport:
    max_degree: int
    dims_g1: list
    dims_g2: list
    ranks: dict
    nodes: list
    checks: list

    @property
    def exact(self):
        return all(ok for _, ok in self.nodes)

    @property
    def passed(self):
        return self.exact and all(c.passed for c in self.checks)


def les_maps(s, J=6, g1=None, g2=None):
    """Build iota, sigma*, and the connecting maps on homology and check exactness.

    Nodes are labelled ('G1', k), ('G2', k) and ('G2[-2]', k), the last
    standing for H_{k-2}(G2) as the target of sigma*_k.
    """
    g1 = g1 if g1 is not None and g1.max_degree >= J else build_g1(s, J)
    g2 = g2 if g2 is not None and g2.max_degree >= J else build_g2(s, J)
    f = s.algebra.field
    H1 = [g1.homology(k) for k in range(J + 1)]
    H2 = [g2.homology(k) for k in range(J + 1)]
    checks = []

    # chain map identities at the matrix level
    d1 = {k: g1.complex.d[k] for k in range(1, J + 2)}
    d2 = {k: g2.complex.d[k] for k in range(1, J + 2)}
    for k in range(1, J + 2):
        ok_i = (d2[k] @ iota(s, k)) == (iota(s, k - 1) @ d1[k])
        checks.append(holds(f"iota is a chain map in degree {k}", ok_i))
        if k >= 3:
            ok_s = (sigma_star(s, k - 1) @ d2[k]) == (d2[k - 2] @ sigma_star(s, k))
            checks.append(holds(f"sigma* is a chain map in degree {k}", ok_s))
        if k >= 2:
            checks.append(holds(f"sigma* o iota = 0 in degree {k}", (sigma_star(s, k) @ iota(s, k)).is_zero()))
    for k in range(1, J + 1):
        same = connecting_chain_map(s, k) == connecting_formula(s, k)
        checks.append(holds(f"connecting map {k} matches the explicit formula", same))

    I = {}
    S = {}
    D = {}
    for k in range(J + 1):
        I[k] = induced_map(H1[k], H2[k], iota(s, k))
        if k >= 2:
            S[k] = induced_map(H2[k], H2[k - 2], sigma_star(s, k))
        else:
            S[k] = Matrix.zeros(f, 0, H2[k].dim)
        if k >= 1:
            D[k] = _induced_connecting(s, k, H2[k - 1], H1[k], g2)
        else:
            D[k] = Matrix.zeros(f, H1[0].dim, 0)

    nodes = []
    for k in range(J + 1):
        nodes.append((("G1", k), exact_at(D[k], I[k])))
        nodes.append((("G2", k), exact_at(I[k], S[k])))
        if k >= 2:
            nodes.append((("G2[-2]", k), exact_at(S[k], D[k - 1])))
    ranks = {"iota": [rank(I[k]) for k in range(J + 1)],
             "sigma": [rank(S[k]) for k in range(J + 1)],
             "boundary": [rank(D[k]) for k in range(J + 1)]}
    return LesReport(J, [h.dim for h in H1], [h.dim for h in H2], ranks, nodes, checks)


def _induced_connecting(s, k, src, dst, g2):
    """Connecting map H_{k-1}(G2) -> H_k(G1) on coset coordinates."""
    m = connecting_chain_map(s, k)
    cols = []
    for b in src.coset_basis:
        v = m.apply(b)
        # the lifted boundary must come from G1 and be a cycle there
        cols.append(dst.class_coords(v))
    # well defined: boundaries of G2 go to boundaries of G1
    for w in src.boundaries.vectors:
        if not dst.boundaries.contains(m.apply(w)):
            raise NotChainCompatible(f"connecting map {k} is not well defined")
    if not cols:
        return Matrix.zeros(src.field, dst.dim, 0)
    return Matrix.from_columns(src.field, cols, dst.dim)


# ---------------------------------------------------------------------------
# Closed forms for the homology of G1 and its dual.


def _perp(s, gens):
    """The .L-orthogonal in B^2 of the submodule generated by ``gens``."""
    from .algebra import orthogonal

    return orthogonal(submodule_generated(s.algebra, 2, gens), s.trace).space


def _mod(s, gens):
    return submodule_generated(s.algebra, 2, gens).space


def g1_closed_form(s, j):
    """Cycles and boundaries of H_j(G1) from the closed formulas."""
    alg = s.algebra
    f1, f2, c11, c12 = s.f1, s.f2, s.c11, s.c12
    if j == 0:
        return Subquotient(Subspace.full(alg.field, alg.mu), ideal(alg, [f1, f2]).space, name="H0(G1) closed")
    k = s.koszul
    if j == 1:
        return Subquotient(k.H1.cycles, k.H1.boundaries + _mod(s, [s.tau1]), name="H1(G1) closed")
    if j % 2 == 0:
        z = _perp(s, [vec(-f2, c11), vec(f1, c12)])
        w = _mod(s, [vec(-c12, f1), vec(c11, f2)])
        return Subquotient(z, w, name=f"H{j}(G1) closed")
    # the H_1-orthogonal of (-c12, c11), read inside the cycles of H_1
    z = k.H1.cycles & _perp(s, [vec(-c12, c11)])
    w = k.H1.boundaries + _mod(s, [s.tau1])
    return Subquotient(z, w, name=f"H{j}(G1) closed")


def g1_dual_closed_form(s, j):
    alg = s.algebra
    f1, f2, c11, c12 = s.f1, s.f2, s.c11, s.c12
    k = s.koszul
    if j == 0:
        return Subquotient(annihilator(k.ideal_f).space, Subspace.zero(alg.field, alg.mu), name="H^0(G1*) closed")
    if j % 2 == 0:
        z = _perp(s, [vec(-c12, f1), vec(c11, f2)])
        w = _mod(s, [vec(-f2, c11), vec(f1, c12)])
        return Subquotient(z, w, name=f"H^{j}(G1*) closed")
    z = k.Hc[1].cycles & _perp(s, [s.tau1])
    w = k.Hc[1].boundaries
    if j > 1:
        w = w + _mod(s, [vec(-c12, c11)])
    return Subquotient(z, w, name=f"H^{j}(G1*) closed")


def g1_even_sequence_check(s, j, g1):
    """0 -> Ann(f1,f2)/((-c12,c11).Z1) -> H_2j(G1) -> (0:tau1)_H1/(f1,f2) -> 0."""
    alg = s.algebra
    k = s.koszul
    A = annihilator(k.ideal_f).space
    # (-c12, c11) . alpha for alpha in the cycles of H_1
    dot = BMatrix(alg, [[-s.c12, s.c11]]).expand()
    left = Subquotient(A, image(dot, k.H1.cycles), name="Ann(f1,f2)/(...)")
    zero = Submodule.zero(alg)
    right_z = colon_in_h1(k, zero, s.tau2, s.tau1).space
    right = Subquotient(right_z, k.ideal_f.space, name="(0:tau1)/(f1,f2)")
    from .koszul import _block_maps

    first, second, pr1, pr2 = _block_maps(alg)
    h = g1.homology(2 * j)
    rep = check_short_exact(induced_map(left, h, first), induced_map(h, right, pr2))
    return [
        holds(f"H_{2 * j}(G1) sequence: injective", rep.injective),
        holds(f"H_{2 * j}(G1) sequence: surjective", rep.surjective),
        holds(f"H_{2 * j}(G1) sequence: exact in the middle", rep.exact_middle),
    ]


def g1_dual_even_sequence_check(s, j, g1d):
    """0 -> Ann(f1,f2)/((c11,c12).Z^1) -> H^2j(G1*) -> (0:kappa tau1)_H^1/(f1,f2) -> 0."""
    alg = s.algebra
    k = s.koszul
    A = annihilator(k.ideal_f).space
    dot = BMatrix(alg, [[s.c11, s.c12]]).expand()
    left = Subquotient(A, image(dot, k.Hc[1].cycles), name="Ann(f1,f2)/(...)")
    target = k.Hc[1].boundaries
    right_z = colon_modulo(alg, target, vec(-s.c12, s.c11)).space
    right = Subquotient(right_z, k.ideal_f.space, name="(0:kappa tau1)/(f1,f2)")
    from .koszul import _block_maps

    first, second, pr1, pr2 = _block_maps(alg)
    h = g1d.homology(2 * j)
    rep = check_short_exact(induced_map(left, h, second), induced_map(h, right, pr1))
    return [
        holds(f"H^{2 * j}(G1*) sequence: injective", rep.injective),
        holds(f"H^{2 * j}(G1*) sequence: surjective", rep.surjective),
        holds(f"H^{2 * j}(G1*) sequence: exact in the middle", rep.exact_middle),
    ]


def g1_closed_forms_check(s, J=5, g1=None, g1d=None):
    """Compare closed forms with computed homology of G1 and its dual, as subspaces."""
    g1 = g1 if g1 is not None and g1.max_degree >= J else build_g1(s, J)
    g1d = g1d if g1d is not None and g1d.max_degree >= J else build_g1_dual(s, J)
    checks = []
    for j in range(J + 1):
        h = g1.homology(j)
        c = g1_closed_form(s, j)
        checks.append(holds(f"H_{j}(G1) equals its closed form", h.same_as(c), f"dim {h.dim} vs {c.dim}"))
        hd = g1d.homology(j)
        cd = g1_dual_closed_form(s, j)
        checks.append(holds(f"H^{j}(G1*) equals its closed form", hd.same_as(cd), f"dim {hd.dim} vs {cd.dim}"))
    # the odd closed form via the induced form on H_1
    k = s.koszul
    perp = h1_perp(k, s.tau1)
    checks.append(holds("H_1-orthogonal of tau1 under the induced form matches <(f1,f2),(-c12,c11)>^perp",
                        perp == (k.H1.cycles & _perp(s, [vec(-s.c12, s.c11)]))))
    for j in range(1, (J - 1) // 2 + 1):
        checks.append(equal(f"dim H_{2 * j}(G1) = dim H_{2 * j + 1}(G1)", g1.homology(2 * j).dim,
                            g1.homology(2 * j + 1).dim))
    for j in range(1, J // 2 + 1):
        checks.extend(g1_even_sequence_check(s, j, g1))
        checks.extend(g1_dual_even_sequence_check(s, j, g1d))
    return checks


def dual_image_check(s, j, fr, g2d=None):
    """Image of H^2j(G2*) -> H^2j(G1*) against pi_1^{-1} of two candidate ideals.

    Returns (literal, alternative): whether the image equals the classes
    with first entry in L_j cap L'_1, and in L_1 cap L'_j.
    """
    alg = s.algebra
    mu = alg.mu
    g2d = g2d if g2d is not None and g2d.max_degree >= 2 * j else build_g2_dual(s, 2 * j)
    g1d = build_g1_dual(s, 2 * j)
    h2 = g2d.homology(2 * j)
    h1 = g1d.homology(2 * j)
    # i*_2j is the dual of iota: keep (a_1, b_1)
    im = h1.classes_of([projection(s, 2 * j).apply(v) for v in h2.cycles.vectors])

    def pre(ideal_a):
        sel = ideal_a.space.vectors
        full = Subspace.full(alg.field, mu).vectors
        pad = [tuple(v) + (0,) * mu for v in sel] + [(0,) * mu + tuple(v) for v in full]
        cand = h1.cycles & Subspace(alg.field, 2 * mu, pad)
        return h1.classes_of(cand.vectors)

    literal = pre(fr.L(j) & fr.Lp(1))
    alternative = pre(fr.L(1) & fr.Lp(j))
    return im == literal, im == alternative
