"""The Koszul complex of two elements, its dual, the kappa isomorphism,
induced forms on H_1, and colon ideals taken inside H_1."""

from functools import cached_property

from .algebra import (
    AlgebraElement,
    Submodule,
    annihilator,
    choose_trace,
    colon,
    ideal,
    orthogonal,
    scalar_mul,
    socle_and_checks,
    submodule_generated,
    vec,
)
from .checks import equal, holds
from .errors import InputError, NotACycle, SyzygyViolation, UnitElement
from .exactlin import Matrix, Subspace, kernel_basis, preimage, rank
from .homology import BMatrix, ScalarComplex, Subquotient, check_short_exact, induced_map

__all__ = [
    "SyzygyPair",
    "KoszulData",
    "koszul",
    "h1_action",
    "colon_in_h1",
    "colon_modulo",
    "kappa_matrix",
    "kappa_iso",
    "gram_h1",
    "gram_h1_dual",
    "h1_perp",
    "h1_splitting_check",
    "dimension_table",
]


class KoszulData:
    """Koszul complex 0 <- B <- B^2 <- B <- 0 of (f1, f2) and its dual."""

    def __init__(self, algebra, f1, f2, trace=None):
        self.algebra = alg = algebra
        self.f1 = alg(f1)
        self.f2 = alg(f2)
        self._trace = trace
        f = alg.field
        mu = alg.mu
        d1 = BMatrix(alg, [[self.f1, self.f2]]).expand()
        d2 = BMatrix(alg, [[-self.f2], [self.f1]]).expand()
        self.complex = ScalarComplex(f, (mu, 2 * mu, mu), {1: d1, 2: d2}, name="K")
        e0 = BMatrix(alg, [[self.f1], [self.f2]]).expand()
        e1 = BMatrix(alg, [[-self.f2, self.f1]]).expand()
        self.dual = ScalarComplex(f, (mu, 2 * mu, mu), {0: e0, 1: e1}, cochain=True, name="K*")
        self.H = tuple(self.complex.homology_at(i) for i in range(3))
        self.Hc = tuple(self.dual.homology_at(i) for i in range(3))

    @property
    def trace(self):
        if self._trace is None:
            self._trace = choose_trace(self.algebra)
        return self._trace

    @property
    def H0(self):
        return self.H[0]

    @property
    def H1(self):
        return self.H[1]

    @property
    def H2(self):
        return self.H[2]

    @cached_property
    def ideal_f(self):
        return ideal(self.algebra, [self.f1, self.f2])

    @property
    def nu(self):
        return self.ideal_f.codim

    @cached_property
    def nu1(self):
        return ideal(self.algebra, [self.f1]).codim

    @cached_property
    def nu2(self):
        return ideal(self.algebra, [self.f2]).codim

    @property
    def boundary_generator(self):
        """``(-f2, f1)``, generating the boundaries of H_1."""
        return vec(-self.f2, self.f1)

    @property
    def cycle_generator(self):
        """``(f1, f2)``, whose orthogonal is the module of cycles of H_1."""
        return vec(self.f1, self.f2)

    def is_cycle(self, v):
        return self.H1.is_cycle(v)

    def orbit_dim(self, tau):
        """Dimension of the submodule B*[tau] of H_1."""
        alg = self.algebra
        w = self.H1.boundaries
        m = submodule_generated(alg, 2, [tau]).space
        return (w + m).dim - w.dim


def koszul(algebra, f1, f2, trace=None):
    f1 = algebra(f1)
    f2 = algebra(f2)
    for name, x in (("f1", f1), ("f2", f2)):
        if x.is_unit():
            raise UnitElement(f"{name} = {x} is a unit")
    return KoszulData(algebra, f1, f2, trace)


class SyzygyPair:
    """``f1, f2`` in B with syzygies ``tau1 = (c11, c12)`` and ``tau2 = (c21, c22)``."""

    def __init__(self, algebra, f1, f2, c11, c12, c21, c22, require_gorenstein=True):
        alg = algebra
        self.algebra = alg
        self.f1, self.f2 = alg(f1), alg(f2)
        self.c11, self.c12, self.c21, self.c22 = alg(c11), alg(c12), alg(c21), alg(c22)
        for row, (a, b) in ((1, (self.c11, self.c12)), (2, (self.c21, self.c22))):
            if not (a * self.f1 + b * self.f2).is_zero():
                raise SyzygyViolation(row)
        for name, x in (("f1", self.f1), ("f2", self.f2)):
            if x.is_unit():
                raise UnitElement(f"{name} = {x} is a unit")
        self.require_gorenstein = require_gorenstein
        if require_gorenstein:
            self.trace  # raises NotGorenstein / NotLocal early

    @classmethod
    def from_vectors(cls, algebra, f1, f2, tau1, tau2, **kw):
        mu = algebra.mu
        return cls(algebra, f1, f2, tau1[:mu], tau1[mu:], tau2[:mu], tau2[mu:], **kw)

    def swapped(self):
        """The same data with tau1 and tau2 exchanged."""
        s = SyzygyPair.__new__(SyzygyPair)
        s.__dict__.update({k: v for k, v in self.__dict__.items() if k in ("algebra", "f1", "f2", "require_gorenstein")})
        s.c11, s.c12, s.c21, s.c22 = self.c21, self.c22, self.c11, self.c12
        for k in ("socle_report", "trace", "koszul"):
            if k in self.__dict__:
                s.__dict__[k] = self.__dict__[k]
        return s

    @cached_property
    def socle_report(self):
        return socle_and_checks(self.algebra)

    @cached_property
    def trace(self):
        return choose_trace(self.algebra, self.socle_report)

    @cached_property
    def koszul(self):
        return KoszulData(self.algebra, self.f1, self.f2, self.trace if self.require_gorenstein else None)

    @property
    def tau1(self):
        return vec(self.c11, self.c12)

    @property
    def tau2(self):
        return vec(self.c21, self.c22)

    @property
    def mu(self):
        return self.algebra.mu

    def diagnostics(self):
        k = self.koszul
        return {
            "mu": self.mu,
            "nu": k.nu,
            "nu1": k.nu1,
            "nu2": k.nu2,
            "tau1_dim": k.orbit_dim(self.tau1),
            "tau2_dim": k.orbit_dim(self.tau2),
        }

    def __repr__(self):
        return (f"SyzygyPair(f1={self.f1}, f2={self.f2}, tau1=({self.c11}, {self.c12}), "
                f"tau2=({self.c21}, {self.c22}))")


# ---------------------------------------------------------------------------


def h1_action(k, a, cls):
    """Class coordinates of ``a * lift(cls)`` in H_1."""
    a = k.algebra(a)
    rep = k.H1.lift(cls)
    return k.H1.class_coords(scalar_mul(k.algebra, a, rep))


def colon_modulo(alg, target, v):
    """``{a in B : a*v in target}`` for a K-subspace ``target`` of B^r."""
    return Submodule(alg, 1, preimage(alg.stack_operator(tuple(v)), target))


def colon_in_h1(k, I, tauA, tauB):
    """``(I*tauA : tauB)`` computed in H_1: all a with a*tauB in I*tauA + boundaries."""
    tauA, tauB = tuple(tauA), tuple(tauB)
    for name, t in (("tauA", tauA), ("tauB", tauB)):
        if not k.H1.is_cycle(t):
            raise NotACycle(f"{name} is not a syzygy of (f1, f2)")
    target = I.times(tauA).space + k.H1.boundaries
    return colon_modulo(k.algebra, target, tauB)


def kappa_matrix(alg):
    """The scalar matrix of (a, b) -> (-b, a) on B^2."""
    mu = alg.mu
    rows = []
    for i in range(mu):
        rows.append(tuple(-1 if j == mu + i else 0 for j in range(2 * mu)))
    for i in range(mu):
        rows.append(tuple(1 if j == i else 0 for j in range(2 * mu)))
    return Matrix(alg.field, rows)


def kappa_iso(k):
    return induced_map(k.H1, k.Hc[1], kappa_matrix(k.algebra))


def _kappa(alg, v):
    mu = alg.mu
    f = alg.field
    return tuple(f(-x) for x in v[mu:]) + tuple(v[:mu])


def _gram(h, trace, alg):
    basis = h.coset_basis
    f = alg.field
    rows = [trace.pair_row(_kappa(alg, y)) for y in basis]
    return Matrix(f, [[f(sum(a * b for a, b in zip(x, r))) for r in rows] for x in basis]) if basis else Matrix.zeros(f, 0, 0)


def gram_h1(k, trace=None):
    """Gram matrix of ``(x, y) -> x ._L kappa(y)`` on the coset basis of H_1.

    The plain form ``x ._L y`` is not well defined on classes; pairing
    against kappa(y) is, and it is nondegenerate.
    """
    return _gram(k.H1, trace or k.trace, k.algebra)


def gram_h1_dual(k, trace=None):
    """The same construction on H^1 of the dual complex."""
    return _gram(k.Hc[1], trace or k.trace, k.algebra)


def h1_perp(k, tau, trace=None):
    """Cycles of H_1 orthogonal to the class of ``tau`` under the induced form.

    Returned as a K-subspace of B^2 containing the boundaries.
    """
    trace = trace or k.trace
    alg = k.algebra
    z = k.H1.cycles
    mod = submodule_generated(alg, 2, [tau]).space
    rows = [trace.pair_row(_kappa(alg, v)) for v in mod.vectors]
    if not rows:
        return z
    ann = kernel_basis(Matrix(alg.field, rows))
    return z & ann


# ---------------------------------------------------------------------------


def dimension_table(k):
    """Dimension identities among (f1), (f2), their intersection, colons and annihilators."""
    alg = k.algebra
    mu, nu, nu1, nu2 = alg.mu, k.nu, k.nu1, k.nu2
    I1 = ideal(alg, [k.f1])
    I2 = ideal(alg, [k.f2])
    A1 = annihilator(I1)
    A2 = annihilator(I2)
    A12 = annihilator(k.ideal_f)
    cap = I1 & I2
    c21 = colon(I2, k.f1.coords)
    c12 = colon(I1, k.f2.coords)
    f1A2 = A2.times(k.f1.coords)
    f2A1 = A1.times(k.f2.coords)
    return [
        equal("codim (f1) cap (f2) = nu1 + nu2 - nu", nu1 + nu2 - nu, cap.codim),
        equal("dim Ann(f1,f2) = nu", nu, A12.dim),
        holds("Ann(f1) cap Ann(f2) = Ann(f1,f2)", (A1 & A2) == A12),
        equal("dim Ann(f1), dim Ann(f2) = nu1, nu2", (nu1, nu2), (A1.dim, A2.dim)),
        equal("dim Ann((f1) cap (f2)) = nu1 + nu2 - nu", nu1 + nu2 - nu, annihilator(cap).dim),
        holds("Ann((f1) cap (f2)) = Ann(f1) + Ann(f2)", annihilator(cap) == A1 + A2),
        equal("dim (f2:f1), dim (f1:f2) = mu - nu2 + nu, mu - nu1 + nu",
              (mu - nu2 + nu, mu - nu1 + nu), (c21.dim, c12.dim)),
        equal("dim f1 Ann(f2), dim f2 Ann(f1) = nu2 - nu, nu1 - nu", (nu2 - nu, nu1 - nu), (f1A2.dim, f2A1.dim)),
        equal("dim (f2:f1)/(f2), dim (f1:f2)/(f1) = nu", (nu, nu), (c21.dim - I2.dim, c12.dim - I1.dim)),
        equal("dim Ann(f2)/f1Ann(f2), dim Ann(f1)/f2Ann(f1) = nu", (nu, nu), (A2.dim - f1A2.dim, A1.dim - f2A1.dim)),
    ]


def _block_maps(alg):
    mu = alg.mu
    f = alg.field
    eye = Matrix.identity(f, mu)
    zero = Matrix.zeros(f, mu, mu)
    first = Matrix.block(f, [[eye], [zero]])       # a -> (a, 0)
    second = Matrix.block(f, [[zero], [eye]])      # a -> (0, a)
    pr1 = Matrix.block(f, [[eye, zero]])
    pr2 = Matrix.block(f, [[zero, eye]])
    return first, second, pr1, pr2


def h1_splitting_check(k):
    """Exactness of the two sequences splitting H_1 through the coordinate projections."""
    alg = k.algebra
    I1 = ideal(alg, [k.f1])
    I2 = ideal(alg, [k.f2])
    A1 = annihilator(I1)
    A2 = annihilator(I2)
    first, second, pr1, pr2 = _block_maps(alg)
    checks = []
    for label, A, g, I_other, h, inc, proj in (
        ("i2/pi1", A2, k.f1, I2, k.f1, second, pr1),
        ("i1/pi2", A1, k.f2, I1, k.f2, first, pr2),
    ):
        left = Subquotient(A.space, A.times(g.coords).space, name=f"Ann/{label}")
        right = Subquotient(colon(I_other, h.coords).space, I_other.space, name=f"colon/{label}")
        i_ind = induced_map(left, k.H1, inc)
        p_ind = induced_map(k.H1, right, proj)
        rep = check_short_exact(i_ind, p_ind)
        checks.append(holds(f"{label} injective", rep.injective))
        checks.append(holds(f"{label} surjective", rep.surjective))
        checks.append(holds(f"{label} exact in the middle", rep.exact_middle))
        checks.append(equal(f"{label} dims add up", k.H1.dim, left.dim + right.dim))
    return checks
