"""Finite-dimensional commutative algebras given by structure constants.

Vectors of B^r are flat tuples of length r*mu in block-major order: the
k-th component occupies coordinates k*mu .. k*mu + mu - 1.
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import InputError, NotGorenstein, NotLocal
from .exactlin import Matrix, Subspace, kernel_basis, preimage, rank

__all__ = [
    "FiniteAlgebra",
    "AlgebraElement",
    "Submodule",
    "TraceMap",
    "SocleReport",
    "multiply",
    "mult_operator",
    "submodule_generated",
    "ideal",
    "annihilator",
    "colon",
    "socle_and_checks",
    "choose_trace",
    "trace_from_functional",
    "orthogonal",
    "diagnostics",
    "vec",
    "blocks",
    "scalar_mul",
]


class FiniteAlgebra:
    """A commutative unital algebra of dimension mu over a field.

    ``table[i][j]`` holds the coordinates of ``e_i * e_j``.
    """

    def __init__(self, field, labels, table, unit, presentation=None, exponents=None):
        mu = len(labels)
        if mu < 1:
            raise InputError("an algebra needs at least one basis element")
        if len(table) != mu or any(len(row) != mu for row in table):
            raise InputError("structure constants must form a mu x mu table")
        self.field = field
        self.mu = mu
        self.basis_labels = tuple(labels)
        self.table = tuple(tuple(tuple(field(x) for x in c) for c in row) for row in table)
        if any(len(c) != mu for row in self.table for c in row):
            raise InputError("structure constant vectors must have length mu")
        self.unit = tuple(field(x) for x in unit)
        if len(self.unit) != mu:
            raise InputError("unit must have length mu")
        self.presentation = presentation
        self.exponents = exponents

    def __repr__(self):
        return f"FiniteAlgebra({self.field}, mu={self.mu}, basis={list(self.basis_labels)})"

    # -- elements --------------------------------------------------------

    def element(self, coords):
        return AlgebraElement(self, coords)

    def zero(self):
        return AlgebraElement(self, (0,) * self.mu)

    def one(self):
        return AlgebraElement(self, self.unit)

    def basis_element(self, i):
        return AlgebraElement(self, tuple(int(k == i) for k in range(self.mu)))

    def basis(self):
        return [self.basis_element(i) for i in range(self.mu)]

    def from_polynomial(self, p):
        if self.presentation is None or self.exponents is None:
            raise InputError("algebra has no polynomial presentation")
        if p.variables != self.presentation.variables or p.field != self.field:
            raise InputError("polynomial ring does not match the algebra")
        nf = self.presentation.reduce(p)
        index = {e: i for i, e in enumerate(self.exponents)}
        coords = [0] * self.mu
        for e, c in nf.terms.items():
            coords[index[e]] = c
        return AlgebraElement(self, coords)

    def parse(self, text):
        """Parse a polynomial expression into an element (needs a presentation)."""
        if self.presentation is None:
            raise InputError("algebra has no polynomial presentation")
        return self.from_polynomial(self.presentation.parse(text))

    def __call__(self, x):
        if isinstance(x, AlgebraElement):
            if x.algebra is not self:
                raise InputError("element of a different algebra")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (tuple, list)):
            return AlgebraElement(self, x)
        return self.one().scale(x)

    # -- multiplication --------------------------------------------------

    def mul_coords(self, a, b):
        f = self.field
        mu = self.mu
        out = [0] * mu
        t = self.table
        for i, x in enumerate(a):
            if not x:
                continue
            ti = t[i]
            for j, y in enumerate(b):
                if not y:
                    continue
                c = x * y
                for k, z in enumerate(ti[j]):
                    if z:
                        out[k] += c * z
        return tuple(f(v) for v in out)

    @cached_property
    def basis_operators(self):
        """``M_i`` with ``M_i @ coords(b) = coords(e_i * b)``."""
        mu = self.mu
        ops = []
        for i in range(mu):
            data = tuple(tuple(self.table[i][j][k] for j in range(mu)) for k in range(mu))
            ops.append(Matrix._raw(self.field, data, mu, mu))
        return tuple(ops)

    def operator(self, coords):
        f = self.field
        mu = self.mu
        acc = [[0] * mu for _ in range(mu)]
        for i, x in enumerate(coords):
            if not x:
                continue
            ti = self.table[i]
            for j in range(mu):
                col = ti[j]
                for k in range(mu):
                    if col[k]:
                        acc[k][j] += x * col[k]
        return Matrix._raw(f, tuple(tuple(f(v) for v in r) for r in acc), mu, mu)

    def stack_operator(self, v):
        """The (r*mu) x mu matrix of ``a -> a*v`` for v in B^r."""
        mu = self.mu
        if len(v) % mu:
            raise InputError(f"vector length {len(v)} is not a multiple of mu={mu}")
        rows = []
        for k in range(len(v) // mu):
            rows.extend(self.operator(v[k * mu:(k + 1) * mu])._data)
        return Matrix._raw(self.field, tuple(rows), len(rows), mu)

    @cached_property
    def trace_vector(self):
        """``t[i] = trace(M_i)``."""
        f = self.field
        return tuple(f(sum(self.table[i][j][j] for j in range(self.mu))) for i in range(self.mu))

    def check_axioms(self):
        """Raise InputError unless multiplication is commutative, associative and unital."""
        mu = self.mu
        t = self.table
        for i in range(mu):
            for j in range(i + 1, mu):
                if t[i][j] != t[j][i]:
                    raise InputError(f"not commutative: e{i}*e{j} != e{j}*e{i}")
        for i in range(mu):
            e = tuple(int(k == i) for k in range(mu))
            if self.mul_coords(self.unit, e) != e:
                raise InputError(f"unit does not act as identity on e{i}")
        for i in range(mu):
            for j in range(mu):
                ij = t[i][j]
                for k in range(mu):
                    left = self.mul_coords(ij, tuple(int(m == k) for m in range(mu)))
                    right = self.mul_coords(tuple(int(m == i) for m in range(mu)), t[j][k])
                    if left != right:
                        raise InputError(f"not associative on (e{i}, e{j}, e{k})")
        return True


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        coords = tuple(algebra.field(x) for x in coords)
        if len(coords) != algebra.mu:
            raise InputError(f"element needs {algebra.mu} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = coords

    def _other(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise InputError("elements of different algebras")
            return other
        return self.algebra(other)

    def __add__(self, other):
        other = self._other(other)
        f = self.algebra.field
        return AlgebraElement(self.algebra, [f(x + y) for x, y in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        other = self._other(other)
        return AlgebraElement(self.algebra, self.algebra.mul_coords(self.coords, other.coords))

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.algebra.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c):
        f = self.algebra.field
        c = f(c)
        return AlgebraElement(self.algebra, [f(c * x) for x in self.coords])

    def is_zero(self):
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def operator(self):
        return self.algebra.operator(self.coords)

    def is_unit(self):
        return rank(self.operator()) == self.algebra.mu

    def inverse(self):
        from .exactlin import solve

        return AlgebraElement(self.algebra, solve(self.operator(), self.algebra.unit))

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra is other.algebra and self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        terms = []
        for c, lab in zip(self.coords, self.algebra.basis_labels):
            if not c:
                continue
            if lab == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(lab)
            elif c == -1 and self.algebra.field.is_rational:
                terms.append(f"-{lab}")
            else:
                terms.append(f"{c}*{lab}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"AlgebraElement({self})"


def multiply(a, b):
    if a.algebra is not b.algebra:
        raise InputError("elements of different algebras")
    return a * b


def mult_operator(a):
    return a.operator()


def vec(*elements):
    """Concatenate algebra elements (or coordinate tuples) into a vector of B^r."""
    out = []
    for e in elements:
        out.extend(e.coords if isinstance(e, AlgebraElement) else e)
    return tuple(out)


def blocks(v, mu):
    return [tuple(v[k * mu:(k + 1) * mu]) for k in range(len(v) // mu)]


def scalar_mul(alg, a, v):
    """``a * v`` for ``a`` in B (coords) and ``v`` in B^r."""
    a = a.coords if isinstance(a, AlgebraElement) else a
    out = []
    for b in blocks(v, alg.mu):
        out.extend(alg.mul_coords(a, b))
    return tuple(out)


# ---------------------------------------------------------------------------


class Submodule:
    """A B-submodule of B^r, stored as a canonical K-subspace of K^(r*mu)."""

    __slots__ = ("algebra", "r", "space")

    def __init__(self, algebra, r, space):
        if space.ambient_dim != r * algebra.mu:
            raise InputError(f"subspace of dimension {space.ambient_dim} is not inside B^{r}")
        self.algebra = algebra
        self.r = r
        self.space = space

    @classmethod
    def zero(cls, algebra, r=1):
        return cls(algebra, r, Subspace.zero(algebra.field, r * algebra.mu))

    @classmethod
    def full(cls, algebra, r=1):
        return cls(algebra, r, Subspace.full(algebra.field, r * algebra.mu))

    @property
    def dim(self):
        return self.space.dim

    @property
    def codim(self):
        return self.space.codim

    @property
    def vectors(self):
        return self.space.vectors

    def elements(self):
        if self.r != 1:
            raise InputError("elements() only applies to ideals")
        return [AlgebraElement(self.algebra, v) for v in self.space.vectors]

    def contains(self, v):
        if isinstance(v, AlgebraElement):
            v = v.coords
        return self.space.contains(v)

    __contains__ = contains

    def _same(self, other):
        if self.algebra is not other.algebra or self.r != other.r:
            raise InputError("submodules of different modules")

    def __add__(self, other):
        self._same(other)
        return Submodule(self.algebra, self.r, self.space + other.space)

    def __and__(self, other):
        self._same(other)
        return Submodule(self.algebra, self.r, self.space & other.space)

    def __le__(self, other):
        self._same(other)
        return self.space <= other.space

    def __ge__(self, other):
        return other <= self

    def __lt__(self, other):
        return self <= other and self.dim < other.dim

    def __eq__(self, other):
        if not isinstance(other, Submodule):
            return NotImplemented
        return self.algebra is other.algebra and self.r == other.r and self.space == other.space

    def __hash__(self):
        return hash((self.r, self.space))

    def __repr__(self):
        return f"Submodule(dim {self.dim} in B^{self.r})"

    def is_closed(self):
        """True when every basis multiplication maps the module into itself."""
        alg = self.algebra
        for i in range(alg.mu):
            e = tuple(int(k == i) for k in range(alg.mu))
            for v in self.space.vectors:
                if not self.space.contains(scalar_mul(alg, e, v)):
                    return False
        return True

    def times(self, v):
        """The submodule ``I * v`` for an ideal I and v in B^r."""
        if self.r != 1:
            raise InputError("times() needs an ideal")
        alg = self.algebra
        r = len(v) // alg.mu
        return Submodule(alg, r, Subspace(alg.field, r * alg.mu, [scalar_mul(alg, a, v) for a in self.space.vectors]))


def submodule_generated(alg, r, gens):
    """The smallest submodule of B^r containing ``gens``.

    B*g is spanned by e_i * g over the basis, so one pass suffices.
    """
    n = r * alg.mu
    vectors = []
    for g in gens:
        g = vec(g) if isinstance(g, AlgebraElement) else tuple(g)
        if len(g) != n:
            raise InputError(f"generator of length {len(g)} is not in B^{r}")
        for i in range(alg.mu):
            e = tuple(int(k == i) for k in range(alg.mu))
            vectors.append(scalar_mul(alg, e, g))
    return Submodule(alg, r, Subspace(alg.field, n, vectors))


def ideal(alg, elements):
    return submodule_generated(alg, 1, [alg(e) for e in elements])


def annihilator(m):
    """``{a in B : a*v = 0 for all v in m}``."""
    alg = m.algebra
    if m.dim == 0:
        return Submodule.full(alg)
    mats = [alg.stack_operator(v) for v in m.space.vectors]
    big = mats[0].vstack(*mats[1:]) if len(mats) > 1 else mats[0]
    return Submodule(alg, 1, kernel_basis(big))


def colon(n, v):
    """``{a in B : a*v in n}``."""
    alg = n.algebra
    if isinstance(v, AlgebraElement):
        v = v.coords
    v = tuple(v)
    if len(v) != n.r * alg.mu:
        raise InputError("vector does not lie in the ambient module of n")
    return Submodule(alg, 1, preimage(alg.stack_operator(v), n.space))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SocleReport:
    nilradical: Submodule
    is_local: bool
    socle: Submodule
    is_gorenstein_local: bool


def _nilradical(alg):
    f = alg.field
    mu = alg.mu
    if f.characteristic == 0:
        # radical of the trace form tr(M_{ab})
        t = alg.trace_vector
        gram = [[f(sum(x * y for x, y in zip(alg.table[i][j], t) if x)) for j in range(mu)] for i in range(mu)]
        return kernel_basis(Matrix(f, gram))
    # In characteristic p, a -> a^p is F_p-linear and its mu-fold
    # iterate kills exactly the nilpotent elements.
    p = f.characteristic
    steps = 1
    while p ** steps < mu:
        steps += 1
    cols = []
    for i in range(mu):
        x = alg.basis_element(i)
        for _ in range(steps):
            x = x ** p
        cols.append(x.coords)
    return kernel_basis(Matrix.from_columns(f, cols, mu))


def socle_and_checks(alg):
    nil = Submodule(alg, 1, _nilradical(alg))
    local = nil.dim == alg.mu - 1
    soc = annihilator(nil)
    return SocleReport(nil, local, soc, local and soc.dim == 1)


class TraceMap:
    """A linear functional on B, nonzero on the socle."""

    __slots__ = ("algebra", "functional", "_gram")

    def __init__(self, algebra, functional):
        f = algebra.field
        self.algebra = algebra
        self.functional = tuple(f(x) for x in functional)
        if len(self.functional) != algebra.mu:
            raise InputError("trace functional must have length mu")
        mu = algebra.mu
        self._gram = tuple(
            tuple(f(sum(x * y for x, y in zip(algebra.table[i][j], self.functional) if x)) for j in range(mu))
            for i in range(mu)
        )

    def __call__(self, a):
        a = a.coords if isinstance(a, AlgebraElement) else a
        return self.algebra.field(sum(x * y for x, y in zip(a, self.functional)))

    @property
    def gram(self):
        """``gram[i][j] = L(e_i e_j)``."""
        return self._gram

    def row(self, a):
        """The functional ``b -> L(a b)`` as a row."""
        f = self.algebra.field
        mu = self.algebra.mu
        return tuple(f(sum(a[i] * self._gram[i][j] for i in range(mu) if a[i])) for j in range(mu))

    def pair_row(self, v):
        """The functional ``w -> w ._L v`` on B^r as a row of length r*mu."""
        out = []
        for b in blocks(v, self.algebra.mu):
            out.extend(self.row(b))
        return tuple(out)

    def pair(self, u, v):
        """``u ._L v = sum_k L(u_k v_k)``."""
        f = self.algebra.field
        return f(sum(x * y for x, y in zip(u, self.pair_row(v))))


def choose_trace(alg, report=None):
    """The functional dual to the pivot of the canonical socle vector."""
    rep = report or socle_and_checks(alg)
    if not rep.is_local:
        raise NotLocal("algebra is not local")
    if not rep.is_gorenstein_local:
        raise NotGorenstein(f"socle has dimension {rep.socle.dim}, expected 1")
    s = rep.socle.space.vectors[0]
    p = rep.socle.space.pivots[0]
    f = alg.field
    ell = [0] * alg.mu
    ell[p] = f.inv(f(s[p]))
    return TraceMap(alg, ell)


def trace_from_functional(alg, functional, report=None):
    rep = report or socle_and_checks(alg)
    t = TraceMap(alg, functional)
    if not rep.socle.dim or all(t(v) == 0 for v in rep.socle.space.vectors):
        raise NotGorenstein("functional vanishes on the socle")
    return t


def orthogonal(m, trace):
    """``{w in B^r : w ._L v = 0 for all v in m}``."""
    alg = m.algebra
    n = m.r * alg.mu
    if m.dim == 0:
        return Submodule.full(alg, m.r)
    rows = [trace.pair_row(v) for v in m.space.vectors]
    return Submodule(alg, m.r, kernel_basis(Matrix._raw(alg.field, tuple(rows), len(rows), n)))


def diagnostics(alg, f1, f2):
    """Codimensions nu, nu1, nu2 of (f1, f2), (f1), (f2)."""
    return {
        "mu": alg.mu,
        "nu": ideal(alg, [f1, f2]).codim,
        "nu1": ideal(alg, [f1]).codim,
        "nu2": ideal(alg, [f2]).codim,
    }
