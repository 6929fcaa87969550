"""Complexes of free B-modules, their scalar expansions, and homology
as subquotients with canonical coset bases."""

from dataclasses import dataclass

from .algebra import AlgebraElement
from .errors import ComplexBroken, InputError, NotACycle, NotChainCompatible
from .exactlin import Matrix, Subspace, image, kernel_basis, rank

__all__ = [
    "BMatrix",
    "expand",
    "ScalarComplex",
    "Subquotient",
    "homology_at",
    "class_coords",
    "induced_map",
    "exact_at",
    "ShortExactReport",
    "check_short_exact",
    "euler_characteristic",
]


class BMatrix:
    """A matrix with entries in a FiniteAlgebra."""

    __slots__ = ("algebra", "rows", "cols", "entries")

    def __init__(self, algebra, entries, rows=None, cols=None):
        grid = [list(r) for r in entries]
        if rows is None:
            rows = len(grid)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise InputError("ragged BMatrix")
        out = []
        for r in grid:
            line = []
            for x in r:
                if isinstance(x, AlgebraElement) and x.algebra is not algebra:
                    raise InputError("BMatrix entries from different algebras")
                line.append(algebra(x))
            out.append(tuple(line))
        self.algebra = algebra
        self.rows = rows
        self.cols = cols
        self.entries = tuple(out)

    @classmethod
    def zeros(cls, algebra, rows, cols):
        z = algebra.zero()
        return cls(algebra, [[z] * cols for _ in range(rows)], rows, cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, BMatrix):
            return NotImplemented
        return self.algebra is other.algebra and self.entries == other.entries and self.shape == other.shape

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def transpose(self):
        return BMatrix(self.algebra, [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)], self.cols, self.rows)

    def __matmul__(self, other):
        if self.algebra is not other.algebra:
            raise InputError("BMatrix product over different algebras")
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        alg = self.algebra
        out = []
        for i in range(self.rows):
            line = []
            for j in range(other.cols):
                acc = alg.zero()
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                line.append(acc)
            out.append(line)
        return BMatrix(alg, out, self.rows, other.cols)

    def is_zero(self):
        return all(x.is_zero() for r in self.entries for x in r)

    def expand(self):
        return expand(self)

    def __repr__(self):
        return "BMatrix(" + "; ".join(", ".join(str(x) for x in r) for r in self.entries) + ")"


def expand(m):
    """Replace each entry by its multiplication operator (block-major layout)."""
    alg = m.algebra
    mu = alg.mu
    rows = []
    ops = [[x.operator() if x else None for x in r] for r in m.entries]
    for i in range(m.rows):
        for k in range(mu):
            line = []
            for j in range(m.cols):
                op = ops[i][j]
                line.extend(op._data[k] if op is not None else (0,) * mu)
            rows.append(tuple(line))
    return Matrix._raw(alg.field, tuple(rows), m.rows * mu, m.cols * mu)


# ---------------------------------------------------------------------------


class Subquotient:
    """``Z / W`` for nested subspaces W <= Z of K^n.

    The coset basis is the canonical echelon basis of the remainders of
    Z modulo W; it is a complement of W in Z.
    """

    __slots__ = ("cycles", "boundaries", "_coset", "name")

    def __init__(self, cycles, boundaries, name=""):
        if cycles.ambient_dim != boundaries.ambient_dim or cycles.field != boundaries.field:
            raise InputError("cycles and boundaries live in different spaces")
        if not boundaries <= cycles:
            raise ComplexBroken(f"{name or 'subquotient'}: boundaries are not contained in cycles")
        self.cycles = cycles
        self.boundaries = boundaries
        self.name = name
        self._coset = Subspace(cycles.field, cycles.ambient_dim, [boundaries.remainder(z) for z in cycles.vectors])

    @property
    def field(self):
        return self.cycles.field

    @property
    def ambient_dim(self):
        return self.cycles.ambient_dim

    @property
    def dim(self):
        return self.cycles.dim - self.boundaries.dim

    @property
    def coset_basis(self):
        return self._coset.vectors

    def __repr__(self):
        return f"Subquotient({self.name or '?'}: dim {self.dim} = {self.cycles.dim} - {self.boundaries.dim})"

    def is_cycle(self, v):
        return self.cycles.contains(v)

    def is_boundary(self, v):
        return self.boundaries.contains(v)

    def class_coords(self, v):
        """Coordinates of ``v + W`` in the coset basis; NotACycle if v is not in Z."""
        v = tuple(v)
        if len(v) != self.ambient_dim:
            raise InputError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        if not self.cycles.contains(v):
            raise NotACycle(f"vector is not a cycle of {self.name or 'the subquotient'}")
        return self._coset.coordinates(self.boundaries.remainder(v))

    coords = class_coords

    def lift(self, coords):
        """The representative ``sum c_i b_i`` of a class given by coordinates."""
        f = self.field
        out = [0] * self.ambient_dim
        for c, b in zip(coords, self._coset.vectors):
            if c:
                for k, x in enumerate(b):
                    if x:
                        out[k] += c * x
        return tuple(f(x) for x in out)

    def classes_of(self, vectors):
        """The subspace of K^dim spanned by the classes of ``vectors``."""
        return Subspace(self.field, self.dim, [self.class_coords(v) for v in vectors])

    def same_as(self, other):
        """Equal as subquotients: same cycles and same boundaries."""
        return self.cycles == other.cycles and self.boundaries == other.boundaries


def class_coords(h, v):
    return h.class_coords(v)


class ScalarComplex:
    """A finite complex of K-vector spaces.

    Chain convention (default): ``d[i]`` maps term i to term i-1 for
    i = 1..n-1.  Cochain convention: ``d[i]`` maps term i to term i+1 for
    i = 0..n-2.  Missing maps at the ends are zero.
    """

    def __init__(self, field, dims, differentials, cochain=False, check=True, name=""):
        self.field = field
        self.dims = tuple(dims)
        self.cochain = cochain
        self.name = name
        self.d = dict(differentials)
        for i, m in self.d.items():
            src = self.dims[i]
            dst = self.dims[i + 1] if cochain else self.dims[i - 1]
            if m.shape != (dst, src):
                raise InputError(f"differential {i} has shape {m.shape}, expected {(dst, src)}")
            if m.field != field:
                raise InputError("differential over the wrong field")
        if check:
            self.check()

    def __len__(self):
        return len(self.dims)

    def outgoing(self, i):
        m = self.d.get(i)
        if m is None:
            tgt = (i + 1) if self.cochain else (i - 1)
            rows = self.dims[tgt] if 0 <= tgt < len(self.dims) else 0
            return Matrix.zeros(self.field, rows, self.dims[i])
        return m

    def incoming(self, i):
        j = i - 1 if self.cochain else i + 1
        m = self.d.get(j)
        if m is None:
            cols = self.dims[j] if 0 <= j < len(self.dims) else 0
            return Matrix.zeros(self.field, self.dims[i], cols)
        return m

    def check(self):
        for i in range(len(self.dims)):
            a = self.d.get(i)
            b = self.d.get(i - 1 if self.cochain else i + 1)
            if a is None or b is None:
                continue
            if not (a @ b).is_zero():
                other = i - 1 if self.cochain else i + 1
                raise ComplexBroken(f"{self.name or 'complex'}: d{i} o d{other} != 0")
        return True

    def homology_at(self, i):
        if not 0 <= i < len(self.dims):
            raise InputError(f"degree {i} outside 0..{len(self.dims) - 1}")
        z = kernel_basis(self.outgoing(i))
        w = image(self.incoming(i))
        return Subquotient(z, w, name=f"{self.name}[{i}]")

    def homology_dims(self, upto=None):
        """Dimensions by rank counting (no subquotient bases)."""
        n = len(self.dims) if upto is None else upto + 1
        out = []
        for i in range(n):
            out.append(self.dims[i] - rank(self.outgoing(i)) - rank(self.incoming(i)))
        return out


def homology_at(c, i):
    return c.homology_at(i)


def euler_characteristic(dims):
    return sum((-1) ** i * d for i, d in enumerate(dims))


def induced_map(src, dst, f):
    """The map ``src -> dst`` induced by the linear map f, on coset coordinates."""
    if f.cols != src.ambient_dim or f.rows != dst.ambient_dim:
        raise InputError(f"map of shape {f.shape} does not fit {src.ambient_dim} -> {dst.ambient_dim}")
    for w in src.boundaries.vectors:
        if not dst.boundaries.contains(f.apply(w)):
            raise NotChainCompatible(f"boundary of {src.name} is not sent to a boundary of {dst.name}")
    cols = []
    for z in src.cycles.vectors:
        if not dst.cycles.contains(f.apply(z)):
            raise NotChainCompatible(f"cycle of {src.name} is not sent to a cycle of {dst.name}")
    for b in src.coset_basis:
        cols.append(dst.class_coords(f.apply(b)))
    return Matrix.from_columns(src.field, cols, dst.dim) if cols else Matrix.zeros(src.field, dst.dim, 0)


def exact_at(incoming, outgoing):
    """ker(outgoing) == im(incoming), as subspaces of the middle term."""
    if incoming.rows != outgoing.cols:
        raise InputError("maps do not meet at a common middle term")
    return kernel_basis(outgoing) == image(incoming)


@dataclass(frozen=True)
class ShortExactReport:
    injective: bool
    surjective: bool
    exact_middle: bool
    dims: tuple

    @property
    def passed(self):
        return self.injective and self.surjective and self.exact_middle


def check_short_exact(i, p):
    """Check ``0 -> A --i--> B --p--> C -> 0`` on explicit matrices."""
    return ShortExactReport(
        injective=rank(i) == i.cols,
        surjective=rank(p) == p.rows,
        exact_middle=exact_at(i, p),
        dims=(i.cols, i.rows, p.rows),
    )
