"""Exact dense linear algebra over Q and prime fields.

Everything here is exact.  Rationals are Python ``int`` or
``fractions.Fraction`` values (integral fractions are always stored as
``int``); prime-field elements are ints in ``[0, p)``.

Subspaces are kept in a canonical reduced echelon form so that equal
subspaces compare (and hash) equal.  Over Q each basis vector is scaled
to a primitive integer vector with a positive pivot; over F_p the pivot
is 1.  Elimination over Q is fraction-free: row operations are
integer cross-multiplications followed by removal of the content.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputError, NoSolution

__all__ = [
    "FieldSpec",
    "QQ",
    "GF",
    "Matrix",
    "Subspace",
    "rank",
    "kernel_basis",
    "image",
    "solve",
    "subspace_sum",
    "subspace_intersect",
    "preimage",
]


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The base field: Q (``characteristic == 0``) or F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and (not _is_prime(p) or p >= 2**31):
            raise InputError(f"characteristic must be 0 or a prime < 2^31, got {p}")

    @property
    def kind(self):
        return "Rationals" if self.characteristic == 0 else "PrimeField"

    @property
    def is_rational(self):
        return self.characteristic == 0

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"

    def __call__(self, x):
        """Coerce an int, Fraction or numeric string into this field."""
        if isinstance(x, str):
            try:
                x = Fraction(x.strip())
            except ValueError as exc:
                raise InputError(f"not a scalar literal: {x!r}") from exc
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise InputError(f"not an exact scalar: {x!r}")
        p = self.characteristic
        if p == 0:
            if isinstance(x, Fraction) and x.denominator == 1:
                return x.numerator
            return x
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise InputError(f"{x} has no image in {self}")
            return x.numerator * pow(x.denominator, p - 2, p) % p
        return x % p

    def zero(self):
        return 0

    def one(self):
        return 1

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p == 0:
            return self(Fraction(1) / x)
        return pow(x, p - 2, p)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def add(self, x, y):
        return self(x + y)

    def sub(self, x, y):
        return self(x - y)

    def mul(self, x, y):
        return self(x * y)

    def neg(self, x):
        return self(-x)


QQ = FieldSpec(0)


def GF(p):
    return FieldSpec(p)


# ---------------------------------------------------------------------------
# Row echelon engines.
#
# Both engines keep a dict ``pivot column -> row`` in reduced form: every row
# is zero in the pivot columns of the other rows.  ``add`` returns True when
# the vector was independent of the current rows.


def _int_row(row):
    den = 1
    for x in row:
        if type(x) is not int:
            d = x.denominator
            if den % d:
                den = den * d // gcd(den, d)
    if den == 1:
        return [int(x) for x in row]
    return [x * den if type(x) is int else x.numerator * (den // x.denominator) for x in row]


def _primitive(row):
    g = gcd(*row)
    if g == 0:
        return row, -1
    for c, x in enumerate(row):
        if x:
            break
    if x < 0:
        g = -g
    if g != 1:
        row = [y // g for y in row]
    return row, c


class _RationalEchelon:
    __slots__ = ("n", "rows")

    def __init__(self, n):
        self.n = n
        self.rows = {}

    def reduce(self, v):
        v = _int_row(v)
        scaled = False
        for c, p in self.rows.items():
            b = v[c]
            if b:
                a = p[c]
                if a == 1:
                    v = [x - b * y for x, y in zip(v, p)]
                else:
                    g = gcd(a, b)
                    a //= g
                    b //= g
                    v = [a * x - b * y for x, y in zip(v, p)]
                    scaled = True
        if scaled:
            v, _ = _primitive(v)
        return v

    def add(self, v):
        v = self.reduce(v)
        v, c = _primitive(v)
        if c < 0:
            return False
        a = v[c]
        rows = self.rows
        for pc, p in list(rows.items()):
            b = p[c]
            if b:
                g = gcd(a, b)
                p = [(a // g) * x - (b // g) * y for x, y in zip(p, v)]
                rows[pc], _ = _primitive(p)
        rows[c] = v
        return True

    def canonical(self):
        return tuple(tuple(self.rows[c]) for c in sorted(self.rows))


class _ModularEchelon:
    __slots__ = ("n", "p", "rows")

    def __init__(self, n, p):
        self.n = n
        self.p = p
        self.rows = {}

    def reduce(self, v):
        p = self.p
        v = [x % p for x in v]
        for c, r in self.rows.items():
            b = v[c]
            if b:
                v = [(x - b * y) % p for x, y in zip(v, r)]
        return v

    def add(self, v):
        v = self.reduce(v)
        p = self.p
        for c, x in enumerate(v):
            if x:
                break
        else:
            return False
        if x != 1:
            inv = pow(x, p - 2, p)
            v = [y * inv % p for y in v]
        rows = self.rows
        for pc, r in list(rows.items()):
            b = r[c]
            if b:
                rows[pc] = [(x - b * y) % p for x, y in zip(r, v)]
        rows[c] = v
        return True

    def canonical(self):
        return tuple(tuple(self.rows[c]) for c in sorted(self.rows))


def _echelon(field, n, vectors=()):
    ech = _RationalEchelon(n) if field.characteristic == 0 else _ModularEchelon(n, field.characteristic)
    for v in vectors:
        ech.add(v)
    return ech


# ---------------------------------------------------------------------------


class Matrix:
    """An immutable dense matrix over a FieldSpec."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field, data, rows=None, cols=None):
        data = tuple(tuple(field(x) for x in row) for row in data)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise InputError(f"ragged matrix data for shape {rows}x{cols}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def _raw(cls, field, data, rows, cols):
        m = object.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        m._data = data
        return m

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls._raw(field, tuple((0,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, field, n):
        return cls._raw(field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n, n)

    @classmethod
    def from_columns(cls, field, columns, rows=None):
        columns = [tuple(c) for c in columns]
        if rows is None:
            if not columns:
                raise InputError("row count needed for a matrix with no columns")
            rows = len(columns[0])
        if any(len(c) != rows for c in columns):
            raise InputError("columns of unequal length")
        return cls(field, [[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    @classmethod
    def from_entries(cls, field, rows, cols, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise InputError(f"expected {rows * cols} entries, got {len(entries)}")
        return cls(field, [entries[i * cols:(i + 1) * cols] for i in range(rows)], rows, cols)

    @classmethod
    def block(cls, field, blocks):
        """Assemble a matrix from a grid of blocks; all blocks of a row share a height."""
        out = []
        cols = None
        for brow in blocks:
            height = brow[0].rows
            width = 0
            for b in brow:
                _check_field(field, b)
                if b.rows != height:
                    raise InputError("blocks in one row must have equal heights")
                width += b.cols
            if cols is None:
                cols = width
            elif cols != width:
                raise InputError("block rows have unequal widths")
            for i in range(height):
                line = []
                for b in brow:
                    line.extend(b._data[i])
                out.append(tuple(line))
        return cls._raw(field, tuple(out), len(out), cols or 0)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def entries(self):
        return tuple(x for row in self._data for x in row)

    def tolist(self):
        return [list(r) for r in self._data]

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(r[j] for r in self._data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self._data))

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols}, {self.tolist()!r})"

    def is_zero(self):
        return not any(any(r) for r in self._data)

    def transpose(self):
        return Matrix._raw(self.field, _transpose(self._data, self.cols), self.cols, self.rows)

    T = property(transpose)

    def __neg__(self):
        f = self.field
        return Matrix._raw(f, tuple(tuple(f(-x) for x in r) for r in self._data), self.rows, self.cols)

    def __add__(self, other):
        _check_same(self, other)
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} vs {other.shape}")
        f = self.field
        return Matrix._raw(f, tuple(tuple(f(x + y) for x, y in zip(a, b)) for a, b in zip(self._data, other._data)), self.rows, self.cols)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        f = self.field
        c = f(c)
        return Matrix._raw(f, tuple(tuple(f(c * x) for x in r) for r in self._data), self.rows, self.cols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            _check_same(self, other)
            if self.cols != other.rows:
                raise InputError(f"cannot multiply {self.shape} by {other.shape}")
            f = self.field
            ot = _transpose(other._data, other.cols)
            data = tuple(
                tuple(f(sum(x * y for x, y in zip(r, c) if x)) for c in ot) for r in self._data
            )
            return Matrix._raw(f, data, self.rows, other.cols)
        return self.apply(other)

    def apply(self, v):
        """Multiply by a column given as a flat sequence."""
        v = tuple(v)
        if len(v) != self.cols:
            raise InputError(f"vector of length {len(v)} does not fit {self.shape}")
        f = self.field
        return tuple(f(sum(x * y for x, y in zip(r, v) if x)) for r in self._data)

    def hstack(self, *others):
        return Matrix.block(self.field, [[self, *others]])

    def vstack(self, *others):
        return Matrix.block(self.field, [[m] for m in (self, *others)])

    def submatrix(self, rows, cols):
        rows = list(rows)
        cols = list(cols)
        return Matrix._raw(self.field, tuple(tuple(self._data[i][j] for j in cols) for i in rows), len(rows), len(cols))


def _transpose(data, cols):
    if not data:
        return tuple(() for _ in range(cols))
    return tuple(zip(*data))


def _check_field(field, m):
    if m.field != field:
        raise InputError(f"mixed fields: {field} and {m.field}")


def _check_same(a, b):
    if a.field != b.field:
        raise InputError(f"mixed fields: {a.field} and {b.field}")


# ---------------------------------------------------------------------------


class Subspace:
    """A subspace of K^n stored by its canonical reduced echelon basis."""

    __slots__ = ("field", "ambient_dim", "_rows", "_pivots")

    def __init__(self, field, ambient_dim, vectors=()):
        ech = _echelon(field, ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise InputError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            ech.add(v)
        self._set(field, ambient_dim, ech)

    def _set(self, field, n, ech):
        self.field = field
        self.ambient_dim = n
        piv = sorted(ech.rows)
        self._pivots = tuple(piv)
        self._rows = tuple(tuple(ech.rows[c]) for c in piv)

    @classmethod
    def _from_echelon(cls, field, n, ech):
        s = object.__new__(cls)
        s._set(field, n, ech)
        return s

    @classmethod
    def zero(cls, field, n):
        return cls(field, n)

    @classmethod
    def full(cls, field, n):
        return cls(field, n, [tuple(int(i == j) for j in range(n)) for i in range(n)])

    @classmethod
    def column_space(cls, m):
        return cls(m.field, m.rows, m.columns())

    @property
    def dim(self):
        return len(self._rows)

    @property
    def codim(self):
        return self.ambient_dim - len(self._rows)

    @property
    def vectors(self):
        """The canonical basis vectors, as tuples."""
        return self._rows

    @property
    def pivots(self):
        return self._pivots

    @property
    def basis(self):
        """The canonical basis as the columns of a matrix."""
        if not self._rows:
            return Matrix.zeros(self.field, self.ambient_dim, 0)
        return Matrix._raw(self.field, _transpose(self._rows, self.ambient_dim), self.ambient_dim, len(self._rows))

    def _echelon(self):
        ech = _echelon(self.field, self.ambient_dim)
        ech.rows = {c: list(r) for c, r in zip(self._pivots, self._rows)}
        return ech

    def reduce(self, v):
        """Reduce ``v`` modulo this subspace.

        Over Q the remainder is only determined up to a positive scalar,
        which is enough for membership tests; use :meth:`remainder` for
        an exact representative of ``v + U``.
        """
        if len(v) != self.ambient_dim:
            raise InputError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        return self._echelon().reduce(v)

    def remainder(self, v):
        """The exact representative of ``v + U`` vanishing on the pivot columns."""
        f = self.field
        v = [f(x) for x in v]
        if len(v) != self.ambient_dim:
            raise InputError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        for c, r in zip(self._pivots, self._rows):
            b = v[c]
            if b:
                t = f.div(b, r[c])
                v = [f(x - t * y) for x, y in zip(v, r)]
        return tuple(v)

    def contains(self, v):
        return not any(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def __le__(self, other):
        _check_ambient(self, other)
        return all(other.contains(v) for v in self._rows)

    def __ge__(self, other):
        return other <= self

    def __lt__(self, other):
        return self <= other and self.dim < other.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.field == other.field and self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self._rows))

    def __repr__(self):
        return f"Subspace({self.field}, dim {self.dim} in {self.ambient_dim})"

    def __add__(self, other):
        return subspace_sum(self, other)

    def __and__(self, other):
        return subspace_intersect(self, other)

    def annihilator(self):
        """The subspace of K^n orthogonal to this one under the standard dot product."""
        return kernel_basis(Matrix._raw(self.field, self._rows, len(self._rows), self.ambient_dim))

    def coordinates(self, v):
        """Coordinates of ``v`` in the canonical basis; raises NoSolution if v is outside."""
        f = self.field
        coords = []
        r = self.remainder(v)
        if any(r):
            raise NoSolution("vector is not in the subspace")
        for c, row in zip(self._pivots, self._rows):
            coords.append(f.div(f(v[c]), row[c]))
        return tuple(coords)

    def projector_rows(self):
        return self._rows


def _check_ambient(u, v):
    if u.field != v.field:
        raise InputError(f"mixed fields: {u.field} and {v.field}")
    if u.ambient_dim != v.ambient_dim:
        raise InputError(f"ambient dimensions differ: {u.ambient_dim} vs {v.ambient_dim}")


# ---------------------------------------------------------------------------


def _row_echelon_of(m):
    return _echelon(m.field, m.cols, m._data)


def rank(m):
    """Rank of a matrix over its field."""
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.rows > m.cols:
        m = m.transpose()
    return len(_row_echelon_of(m).rows)


def kernel_basis(m):
    """The null space ``{x : m x = 0}`` as a canonical Subspace of K^cols."""
    f = m.field
    n = m.cols
    ech = _row_echelon_of(m)
    pivots = sorted(ech.rows)
    free = [j for j in range(n) if j not in ech.rows]
    vectors = []
    for j in free:
        v = [0] * n
        if f.characteristic == 0:
            den = 1
            for c in pivots:
                a = ech.rows[c][c]
                den = den * a // gcd(den, a)
            v[j] = den
            for c in pivots:
                r = ech.rows[c]
                if r[j]:
                    v[c] = -r[j] * (den // r[c])
        else:
            p = f.characteristic
            v[j] = 1
            for c in pivots:
                r = ech.rows[c]
                if r[j]:
                    v[c] = (-r[j]) % p
        vectors.append(v)
    return Subspace(f, n, vectors)


def image(m, u=None):
    """The image ``m(U)`` (the column space when U is omitted)."""
    if u is None:
        return Subspace.column_space(m)
    if u.ambient_dim != m.cols:
        raise InputError(f"subspace of dimension {u.ambient_dim} does not fit {m.shape}")
    return Subspace(m.field, m.rows, [m.apply(v) for v in u.vectors])


def solve(m, b):
    """One solution of ``m x = b``, free variables set to zero.

    Raises NoSolution when the system is inconsistent.
    """
    b = tuple(b)
    if len(b) != m.rows:
        raise InputError(f"right-hand side of length {len(b)} for {m.rows} rows")
    f = m.field
    n = m.cols
    aug = [tuple(r) + (y,) for r, y in zip(m._data, b)]
    ech = _echelon(f, n + 1, aug)
    if n in ech.rows:
        raise NoSolution("inconsistent linear system")
    x = [0] * n
    for c, r in ech.rows.items():
        x[c] = f.div(f(r[n]), f(r[c]))
    return tuple(f(v) for v in x)


def subspace_sum(u, v):
    _check_ambient(u, v)
    ech = u._echelon()
    for w in v.vectors:
        ech.add(w)
    return Subspace._from_echelon(u.field, u.ambient_dim, ech)


def subspace_intersect(u, v):
    _check_ambient(u, v)
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(u.field, u.ambient_dim)
    if u.dim == u.ambient_dim:
        return v
    if v.dim == v.ambient_dim:
        return u
    return (u.annihilator() + v.annihilator()).annihilator()


def preimage(m, v):
    """``{x : m x in V}``."""
    if v.field != m.field:
        raise InputError(f"mixed fields: {m.field} and {v.field}")
    if v.ambient_dim != m.rows:
        raise InputError(f"subspace in dimension {v.ambient_dim} does not match {m.rows} rows")
    if v.dim == v.ambient_dim:
        return Subspace.full(m.field, m.cols)
    ann = v.annihilator()
    if ann.dim == 0:
        return Subspace.full(m.field, m.cols)
    a = ann.basis.transpose()
    return kernel_basis(a @ m)
