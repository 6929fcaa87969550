"""Polynomials, a small expression parser, Buchberger's algorithm and the
construction of finite-dimensional quotient algebras K[x1..xn]/I.
"""

import heapq
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import InputError, NotZeroDimensional, ParseError
from .exactlin import FieldSpec, QQ

__all__ = [
    "Polynomial",
    "MonomialOrder",
    "QuotientPresentation",
    "parse_poly",
    "buchberger",
    "normal_form",
    "standard_monomials",
    "build_quotient_algebra",
    "format_monomial",
]

_IDENT = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "degrevlex"

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise InputError(f"unknown monomial order {self.kind!r}")

    def key(self, e):
        """Sort key; a larger key means a larger monomial."""
        if self.kind == "lex":
            return tuple(e)
        return (sum(e), tuple(-x for x in reversed(e)))


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def format_monomial(variables, e):
    parts = []
    for v, k in zip(variables, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """A polynomial with exact coefficients in a fixed ordered set of variables."""

    __slots__ = ("variables", "field", "terms")

    def __init__(self, variables, terms=None, field=QQ):
        self.variables = tuple(variables)
        self.field = field
        n = len(self.variables)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise InputError(f"exponent {e} does not match {n} variables")
            c = field(c)
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables, terms, field):
        p = object.__new__(cls)
        p.variables = variables
        p.field = field
        p.terms = terms
        return p

    @classmethod
    def constant(cls, variables, c, field=QQ):
        return cls(variables, {(0,) * len(variables): c}, field)

    @classmethod
    def variable(cls, variables, name, field=QQ):
        variables = tuple(variables)
        if name not in variables:
            raise InputError(f"unknown variable {name!r}")
        e = tuple(int(v == name) for v in variables)
        return cls(variables, {e: 1}, field)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def _check(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.variables, other, self.field)
        if other.variables != self.variables or other.field != self.field:
            raise InputError("polynomials over different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        f = self.field
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = f(t.get(e, 0) + c)
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return Polynomial._raw(self.variables, t, f)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Polynomial._raw(self.variables, {e: f(-c) for e, c in self.terms.items()}, f)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        f = self.field
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Polynomial(self.variables, t, f)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InputError("exponent must be a nonnegative integer")
        out = Polynomial.constant(self.variables, 1, self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c):
        f = self.field
        c = f(c)
        if not c:
            return Polynomial._raw(self.variables, {}, f)
        return Polynomial._raw(self.variables, {e: f(c * x) for e, x in self.terms.items()}, f)

    def shift(self, e, c=1):
        """Multiply by the term c * x^e."""
        f = self.field
        return Polynomial._raw(
            self.variables,
            {tuple(a + b for a, b in zip(m, e)): f(c * x) for m, x in self.terms.items()},
            f,
        )

    def leading_monomial(self, order=DEGREVLEX):
        if not self.terms:
            raise InputError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order=DEGREVLEX):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order=DEGREVLEX):
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    def sorted_terms(self, order=DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.field == other.field and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.variables, other, self.field)
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, self.field, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = format_monomial(self.variables, e)
            neg = c < 0 if self.field.is_rational else False
            a = -c if neg else c
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


# ---------------------------------------------------------------------------
# Parsing.

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|(\S))")


def _tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("ident", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", position=m.start(3))
            toks.append((ch, ch, m.start(3)))
        pos = m.end()
    toks.append(("end", None, len(text.rstrip()) if text.strip() else len(text)))
    return toks


class _Parser:
    def __init__(self, text, variables, field):
        self.text = text
        self.variables = tuple(variables)
        self.field = field
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind):
        t = self.take()
        if t[0] != kind:
            raise ParseError(f"expected {kind!r}, found {self._describe(t)}", position=t[2])
        return t

    @staticmethod
    def _describe(t):
        return "end of input" if t[0] == "end" else repr(str(t[1]))

    def const(self, c):
        return Polynomial.constant(self.variables, c, self.field)

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", position=self.peek()[2])
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected {self._describe(t)}", position=t[2])
        return p

    def expr(self):
        # a leading sign is handled by factor()
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            if op[0] == "*":
                p = p * self.factor()
            else:
                t = self.peek()
                if t[0] != "int":
                    raise ParseError("only integer literals may follow '/'", position=t[2])
                self.take()
                d = t[1]
                if d == 0 or (self.field.characteristic and d % self.field.characteristic == 0):
                    raise ParseError(f"literal denominator {d} is not invertible in {self.field}", position=t[2])
                p = p.scale(self.field.inv(self.field(d)))
        return p

    def factor(self):
        t = self.peek()
        if t[0] == "-":
            self.take()
            return -self.factor()
        if t[0] == "+":
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            e = self.peek()
            if e[0] != "int":
                raise ParseError("exponent must be a nonnegative integer literal", position=e[2])
            self.take()
            base = base ** e[1]
        return base

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return self.const(t[1])
        if t[0] == "ident":
            if t[1] not in self.variables:
                raise ParseError(f"unknown variable {t[1]!r}", position=t[2])
            return Polynomial.variable(self.variables, t[1], self.field)
        if t[0] == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected {self._describe(t)}", position=t[2])


def parse_poly(text, variables, field=QQ):
    """Parse a polynomial expression such as ``"x^2 - 2*x*y + 1/3"``.

    Raises ParseError (with a 0-based ``position``) on malformed input,
    unknown variables, or literals whose denominator vanishes in the field.
    """
    variables = tuple(variables)
    for v in variables:
        if not _IDENT.match(v):
            raise InputError(f"invalid variable name {v!r}")
    if len(set(variables)) != len(variables):
        raise InputError("duplicate variable names")
    return _Parser(text, variables, field).parse()


# ---------------------------------------------------------------------------
# Groebner bases.


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _reduce(p, basis, order, full=True):
    """Remainder of p on division by ``basis`` (list of (lm, monic poly))."""
    f = p.field
    key = order.key
    rem = {}
    work = dict(p.terms)
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, g in basis:
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                for e, x in g.terms.items():
                    e2 = tuple(a + b for a, b in zip(e, shift))
                    v = f(work.get(e2, 0) - c * x)
                    if v:
                        work[e2] = v
                    else:
                        work.pop(e2, None)
                break
        else:
            rem[m] = c
            del work[m]
            if not full:
                rem.update(work)
                break
    return Polynomial._raw(p.variables, rem, f)


def _spoly(g, h, order):
    lg = g.leading_monomial(order)
    lh = h.leading_monomial(order)
    l = _lcm(lg, lh)
    a = g.shift(tuple(x - y for x, y in zip(l, lg)), h.leading_coefficient(order))
    b = h.shift(tuple(x - y for x, y in zip(l, lh)), g.leading_coefficient(order))
    return a - b


def buchberger(gens, order=DEGREVLEX):
    """Reduced Groebner basis (monic, sorted by leading monomial, smallest first).

    Pairs are processed by the normal selection strategy (smallest lcm
    first, ties broken by insertion index) so the run is deterministic.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    G = []
    pairs = []
    counter = 0

    def add(h):
        nonlocal counter
        h = h.monic(order)
        lh = h.leading_monomial(order)
        idx = len(G)
        G.append(h)
        for i, g in enumerate(G[:-1]):
            if g is None:
                continue
            lg = g.leading_monomial(order)
            l = _lcm(lg, lh)
            # product criterion: coprime leading monomials reduce to zero
            if all(min(a, b) == 0 for a, b in zip(lg, lh)):
                continue
            heapq.heappush(pairs, (order.key(l), counter, i, idx))
            counter += 1

    for g in gens:
        r = _reduce(g, [(h.leading_monomial(order), h) for h in G if h is not None], order)
        if not r.is_zero():
            add(r)
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        s = _spoly(G[i], G[j], order)
        basis = [(h.leading_monomial(order), h) for h in G]
        r = _reduce(s, basis, order)
        if not r.is_zero():
            add(r)
    return _interreduce(G, order)


def _interreduce(G, order):
    # drop elements whose leading monomial is divisible by another's
    G = sorted(G, key=lambda g: order.key(g.leading_monomial(order)))
    keep = []
    for g in G:
        lg = g.leading_monomial(order)
        if not any(_divides(h.leading_monomial(order), lg) for h in keep):
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = [(h.leading_monomial(order), h) for k, h in enumerate(keep) if k != i]
        lm = g.leading_monomial(order)
        rest = Polynomial._raw(g.variables, {e: c for e, c in g.terms.items() if e != lm}, g.field)
        r = _reduce(rest, others, order)
        out.append((Polynomial._raw(g.variables, {lm: g.terms[lm]}, g.field) + r).monic(order))
    return sorted(out, key=lambda g: order.key(g.leading_monomial(order)))


def normal_form(p, gb, order=DEGREVLEX):
    """Fully reduced remainder of p modulo a Groebner basis."""
    return _reduce(p, [(g.leading_monomial(order), g) for g in gb], order)


def is_zero_dimensional(gb, nvars, order=DEGREVLEX):
    if any(g.leading_monomial(order) == (0,) * nvars for g in gb):
        return True
    pure = set()
    for g in gb:
        lm = g.leading_monomial(order)
        nz = [i for i, x in enumerate(lm) if x]
        if len(nz) == 1:
            pure.add(nz[0])
    return len(pure) == nvars


def standard_monomials(gb, nvars, order=DEGREVLEX):
    """Monomials outside the leading-term ideal: by degree, then descending order."""
    if not is_zero_dimensional(gb, nvars, order):
        raise NotZeroDimensional("ideal is not zero-dimensional: some variable has no pure-power leading term")
    lms = [g.leading_monomial(order) for g in gb]
    if any(sum(l) == 0 for l in lms):
        return []
    seen = {(0,) * nvars}
    frontier = [(0,) * nvars]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(nvars):
                e = tuple(x + (k == i) for k, x in enumerate(m))
                if e in seen or any(_divides(l, e) for l in lms):
                    continue
                seen.add(e)
                nxt.append(e)
        frontier = nxt
    out = []
    for d in sorted({sum(e) for e in seen}):
        out.extend(sorted((e for e in seen if sum(e) == d), key=order.key, reverse=True))
    return out


@dataclass(frozen=True)
class QuotientPresentation:
    """K[variables]/(generators) with a chosen monomial order."""

    variables: tuple
    generators: tuple
    order: MonomialOrder = DEGREVLEX
    field: FieldSpec = QQ
    _gb: list = dc_field(default=None, compare=False, repr=False, hash=False)

    @classmethod
    def from_strings(cls, variables, relations, field=QQ, order=DEGREVLEX):
        variables = tuple(variables)
        gens = tuple(parse_poly(r, variables, field) for r in relations)
        return cls(variables, gens, order, field)

    def groebner(self):
        if self._gb is None:
            object.__setattr__(self, "_gb", buchberger(list(self.generators), self.order))
        return self._gb

    def reduce(self, p):
        return normal_form(p, self.groebner(), self.order)

    def parse(self, text):
        return parse_poly(text, self.variables, self.field)


def build_quotient_algebra(pres, check_local=False):
    """The FiniteAlgebra K[x]/I on the basis of standard monomials."""
    from .algebra import FiniteAlgebra

    gb = pres.groebner()
    n = len(pres.variables)
    basis = standard_monomials(gb, n, pres.order)
    if not basis:
        raise InputError("the relations generate the unit ideal")
    index = {e: i for i, e in enumerate(basis)}
    mu = len(basis)
    f = pres.field
    table = []
    cache = {}
    for i, a in enumerate(basis):
        row = []
        for j, b in enumerate(basis):
            if j < i:
                row.append(table[j][i])
                continue
            e = tuple(x + y for x, y in zip(a, b))
            if e not in cache:
                if e in index:
                    vec = [0] * mu
                    vec[index[e]] = 1
                else:
                    nf = normal_form(Polynomial._raw(pres.variables, {e: 1}, f), gb, pres.order)
                    vec = [0] * mu
                    for m, c in nf.terms.items():
                        vec[index[m]] = c
                cache[e] = tuple(vec)
            row.append(cache[e])
        table.append(row)
    labels = [format_monomial(pres.variables, e) for e in basis]
    unit = tuple(int(i == index[(0,) * n]) for i in range(mu))
    return FiniteAlgebra(f, labels, table, unit, presentation=pres, exponents=tuple(basis))
