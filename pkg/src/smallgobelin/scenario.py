"""Scenario files: a line-oriented description of an algebra, two elements
and two syzygies.

    # comment
    field Q                 (or: field Fp 32749)
    ring x, y
    relations x^2; y^2
    f1 = x
    f2 = y
    c11 = y
    c12 = -x
    c21 = 0
    c22 = 0
    max_degree 8            (optional, default 8)
    seed 0                  (optional, default 0)

Comments of the form ``# expect key: v1 v2 ...`` are kept as annotations.
"""

import re
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import InputError, ParseError
from .exactlin import GF, QQ
from .koszul import SyzygyPair
from .polyring import QuotientPresentation, build_quotient_algebra

__all__ = ["Scenario", "ELEMENT_KEYS", "parse_scenario", "load_scenario", "dump_scenario"]

ELEMENT_KEYS = ("f1", "f2", "c11", "c12", "c21", "c22")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_EXPECT = re.compile(r"#\s*expect\s+([A-Za-z0-9_]+)\s*:\s*(.*)\Z")


@dataclass
class Scenario:
    variables: tuple
    relations: tuple
    elements: dict
    field: object = QQ
    max_degree: int = 8
    seed: int = 0
    name: str = ""
    annotations: dict = dc_field(default_factory=dict)
    algebra_override: object = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.variables = tuple(self.variables)
        self.relations = tuple(self.relations)
        missing = [k for k in ELEMENT_KEYS if k not in self.elements]
        if missing:
            raise InputError(f"scenario is missing {', '.join(missing)}")
        if self.max_degree < 0:
            raise InputError("max_degree must be nonnegative")
        if not 0 <= self.seed < 2**64:
            raise InputError("seed must be an unsigned 64-bit integer")

    @cached_property
    def presentation(self):
        return QuotientPresentation.from_strings(list(self.variables), list(self.relations), field=self.field)

    @cached_property
    def algebra(self):
        if self.algebra_override is not None:
            return self.algebra_override
        return build_quotient_algebra(self.presentation)

    def pair(self, require_gorenstein=True):
        alg = self.algebra
        vals = [alg(self.elements[k]) for k in ELEMENT_KEYS]
        return SyzygyPair(alg, *vals, require_gorenstein=require_gorenstein)

    def dumps(self):
        return dump_scenario(self)

    def to_json(self):
        return {
            "name": self.name,
            "field": _field_text(self.field),
            "ring": list(self.variables),
            "relations": list(self.relations),
            "elements": {k: str(self.elements[k]) for k in ELEMENT_KEYS},
            "max_degree": self.max_degree,
            "seed": self.seed,
        }


def _field_text(f):
    return "Q" if f.characteristic == 0 else f"Fp {f.characteristic}"


def _int(text, line, col, what):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}", line=line, column=col) from None


def parse_scenario(text, name=""):
    """Parse scenario text; every syntax error carries line and column."""
    seen = {}
    elements = {}
    annotations = {}
    fld = None
    variables = None
    relations = []
    max_degree = 8
    seed = 0
    poly_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            m = _EXPECT.match(stripped)
            if m:
                annotations[m.group(1)] = m.group(2).strip()
            continue
        body = raw.split("#", 1)[0].rstrip()
        indent = len(body) - len(body.lstrip())
        body = body.strip()
        if "=" in body:
            key, _, rest = body.partition("=")
            key = key.strip()
            value_col = indent + body.index("=") + 2
        else:
            key, _, rest = body.partition(" ")
            value_col = indent + len(key) + 2
        lead = len(rest) - len(rest.lstrip())
        value_col += lead
        value = rest.strip()
        if key in seen:
            raise ParseError(f"duplicate key {key!r} (first on line {seen[key]})", line=lineno, column=indent + 1)
        seen[key] = lineno
        if key in ELEMENT_KEYS:
            if not value:
                raise ParseError(f"{key} needs a polynomial", line=lineno, column=value_col)
            elements[key] = value
            poly_lines.append((key, value, lineno, value_col))
        elif key == "field":
            parts = value.split()
            if parts == ["Q"]:
                fld = QQ
            elif len(parts) == 2 and parts[0] == "Fp":
                p = _int(parts[1], lineno, value_col + 3, "characteristic")
                try:
                    fld = GF(p)
                except InputError as e:
                    raise ParseError(str(e), line=lineno, column=value_col + 3) from None
            else:
                raise ParseError(f"field must be 'Q' or 'Fp <p>', got {value!r}", line=lineno, column=value_col)
        elif key == "ring":
            names = [v.strip() for v in value.split(",")]
            for v in names:
                if not _IDENT.match(v):
                    raise ParseError(f"bad variable name {v!r}", line=lineno, column=value_col)
            if len(set(names)) != len(names):
                raise ParseError("repeated variable name", line=lineno, column=value_col)
            variables = names
        elif key == "relations":
            relations = [(r.strip(), lineno, value_col + value.find(r.strip()) if r.strip() else value_col)
                         for r in value.split(";")]
            relations = [r for r in relations if r[0]]
        elif key == "max_degree":
            max_degree = _int(value, lineno, value_col, "max_degree")
            if max_degree < 0:
                raise ParseError("max_degree must be nonnegative", line=lineno, column=value_col)
        elif key == "seed":
            seed = _int(value, lineno, value_col, "seed")
            if not 0 <= seed < 2**64:
                raise ParseError("seed must be an unsigned 64-bit integer", line=lineno, column=value_col)
        else:
            raise ParseError(f"unknown key {key!r}", line=lineno, column=indent + 1)
    if variables is None:
        raise ParseError("missing 'ring' line")
    missing = [k for k in ELEMENT_KEYS if k not in elements]
    if missing:
        raise ParseError(f"missing {', '.join(missing)}")
    fld = fld or QQ
    # syntax-check every polynomial now so errors point at the file
    from .polyring import parse_poly

    for text_, lineno, col in relations:
        _check_poly(parse_poly, text_, variables, fld, lineno, col)
    for _, text_, lineno, col in poly_lines:
        _check_poly(parse_poly, text_, variables, fld, lineno, col)
    return Scenario(variables, [r[0] for r in relations], elements, fld, max_degree, seed, name, annotations)


def _check_poly(parse_poly, text, variables, fld, lineno, col):
    try:
        parse_poly(text, variables, fld)
    except ParseError as e:
        pos = e.position or 0
        raise ParseError(e.message, position=e.position, line=lineno, column=col + pos) from None


def load_scenario(path):
    from pathlib import Path

    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path} is not valid UTF-8") from None
    return parse_scenario(text, name=p.stem)


def dump_scenario(sc):
    lines = []
    if sc.name:
        lines.append(f"# {sc.name}")
    for k, v in sc.annotations.items():
        lines.append(f"# expect {k}: {v}")
    lines.append(f"field {_field_text(sc.field)}")
    lines.append("ring " + ", ".join(sc.variables))
    if sc.relations:
        lines.append("relations " + "; ".join(sc.relations))
    for k in ELEMENT_KEYS:
        lines.append(f"{k} = {sc.elements[k]}")
    lines.append(f"max_degree {sc.max_degree}")
    lines.append(f"seed {sc.seed}")
    return "\n".join(lines) + "\n"
