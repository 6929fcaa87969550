"""Command-line front end.

Exit codes: 0 success, 1 verification or hypothesis failure, 2 input error.
"""

import argparse
import json
import re
import sys
import time
from importlib import resources
from pathlib import Path

from . import __version__
from .errors import GobelinError, InputError
from .exactlin import GF, QQ
from .flags import compute_flags
from .gobelin import build
from .harness import FAMILIES, SUITES, ScenarioInvalid, analyze, check_family, corpus, family, run_suite
from .scenario import dump_scenario, load_scenario

__all__ = ["main", "build_parser", "report_schema", "make_report"]

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def report_schema():
    return json.loads(resources.files("smallgobelin").joinpath("report_schema.json").read_text(encoding="utf-8"))


def make_report(sc, diagnostics=None, hyper=None, flags=None, suites=None, timing=None):
    doc = {"version": __version__, "scenario": sc.to_json()}
    if diagnostics is not None:
        doc["diagnostics"] = diagnostics
    if hyper is not None:
        doc["hyper"] = hyper
    if flags is not None:
        doc["flags"] = flags
    if suites is not None:
        doc["suites"] = suites
    if timing is not None:
        doc["timing"] = timing
    return doc


def _flags_json(fr):
    d = fr.dims()
    d["stab"] = dict(fr.stab)
    return d


def _emit(doc, fmt, text_lines, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _pair(sc, args):
    """The SyzygyPair of a scenario, honoring --no-local-check."""
    if getattr(args, "no_local_check", False):
        return sc.pair(require_gorenstein=False)
    return analyze(sc).pair


# ---------------------------------------------------------------------------


def cmd_check(args):
    sc = load_scenario(args.scenario)
    t = time.perf_counter()
    s = _pair(sc, args)
    diag = s.diagnostics()
    lines = [f"{sc.name or args.scenario}: ok"]
    lines += [f"{k}={v}" for k, v in diag.items()]
    doc = make_report(sc, diagnostics=diag, timing={"seconds": time.perf_counter() - t})
    _emit(doc, args.format, lines)
    return EXIT_OK


def cmd_hyper(args):
    sc = load_scenario(args.scenario)
    J = args.max_degree if args.max_degree is not None else sc.max_degree
    if J < 0:
        raise InputError("--max-degree must be nonnegative")
    t = time.perf_counter()
    s = _pair(sc, args)
    which = args.complex.upper() + ("dual" if args.dual else "")
    dims = build(s, which, J).dims()
    key = args.complex + ("_dual" if args.dual else "")
    sym = "H^" if args.dual else "H_"
    lines = [f"{sym}{j}({args.complex.upper()}{'*' if args.dual else ''}) = {d}" for j, d in enumerate(dims)]
    doc = make_report(sc, hyper={key: dims}, timing={"seconds": time.perf_counter() - t})
    _emit(doc, args.format, lines)
    return EXIT_OK


def cmd_flags(args):
    sc = load_scenario(args.scenario)
    t = time.perf_counter()
    s = _pair(sc, args)
    fr = compute_flags(s)
    fj = _flags_json(fr)
    lines = []
    for key, label in (("L", "L"), ("F", "F"), ("Lp", "L'"), ("Fp", "F'")):
        dims = " ".join(str(d) for d in fj[key])
        lines.append(f"dim {label}_j, j = 0..: {dims}   stabilizes at j = {fr.stab[key]}")
    doc = make_report(sc, flags=fj, timing={"seconds": time.perf_counter() - t})
    _emit(doc, args.format, lines)
    return EXIT_OK


def cmd_verify(args):
    sc = load_scenario(args.scenario)
    t = time.perf_counter()
    a = analyze(sc)
    res = run_suite(sc, args.suite)
    verdicts = res if isinstance(res, list) else [res]
    if args.family:
        verdicts.append(check_family(sc))
    verdicts.sort(key=lambda v: v.name)
    ok = all(v.passed for v in verdicts)
    lines = []
    for v in verdicts:
        n_ok = sum(c.passed for c in v.checks)
        lines.append(f"{v.name:8s} {'PASS' if v.passed else 'FAIL'} ({n_ok}/{len(v.checks)} checks)")
    first = next((v.first_failure for v in verdicts if not v.passed), None)
    if first is not None:
        lines.append(f"first failing check: {first.name}: expected {first.expected}, got {first.actual}")
    doc = make_report(
        sc,
        diagnostics=a.pair.diagnostics(),
        hyper=a.hyper(),
        flags=_flags_json(a.flags),
        suites=[v.to_json() for v in verdicts],
        timing={"seconds": time.perf_counter() - t},
    )
    _emit(doc, args.format, lines)
    return EXIT_OK if ok else EXIT_FAIL


def _parse_field(text):
    parts = text.split()
    if parts == ["Q"]:
        return QQ
    if len(parts) == 2 and parts[0] == "Fp" and parts[1].isdigit():
        return GF(int(parts[1]))
    raise InputError(f"field must be 'Q' or 'Fp <p>', got {text!r}")


def _slug(text):
    return re.sub(r"[^A-Za-z0-9]+", "-", text).strip("-").lower()


def cmd_family(args):
    kw = dict(
        ring=tuple(v.strip() for v in args.ring.split(",")),
        relations=tuple(r.strip() for r in args.relations.split(";") if r.strip()),
        f1=args.f1,
        f2=args.f2,
        tau2=tuple(x.strip() for x in args.tau2.split(",")),
        g=args.g,
        b1=args.b1,
        b2=args.b2,
        field=_parse_field(args.field),
        max_degree=args.max_degree,
        seed=args.seed,
    )
    if len(kw["tau2"]) != 2:
        raise InputError("--tau2 needs two comma-separated entries")
    scs = family(args.name, **kw)
    return _write_scenarios(scs, args.out, args.name)


def cmd_corpus(args):
    return _write_scenarios(corpus(), args.out, None)


def _write_scenarios(scs, out, prefix):
    if out is None:
        sys.stdout.write("\n".join(dump_scenario(sc) for sc in scs))
        return EXIT_OK
    d = Path(out)
    d.mkdir(parents=True, exist_ok=True)
    for i, sc in enumerate(scs):
        stem = f"{prefix}-{i}" if prefix else _slug(sc.name)
        p = d / f"{stem}.scn"
        p.write_text(dump_scenario(sc), encoding="utf-8")
        print(p)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="smallgobelin", description="Hyperhomology of small Gobelins over Gorenstein algebras.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def scenario_cmd(name, help_, fmt=True):
        q = sub.add_parser(name, help=help_)
        q.add_argument("scenario", help="scenario file")
        if fmt:
            q.add_argument("--format", choices=("text", "json"), default="text")
        return q

    q = scenario_cmd("check", "validate a scenario and print its invariants")
    q.add_argument("--no-local-check", action="store_true", help="skip the local Gorenstein check")
    q.set_defaults(func=cmd_check)

    q = scenario_cmd("hyper", "dimensions of the hyperhomology of G1 or G2")
    q.add_argument("--complex", choices=("g1", "g2"), default="g2")
    q.add_argument("--dual", action="store_true", help="hypercohomology of the dual complex")
    q.add_argument("--max-degree", type=int, default=None)
    q.add_argument("--no-local-check", action="store_true")
    q.set_defaults(func=cmd_hyper)

    q = scenario_cmd("flags", "the flags L, F, L', F' and their stabilization")
    q.add_argument("--no-local-check", action="store_true")
    q.set_defaults(func=cmd_flags)

    q = scenario_cmd("verify", "run verification suites")
    q.add_argument("--suite", choices=SUITES + ("all",), default="all")
    q.add_argument("--family", action="store_true", help="also check '# expect' annotations of a family file")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("family", help="write scenarios of an example family")
    q.add_argument("name", choices=FAMILIES)
    q.add_argument("--field", default="Q")
    q.add_argument("--ring", default="x")
    q.add_argument("--relations", default="x^4")
    q.add_argument("--f1", default="x^2")
    q.add_argument("--f2", default="x^3")
    q.add_argument("--tau2", default="x,-1", help="second syzygy as 'c21,c22'")
    q.add_argument("--g", default="x", help="multiplier for g_multiple")
    q.add_argument("--b1", default="1")
    q.add_argument("--b2", default=None)
    q.add_argument("--max-degree", type=int, default=8)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--out", default=None, help="directory for the generated files (default: stdout)")
    q.set_defaults(func=cmd_family)

    q = sub.add_parser("corpus", help="write the built-in scenario corpus")
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_corpus)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ScenarioInvalid as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL if e.hypothesis else EXIT_INPUT
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except GobelinError as e:
        # a hypothesis of the construction fails (syzygy row, Gorenstein, unit, ...)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
