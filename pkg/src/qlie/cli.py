"""Command line: generate tables, run verification suites, evaluate at a numeric q.

    qlie generate B 2 --format json
    qlie verify C 2 --suites all
    qlie eval B 2 --q 1

Exit codes: 0 success, 1 failed check, 2 usage error, 3 pole at the requested q.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from gmpy2 import mpq

from . import ring as R
from .closedform import build_closed_tables, verify_relations
from .qlabuild import H, X, gen_str, generators
from .rootdata import UnsupportedRank, build_root_system
from .suites import SUITES, Context, applicable, default_suites, run_suites

__all__ = ["main", "build_parser", "tables_document", "load_document", "render_text"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_POLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ tables

def _gen_json(g):
    return {"H": g[1]} if g[0] == "H" else {"X": list(g[1])}


def _gen_from_json(d):
    return H(d["H"]) if "H" in d else X(tuple(d["X"]))


def _source_tables(rs, family, source: str, tamper=None):
    """(tables, killing, calibration) for the requested source."""
    if rs.algebra == "A" or source == "closed":
        ct = build_closed_tables(rs, family)
        return ct, ct.kt, R.ONE
    ctx = Context(rs, tamper)
    return ctx.tables, ctx.kt, ctx.pipeline.lam


def tables_document(rs, t, kt, lam, family=None, fmt=R.to_str) -> dict:
    """Deterministic nested dict of every table; entries are rendered by ``fmt``."""
    l = rs.rank
    idx = range(1, l + 1)
    roots = list(rs.roots)
    doc = {
        "metadata": {
            "algebra": rs.algebra,
            "rank": l,
            "calibration": R.to_str(lam),
            "conventions": {
                "variable": "q^1/2 exponents are written as reduced halves, e.g. q^3/2",
                "s": "s is the positive square root of q + q^-1",
                "r2": "r2 is the square root of 2",
                "N": "[X_a, X_b] = N_ab X_(a+b)",
                "g": "[X_a, X_-a] = -sum_k g_a^k H_k",
                "r": "[X_a, H_i] = -r_a(H_i) X_a",
                "f3": "f_ijk = f_ij^m B(H_m, H_k)",
                "Binv_roots": "B^(-a,a) keyed by a",
            },
        },
        "tables": {},
    }
    if family is not None:
        doc["metadata"]["family"] = [str(Fraction(x)) for x in family]
    tab = doc["tables"]
    tab["l"] = [{"root": list(a), "i": i, "value": fmt(t.l[(a, i)])} for a in roots for i in idx]
    tab["r"] = [{"root": list(a), "i": i, "value": fmt(t.r[(a, i)])} for a in roots for i in idx]
    tab["g"] = [{"root": list(a), "k": k, "value": fmt(t.g[(a, k)])} for a in roots for k in idx]
    tab["f3"] = [{"i": i, "j": j, "k": k, "value": fmt(t.f3[(i, j, k)])}
                 for i in idx for j in idx for k in idx]
    tab["fud"] = [{"i": i, "j": j, "k": k, "value": fmt(t.fud[(i, j, k)])}
                  for i in idx for j in idx for k in idx]
    tab["N"] = [{"alpha": list(a), "beta": list(b), "value": fmt(t.get_N(a, b))}
                for a in roots for b in roots if rs.add_roots(a, b) is not None]
    gens = generators(rs)
    tab["B"] = [{"a": _gen_json(a), "b": _gen_json(b), "value": fmt(kt(a, b))}
                for a in gens for b in gens if not kt(a, b).is_zero()]
    tab["Binv_cartan"] = [{"i": i, "j": j, "value": fmt(kt.Binv_cartan[(i, j)])} for i in idx for j in idx]
    tab["Binv_roots"] = [{"root": list(a), "value": fmt(kt.Binv_roots[a])} for a in roots]
    return doc


def load_document(doc: dict) -> Dict[str, dict]:
    """Parse a generated document back into keyed ring elements."""
    tab = doc["tables"]
    out = {}
    for name in ("l", "r"):
        out[name] = {(tuple(e["root"]), e["i"]): R.parse(e["value"]) for e in tab[name]}
    out["g"] = {(tuple(e["root"]), e["k"]): R.parse(e["value"]) for e in tab["g"]}
    for name in ("f3", "fud"):
        out[name] = {(e["i"], e["j"], e["k"]): R.parse(e["value"]) for e in tab[name]}
    out["N"] = {(tuple(e["alpha"]), tuple(e["beta"])): R.parse(e["value"]) for e in tab["N"]}
    out["B"] = {(_gen_from_json(e["a"]), _gen_from_json(e["b"])): R.parse(e["value"]) for e in tab["B"]}
    out["Binv_cartan"] = {(e["i"], e["j"]): R.parse(e["value"]) for e in tab["Binv_cartan"]}
    out["Binv_roots"] = {tuple(e["root"]): R.parse(e["value"]) for e in tab["Binv_roots"]}
    return out


def _key_str(e: dict) -> str:
    parts = []
    for k in ("root", "alpha", "beta"):
        if k in e:
            parts.append("(" + ",".join(str(c) for c in e[k]) + ")")
    for k in ("a", "b"):
        if k in e:
            parts.append(gen_str(_gen_from_json(e[k])))
    for k in ("i", "j", "k"):
        if k in e:
            parts.append(f"{k}={e[k]}")
    return " ".join(parts)


def render_text(doc: dict) -> str:
    md = doc["metadata"]
    lines = [f"{md['algebra']}{md['rank']}  calibration {md['calibration']}"]
    for name, rows in doc["tables"].items():
        lines.append("")
        lines.append(f"[{name}]")
        keys = [_key_str(e) for e in rows]
        w = max((len(k) for k in keys), default=0)
        for k, e in zip(keys, rows):
            lines.append(f"  {k.ljust(w)}  {e['value']}")
    return "\n".join(lines) + "\n"


# -------------------------------------------------------------- evaluation

def _fmt_scalar(c) -> str:
    a, b = R.as_pair(c)
    if b == 0:
        return str(a)
    if a == 0:
        return f"{b}*r2"
    return f"{a} + {b}*r2"


def _exact_sqrt(x: Fraction) -> Optional[Fraction]:
    from math import isqrt
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _evaluator(q0: Fraction):
    """Map a ring element to its value at q = q0 (q=1 uses the classical limit)."""
    if q0 == 1:
        return lambda x: _fmt_scalar(R.eval_classical(x))
    v0 = _exact_sqrt(q0)
    if v0 is None:
        raise UsageError(f"--q {q0}: q must be the square of a positive rational so that q^1/2 is exact")

    def ev(x):
        a, b = R.eval_numeric(x, mpq(v0.numerator, v0.denominator))
        if b == 0:
            return _fmt_scalar(a)
        if a == 0:
            return f"({_fmt_scalar(b)})*s"
        return f"{_fmt_scalar(a)} + ({_fmt_scalar(b)})*s"
    return ev


def _singlet_residual(rs, t, q0: Fraction) -> List[str]:
    """Cartan-sector residual of the singlet relation, summed from evaluated entries."""
    if q0 == 1:
        val = R.eval_classical
    else:
        v0 = _exact_sqrt(q0)
        vv = mpq(v0.numerator, v0.denominator)
        sq = vv * vv + 1 / (vv * vv)

        def val(x):
            a, b = R.eval_numeric(x, vv)
            if b != 0:
                raise UsageError("residual entries carry s")  # never for l and f
            return a
    out = []
    for m in range(1, rs.rank + 1):
        tot = mpq(0)
        for a in rs.roots:
            tot = tot + val(t.l[(a, m)]) * val(R.qpow(-2 * rs.rho_dot(a)))
        for i in range(1, rs.rank + 1):
            tot = tot + val(t.fud[(m, i, i)])
        out.append(_fmt_scalar(tot))
    return out


# ---------------------------------------------------------------- commands

def _flip_first_N(sc):
    """Test hook: negate one N entry."""
    k = sorted(sc.N, key=str)[0]
    sc.N[k] = -sc.N[k]


def _write(text: str, path: Optional[str]):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def cmd_generate(args, rs) -> int:
    t, kt, lam = _source_tables(rs, args.family, args.source)
    doc = tables_document(rs, t, kt, lam, args.family if rs.algebra == "A" else None)
    _write(_dump(doc) if args.format == "json" else render_text(doc), args.output)
    return EXIT_OK


def cmd_verify(args, rs) -> int:
    names = _suite_names(args.suites, rs)
    tamper = _flip_first_N if args.inject_sign_error else None
    ctx = Context(rs, tamper)
    reports = run_suites(ctx, names)
    ok = all(r.ok for r in reports)
    if args.format == "json":
        doc = {
            "algebra": rs.algebra, "rank": rs.rank, "ok": ok,
            "suites": {r.title: [{"check": n, "ok": o, "detail": d} for n, o, d in r.items] for r in reports},
        }
        text = _dump(doc)
    else:
        lines = []
        for r in reports:
            lines.append(f"== {r.title}")
            lines.extend("  " + x for x in r.lines())
        lines.append("ALL PASS" if ok else "FAILURES")
        text = "\n".join(lines) + "\n"
    _write(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_eval(args, rs) -> int:
    if args.q is None:
        raise UsageError("eval requires --q")
    try:
        q0 = Fraction(args.q)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--q {args.q!r} is not a rational number")
    if q0 <= 0:
        raise UsageError("--q must be positive")
    ev = _evaluator(q0)
    t, kt, lam = _source_tables(rs, args.family, args.source)
    doc = tables_document(rs, t, kt, lam, args.family if rs.algebra == "A" else None, fmt=ev)
    doc["metadata"]["q"] = str(q0)
    doc["residuals"] = {"singlet relation per Cartan index": _singlet_residual(rs, t, q0)}
    _write(_dump(doc) if args.format == "json" else render_text(doc), args.output)
    return EXIT_OK


def _suite_names(text: Optional[str], rs) -> List[str]:
    if text is None or text == "all":
        return default_suites(rs)
    names = [s.strip() for s in text.split(",") if s.strip()]
    for n in names:
        if n not in SUITES:
            raise UsageError(f"unknown suite {n!r}; choose from {', '.join(SUITES)} or all")
        if not applicable(rs, n):
            raise UsageError(f"suite {n!r} does not apply to {rs.algebra}{rs.rank}")
    return names


def _family(text: str):
    try:
        s, t = (Fraction(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("family must be S,T with rational S and T")
    if s + t == 0:
        raise argparse.ArgumentTypeError("family requires s + t != 0")
    return (s, t)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qlie", description="Quantum Lie algebra structure constants.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, hlp in (("generate", "emit all structure-constant tables"),
                      ("verify", "run verification suites"),
                      ("eval", "evaluate all tables at a numeric q")):
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("algebra", choices=["A", "B", "C", "D"])
        sp.add_argument("rank", type=int)
        sp.add_argument("--format", choices=["json", "text"], default="json" if name != "verify" else "text")
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        sp.add_argument("--family", type=_family, default=(Fraction(1), Fraction(0)),
                        help="A series parameters S,T (default 1,0)")
        sp.add_argument("--source", choices=["pipeline", "closed"], default="pipeline",
                        help="tables from the intertwiner pipeline or the closed forms (A: closed only)")
        if name == "verify":
            sp.add_argument("--suites", default="all",
                            help="comma list of " + ", ".join(SUITES) + " or all")
            sp.add_argument("--inject-sign-error", action="store_true", help=argparse.SUPPRESS)
        if name == "eval":
            sp.add_argument("--q", help="rational value of q; must be a rational square unless 1")
    return p


def _threads() -> int:
    v = os.environ.get("QLA_THREADS", "1")
    try:
        n = int(v)
    except ValueError:
        raise UsageError(f"QLA_THREADS={v!r} is not an integer")
    if n < 1:
        raise UsageError("QLA_THREADS must be at least 1")
    return n


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and EXIT_USAGE
    try:
        _threads()
        rs = build_root_system(args.algebra, args.rank)
        cmd = {"generate": cmd_generate, "verify": cmd_verify, "eval": cmd_eval}[args.command]
        return cmd(args, rs)
    except (UsageError, UnsupportedRank) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except R.PoleError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_POLE


if __name__ == "__main__":
    sys.exit(main())
