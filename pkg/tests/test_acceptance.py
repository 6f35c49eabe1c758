"""Acceptance criteria, one PASS/FAIL line each, all comparisons exact.

Run directly with ``python tests/test_acceptance.py`` or through pytest; the
lines are repeated in the pytest terminal summary."""
import os
import sys
import time

sys.path.insert(0, os.path.dirname(__file__))

from qlie import ring as R  # noqa: E402
from qlie.checks import compare_tables, verify_classical_limit, verify_symmetries  # noqa: E402
from qlie.closedform import build_closed_tables, verify_relations, xi_factor, c2_reference_check  # noqa: E402
from qlie.killing import cartan_inverse, compute_killing  # noqa: E402
from qlie.suites import run_suites  # noqa: E402
from qlie.vectorrep import Report  # noqa: E402

from conftest import A_CASES, CASES, ctx_of  # noqa: E402

RESULTS = []


def _record(n, title, reports, extra=""):
    failures = [(r.title, name, d) for r in reports for name, d in r.failures()]
    checks = sum(len(r.items) for r in reports)
    status = "PASS" if not failures else "FAIL"
    detail = f"{checks} checks" + (f"; {extra}" if extra else "")
    if failures:
        detail += f"; first failure {failures[0]}"
    line = f"criterion {n} {status}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    return not failures


def _label(alg, rank):
    return f"{alg}{rank}"


def test_criterion_1_pipeline_equals_closed_form():
    t0 = time.time()
    reports = []
    for alg, rank in CASES:
        ctx = ctx_of(alg, rank)
        rpt = Report(_label(alg, rank))
        sc = ctx.tables
        rpt.check("single calibration scalar equals 1", ctx.pipeline.lam == R.ONE)
        rpt.extend(compare_tables(sc, build_closed_tables(ctx.rs, kt=ctx.kt)))
        reports.append(rpt)
    dt = time.time() - t0
    ok = _record(1, "pipeline constants equal closed forms with one scalar", reports,
                 f"{dt:.1f}s, budget 300s")
    assert ok and dt < 300


def test_criterion_2_killing_form():
    reports = []
    for alg, rank in CASES + A_CASES:
        ctx = ctx_of(alg, rank)
        rs, closed = ctx.rs, ctx.kt
        l = rs.rank
        rpt = Report(_label(alg, rank))
        if alg != "A":
            comp = compute_killing(ctx.pipeline.real)
            keys = set(comp.B) | set(closed.B)
            rpt.check("intertwiner form equals closed form",
                      all(comp(*k) == closed(*k) for k in keys))
        bc = closed.cartan()
        rpt.check("closed Cartan inverse equals exact inverse",
                  cartan_inverse(bc, l) == closed.Binv_cartan)
        rpt.check("B_im B^mj = delta", all(
            sum((bc[(i, m)] * closed.Binv_cartan[(m, j)] for m in range(1, l + 1)), R.ZERO)
            == (R.ONE if i == j else R.ZERO)
            for i in range(1, l + 1) for j in range(1, l + 1)))
        reports.append(rpt)
    assert _record(2, "Killing form, closed tables and Cartan inverse", reports)


def test_criterion_3_symmetries():
    reports = []
    for alg, rank in CASES:
        ctx = ctx_of(alg, rank)
        rpt = verify_symmetries(ctx.tables, ctx.kt, lambda i, rs=ctx.rs: xi_factor(rs, i))
        rpt.check("grading", not ctx.tables.violations)
        rpt.title = _label(alg, rank)
        reports.append(rpt)
    assert _record(3, "q-antisymmetry, f symmetry, f/B row laws, grading", reports)


def test_criterion_4_relations():
    reports = []
    consts = []
    for alg, rank in CASES:
        ctx = ctx_of(alg, rank)
        rpt, ap = verify_relations(ctx.tables, ctx.kt)
        rpt.check("A' extracted", ap is not None)
        rpt.title = _label(alg, rank)
        consts.append(f"{rpt.title}: A'={R.to_str(ap)}" if ap is not None else rpt.title)
        reports.append(rpt)
    ok = _record(4, "consistency relations with a single A' per case", reports)
    for c in consts:
        print("   ", c)
    assert ok


def test_criterion_5_c2_reference():
    ctx = ctx_of("C", 2)
    rpt = c2_reference_check(ctx.tables)
    assert _record(5, "C2 left roots and N/(q+q^-1)^1/2 table reproduced", [rpt])


def test_criterion_6_classical_limit():
    reports = []
    for alg, rank in CASES:
        n = 10000 if rank > 3 else 0
        rpt = verify_classical_limit(ctx_of(alg, rank).tables, n_random=n, seed=2024)
        rpt.title = _label(alg, rank)
        reports.append(rpt)
    assert _record(6, "q=1 antisymmetry, Jacobi, f=0, l=r", reports,
                   "full sweep rank<=3, 10^4 random triples for D4")


def test_criterion_7_a_family():
    reports = []
    for alg, rank in A_CASES:
        reports += run_suites(ctx_of(alg, rank), ["killing", "alseries"])
    assert _record(7, "A family at 5 random (s,t), l=1,2,3", reports)


def test_criterion_8_module_verifications():
    reports = []
    for alg, rank in CASES:
        for r in run_suites(ctx_of(alg, rank), ["rep", "submodule"]):
            r.title = f"{_label(alg, rank)} {r.title}"
            reports.append(r)
    assert _record(8, "vector rep relations and submodule bases", reports)


if __name__ == "__main__":
    ok = True
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                ok = False
    sys.exit(0 if ok else 1)
