"""Named verification suites, shared by the command line and the tests."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import ring as R
from .checks import (
    compare_tables, verify_classical_limit, verify_root_simplicity,
    verify_symmetries,
)
from .closedform import (
    build_closed_tables, c2_reference_check, closed_l, verify_relations, xi_factor,
)
from .killing import (
    cartan_inverse, closed_killing, compute_killing, dagger_form, verify_ad_invariance,
    verify_dagger,
)
from .qlabuild import Pipeline, StructureConstants, generators
from .rootdata import RootSystem
from .tensordecomp import (
    build_submodule_bases, check_top_vectors_numeric, verify_completeness,
    verify_tabulated_duals, verify_submodule,
)
from .vectorrep import Report, build_vector_rep, verify_defining_relations

__all__ = ["SUITES", "Context", "run_suites", "default_suites", "random_family"]

SUITES = ("rep", "submodule", "pipeline", "killing", "relations", "classical", "c2", "alseries")


class Context:
    """Lazily built objects for one (algebra, rank), shared between suites.

    ``tamper`` is applied to the extracted tables right after extraction and
    exists so that a deliberately corrupted table can be fed through the
    checks."""

    def __init__(self, rs: RootSystem, tamper: Optional[Callable[[StructureConstants], None]] = None):
        self.rs = rs
        self.tamper = tamper
        self._pipe = None
        self._sc = None
        self._kt = None

    @property
    def kt(self):
        if self._kt is None:
            self._kt = closed_killing(self.rs)
        return self._kt

    @property
    def pipeline(self) -> Pipeline:
        if self._pipe is None:
            p = Pipeline(self.rs)
            p.set_calibration(closed_l(self.rs, self.rs.simple_roots[0], 1))
            self._pipe = p
        return self._pipe

    @property
    def tables(self) -> StructureConstants:
        if self._sc is None:
            sc = self.pipeline.structure_constants(self.kt.cartan())
            if self.tamper is not None:
                self.tamper(sc)
            self._sc = sc
        return self._sc


def _rep(ctx: Context) -> Report:
    rs = ctx.rs
    return verify_defining_relations(build_vector_rep(rs), rs)


def _submodule(ctx: Context) -> Report:
    rs = ctx.rs
    dec = build_submodule_bases(rs, build_vector_rep(rs))
    rpt = Report("submodules")
    for lab in dec.bases:
        rpt.extend(verify_submodule(dec, lab), f"{lab}: ")
    rpt.extend(verify_completeness(dec))
    rpt.extend(verify_tabulated_duals(dec))
    rpt.extend(check_top_vectors_numeric(dec))
    return rpt


def _pipeline(ctx: Context) -> Report:
    rs = ctx.rs
    rpt = Report("pipeline")
    sc = ctx.tables
    rpt.check("calibration scalar is 1", ctx.pipeline.lam == R.ONE, R.to_str(ctx.pipeline.lam))
    rpt.check("grading: every bracket has the prescribed shape", not sc.violations,
              sc.violations[0] if sc.violations else "")
    ct = build_closed_tables(rs, kt=ctx.kt)
    rpt.extend(compare_tables(sc, ct), "pipeline = closed form, ")
    rpt.extend(verify_symmetries(sc, ctx.kt, lambda i: xi_factor(rs, i)))
    rpt.extend(verify_root_simplicity(sc))
    return rpt


def _killing(ctx: Context) -> Report:
    rs = ctx.rs
    rpt = Report("killing")
    closed = ctx.kt
    l = rs.rank
    bc = closed.cartan()
    prod_ok = True
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            v = sum((bc[(i, m)] * closed.Binv_cartan[(m, j)] for m in range(1, l + 1)), R.ZERO)
            if v != (R.ONE if i == j else R.ZERO):
                prod_ok = False
    rpt.check("closed Cartan inverse: B_im B^mj = delta", prod_ok)
    inv = cartan_inverse(bc, l)
    rpt.check("closed Cartan inverse equals Gauss-Jordan inverse",
              all(inv[k] == closed.Binv_cartan[k] for k in inv))
    if rs.algebra == "A":
        return rpt
    comp = compute_killing(ctx.pipeline.real)
    keys = set(comp.B) | set(closed.B)
    bad = [k for k in keys if comp(*k) != closed(*k)]
    rpt.check(f"intertwiner Killing form equals closed table ({len(keys)} entries)", not bad, str(bad[:1]))
    n_random = 5000 if rs.rank > 3 else 0
    rpt.extend(verify_ad_invariance(rs, ctx.pipeline.bracket, closed, n_random=n_random))
    triples = None
    if rs.rank > 3:
        rng = random.Random(1)
        gens = generators(rs)
        triples = [(rng.choice(gens), rng.choice(gens), rng.choice(gens)) for _ in range(5000)]
    rpt.extend(verify_dagger(rs, ctx.pipeline.bracket, dagger_form(rs, bc), triples))
    return rpt


def _relations(ctx: Context) -> Report:
    rpt, ap = verify_relations(ctx.tables, ctx.kt)
    rpt.check(f"A' = {R.to_str(ap)}", ap is not None and not ap.is_zero())
    return rpt


def _classical(ctx: Context) -> Report:
    n = 10000 if ctx.rs.rank > 3 else 0
    return verify_classical_limit(ctx.tables, n_random=n)


def _c2(ctx: Context) -> Report:
    return c2_reference_check(ctx.tables)


def random_family(seed: int, n: int = 5):
    """n rational (s, t) with s + t != 0."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        s = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        t = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if s + t != 0:
            out.append((s, t))
    return out


def _alseries(ctx: Context, seed: int = 7) -> Report:
    rs = ctx.rs
    rpt = Report("A family")
    for s, t in random_family(seed):
        ct = build_closed_tables(rs, (s, t), kt=ctx.kt)
        tag = f"(s,t)=({s},{t}) "
        rpt.extend(verify_symmetries(ct, ctx.kt), tag)
        rel, _ = verify_relations(ct, ctx.kt)
        rpt.extend(rel, tag)
        rpt.extend(verify_classical_limit(ct), tag)
    return rpt


_RUNNERS: Dict[str, Callable[[Context], Report]] = {
    "rep": _rep, "submodule": _submodule, "pipeline": _pipeline, "killing": _killing,
    "relations": _relations, "classical": _classical, "c2": _c2, "alseries": _alseries,
}


def applicable(rs: RootSystem, name: str) -> bool:
    if rs.algebra == "A":
        return name in ("killing", "alseries")
    if name == "alseries":
        return False
    if name == "c2":
        return (rs.algebra, rs.rank) == ("C", 2)
    return True


def default_suites(rs: RootSystem) -> List[str]:
    return [n for n in SUITES if applicable(rs, n)]


def run_suites(ctx: Context, names) -> List[Report]:
    out = []
    for n in names:
        if not applicable(ctx.rs, n):
            raise ValueError(f"suite {n!r} does not apply to {ctx.rs.algebra}{ctx.rs.rank}")
        rpt = _RUNNERS[n](ctx)
        rpt.title = n
        out.append(rpt)
    return out
