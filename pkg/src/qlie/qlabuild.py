"""Quantum Lie algebra structure constants from the vector (x) vector CGCs.

The bracket of two generators a, b is the composed intertwiner

    [a, b] = sum_c  lam * sum_{i,j,k,l} A[i,j] T[j,k] B[k,l] D_c[i,l]  c

where A, B are the tensor components of the generators, T the dual of the
singlet (t / <t,t>) and D_c the dual covector of generator c.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Tuple

from . import ring as R
from .linalg import inverse
from .rootdata import Root, RootSystem, build_root_system
from .tensordecomp import (
    Decomposition, TensorVec, build_submodule_bases, pair, tv_add, tv_scale, tv_weight,
)
from .vectorrep import Report, bar_map, build_vector_rep

Gen = Tuple[str, object]  # ("X", root) or ("H", i) with 1-based i

__all__ = [
    "Gen", "X", "H", "AdjointRealization", "StructureConstants", "build_adjoint_realization",
    "bracket", "raw_bracket", "extract_structure_constants", "calibrate", "Pipeline",
    "GradingViolation", "gen_str",
]


class GradingViolation(ValueError):
    pass


def X(root) -> Gen:
    return ("X", tuple(root))


def H(i: int) -> Gen:
    return ("H", i)


def gen_str(g: Gen) -> str:
    if g[0] == "H":
        return f"H{g[1]}"
    return "X" + "(" + ",".join(str(c) for c in g[1]) + ")"


def generators(rs: RootSystem) -> List[Gen]:
    return [X(r) for r in rs.roots] + [H(i) for i in range(1, rs.rank + 1)]


@dataclass
class AdjointRealization:
    rs: RootSystem
    dec: Decomposition
    xi: R.RingElem
    vectors: Dict[Gen, TensorVec]
    duals: Dict[Gen, TensorVec]
    singlet_dual: TensorVec

    @property
    def gens(self) -> List[Gen]:
        return generators(self.rs)


def _root_table(rs: RootSystem):
    """Generator -> list of (basis key, coefficient / xi), per the identification tables."""
    alg, l = rs.algebra, rs.rank
    bar = lambda i: bar_map(alg, l, i)
    S = R.S
    qplus = R.qpow(1) + R.qpow(-1)
    tab: Dict[Gen, List[Tuple[Hashable, R.RingElem]]] = {}
    one = R.ONE

    def e(i):
        return rs.eps(i)

    def add(*vs):
        return tuple(sum(c) for c in zip(*vs))

    def neg(v):
        return tuple(-c for c in v)

    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            dm = add(e(i), neg(e(j)))
            dp = add(e(i), e(j))
            if alg == "C":
                sg = R.const((-1) ** (j - i))
                tab[X(dm)] = [(("p", i, bar(j)), sg)]
                tab[X(dp)] = [(("p", i, j), -sg)]
            else:
                tab[X(dm)] = [(("p", i, bar(j)), one)]
                tab[X(dp)] = [(("p", i, j), one)]
            tab[X(neg(dm))] = [(("p", j, bar(i)), one)]
            tab[X(neg(dp))] = [(("p", bar(j), bar(i)), one)]
    for j in range(1, l + 1):
        if alg == "B":
            tab[X(e(j))] = [(("p", j, l + 1), one)]
            tab[X(neg(e(j)))] = [(("p", l + 1, bar(j)), one)]
        elif alg == "C":
            tab[X(rs.eps(j, 2))] = [(("p", j, j), -S)]
            tab[X(rs.eps(j, -2))] = [(("p", bar(j), bar(j)), S)]
    for i in range(1, l + 1):
        if alg == "C":
            tab[H(i)] = [(("c", i), R.const((-1) ** (l + 1)))]
        elif alg == "D" and i == l:
            tab[H(i)] = [(("c", l - 1), one), (("c", l), qplus)]
        else:
            tab[H(i)] = [(("c", i), one)]
    return tab


def build_adjoint_realization(rs: RootSystem, dec: Optional[Decomposition] = None) -> AdjointRealization:
    if dec is None:
        dec = build_submodule_bases(rs, build_vector_rep(rs))
    basis = dec.adjoint
    t = dec.singlet
    tt = pair(t, t)
    xi = (R.qpow(1) + R.qpow(-1)) * tt
    tab = _root_table(rs)
    missing = [g for g in generators(rs) if g not in tab]
    if missing:
        raise KeyError(f"no identification for {missing}")
    if len(tab) != len(basis.keys):
        raise ValueError("generator count differs from adjoint dimension")
    vectors, duals = {}, {}
    for g, combo in tab.items():
        v = {}
        for k, c in combo:
            v = tv_add(v, basis.vectors[k], c * xi)
        vectors[g] = v
    # duals: invert the generator-to-basis matrix (block diagonal up to the Cartan part)
    cart = [H(i) for i in range(1, rs.rank + 1)]
    ckeys = [("c", i) for i in range(1, rs.rank + 1) if ("c", i) in basis.vectors]
    for g, combo in tab.items():
        if g[0] == "X":
            (k, c), = combo
            duals[g] = tv_scale(basis.duals[k], (c * xi).inverse())
    mat = [[R.ZERO] * len(ckeys) for _ in cart]
    for a, g in enumerate(cart):
        for k, c in tab[g]:
            mat[a][ckeys.index(k)] = c * xi
    inv = inverse(mat, R.ZERO, R.ONE)  # inv[k][g]
    for a, g in enumerate(cart):
        d = {}
        for b, k in enumerate(ckeys):
            if not inv[b][a].is_zero():
                d = tv_add(d, basis.duals[k], inv[b][a])
        duals[g] = d
    tstar = tv_scale(t, tt.inverse())
    return AdjointRealization(rs, dec, xi, vectors, duals, tstar)


def contract(real: AdjointRealization, a: Gen, b: Gen) -> TensorVec:
    """M[i,l] = sum_{j,k} A[i,j] T[j,k] B[k,l]."""
    A, B, T = real.vectors[a], real.vectors[b], real.singlet_dual
    trow: Dict[int, List[Tuple[int, R.RingElem]]] = {}
    for (j, k), c in T.items():
        trow.setdefault(j, []).append((k, c))
    brow: Dict[int, List[Tuple[int, R.RingElem]]] = {}
    for (k, l), c in B.items():
        brow.setdefault(k, []).append((l, c))
    mid: Dict[Tuple[int, int], R.RingElem] = {}
    for (i, j), ca in A.items():
        for k, ct in trow.get(j, ()):
            key = (i, k)
            mid[key] = mid.get(key, R.ZERO) + ca * ct
    out: Dict[Tuple[int, int], R.RingElem] = {}
    for (i, k), cm in mid.items():
        if cm.is_zero():
            continue
        for l, cb in brow.get(k, ()):
            key = (i, l)
            out[key] = out.get(key, R.ZERO) + cm * cb
    return {k: v for k, v in out.items() if not v.is_zero()}


def raw_bracket(real: AdjointRealization, a: Gen, b: Gen) -> Dict[Gen, R.RingElem]:
    """Uncalibrated bracket coefficients over all generators (zeros dropped)."""
    m = contract(real, a, b)
    out = {}
    if not m:
        return out
    for c in real.gens:
        v = pair(real.duals[c], m)
        if not v.is_zero():
            out[c] = v
    return out


def bracket(real: AdjointRealization, a: Gen, b: Gen, lam: R.RingElem) -> Dict[Gen, R.RingElem]:
    return {c: v * lam for c, v in raw_bracket(real, a, b).items()}


@dataclass
class StructureConstants:
    rs: RootSystem
    l: Dict[Tuple[Root, int], R.RingElem] = field(default_factory=dict)
    r: Dict[Tuple[Root, int], R.RingElem] = field(default_factory=dict)
    fud: Dict[Tuple[int, int, int], R.RingElem] = field(default_factory=dict)
    f3: Dict[Tuple[int, int, int], R.RingElem] = field(default_factory=dict)
    g: Dict[Tuple[Root, int], R.RingElem] = field(default_factory=dict)
    N: Dict[Tuple[Root, Root], R.RingElem] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)

    def get_N(self, a, b) -> R.RingElem:
        return self.N.get((tuple(a), tuple(b)), R.ZERO)


def _single(m: Dict[Gen, R.RingElem], target: Optional[Gen]):
    """Coefficient of target and whether any other generator appears."""
    extra = [c for c in m if c != target]
    return m.get(target, R.ZERO), extra


def extract_structure_constants(
    rs: RootSystem, brk, killing_cartan=None
) -> StructureConstants:
    """Read off l, r, f, g, N from a bracket callable brk(a, b) -> coefficient map.

    killing_cartan, if given, is the Cartan block B[i][j] (1-based dict) used to
    lower the last index of f."""
    sc = StructureConstants(rs)
    l = rs.rank
    hs = [H(i) for i in range(1, l + 1)]
    for a in rs.roots:
        xa = X(a)
        for i in range(1, l + 1):
            m = brk(H(i), xa)
            c, extra = _single(m, xa)
            sc.l[(a, i)] = c
            if extra:
                sc.violations.append(f"[H{i},{gen_str(xa)}] leaks into {[gen_str(e) for e in extra]}")
            m = brk(xa, H(i))
            c, extra = _single(m, xa)
            sc.r[(a, i)] = -c
            if extra:
                sc.violations.append(f"[{gen_str(xa)},H{i}] leaks into {[gen_str(e) for e in extra]}")
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            m = brk(H(i), H(j))
            for k in range(1, l + 1):
                sc.fud[(i, j, k)] = m.get(H(k), R.ZERO)
            extra = [c for c in m if c[0] != "H"]
            if extra:
                sc.violations.append(f"[H{i},H{j}] leaks into roots")
    for a in rs.roots:
        for b in rs.roots:
            m = brk(X(a), X(b))
            s = tuple(x + y for x, y in zip(a, b))
            if all(x == 0 for x in s):
                for k in range(1, l + 1):
                    sc.g[(a, k)] = -m.get(H(k), R.ZERO)
                extra = [c for c in m if c[0] != "H"]
            elif rs.is_root(s):
                c, extra = _single(m, X(s))
                if not c.is_zero():
                    sc.N[(a, b)] = c
            else:
                extra = list(m)
            if extra:
                sc.violations.append(
                    f"[{gen_str(X(a))},{gen_str(X(b))}] leaks into {[gen_str(e) for e in extra]}"
                )
    if killing_cartan is not None:
        lower_f(sc, killing_cartan)
    return sc


def lower_f(sc: StructureConstants, bc) -> None:
    l = sc.rs.rank
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            for k in range(1, l + 1):
                tot = R.ZERO
                for m in range(1, l + 1):
                    f = sc.fud[(i, j, m)]
                    if not f.is_zero():
                        tot = tot + f * bc[(m, k)]
                sc.f3[(i, j, k)] = tot


class AnchorZero(ZeroDivisionError):
    pass


def calibrate(real: AdjointRealization, closed_anchor: R.RingElem) -> R.RingElem:
    """lam such that lam * raw l_{alpha_1}(H_1) equals the closed value."""
    a1 = real.rs.simple_roots[0]
    raw = raw_bracket(real, H(1), X(a1)).get(X(a1), R.ZERO)
    if raw.is_zero() or closed_anchor.is_zero():
        raise AnchorZero("calibration anchor vanishes")
    return closed_anchor / raw


class Pipeline:
    """Cached bracket evaluation for one (algebra, rank)."""

    def __init__(self, rs: RootSystem, real: Optional[AdjointRealization] = None):
        self.rs = rs
        self.real = real or build_adjoint_realization(rs)
        self._raw: Dict[Tuple[Gen, Gen], Dict[Gen, R.RingElem]] = {}
        self.lam = R.ONE

    def raw(self, a: Gen, b: Gen):
        key = (a, b)
        m = self._raw.get(key)
        if m is None:
            m = raw_bracket(self.real, a, b)
            self._raw[key] = m
        return m

    def set_calibration(self, closed_anchor: R.RingElem) -> R.RingElem:
        self.lam = calibrate(self.real, closed_anchor)
        return self.lam

    def bracket(self, a: Gen, b: Gen) -> Dict[Gen, R.RingElem]:
        lam = self.lam
        return {c: v * lam for c, v in self.raw(a, b).items()}

    def structure_constants(self, killing_cartan=None) -> StructureConstants:
        return extract_structure_constants(self.rs, self.bracket, killing_cartan)
