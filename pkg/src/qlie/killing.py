"""Quantum Killing form: intertwiner computation, closed tables, inverses."""
from __future__ import annotations

import random
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from . import ring as R
from .linalg import inverse
from .qlabuild import AdjointRealization, Gen, H, X, contract, gen_str, generators
from .rootdata import RootSystem
from .tensordecomp import pair
from .vectorrep import Report

__all__ = [
    "KillingTable", "compute_killing", "closed_killing", "closed_killing_inverse",
    "cartan_inverse", "verify_ad_invariance", "dagger_form", "verify_dagger",
    "killing_normalization",
]


@dataclass
class KillingTable:
    rs: RootSystem
    B: Dict[Tuple[Gen, Gen], R.RingElem] = field(default_factory=dict)
    Binv_cartan: Dict[Tuple[int, int], R.RingElem] = field(default_factory=dict)
    Binv_roots: Dict[tuple, R.RingElem] = field(default_factory=dict)

    def __call__(self, a: Gen, b: Gen) -> R.RingElem:
        return self.B.get((a, b), R.ZERO)

    def cartan(self) -> Dict[Tuple[int, int], R.RingElem]:
        l = self.rs.rank
        return {(i, j): self(H(i), H(j)) for i in range(1, l + 1) for j in range(1, l + 1)}


def killing_normalization(rs: RootSystem) -> R.RingElem:
    qp = R.qpow(1) + R.qpow(-1)
    n = qp * qp * qp
    return -n if rs.algebra == "C" else n


def compute_killing(real: AdjointRealization) -> KillingTable:
    """B(a,b) = (1/N) sum t*[i,l] (A T* B)[i,l] over all generator pairs."""
    rs = real.rs
    ninv = killing_normalization(rs).inverse()
    kt = KillingTable(rs)
    gens = generators(rs)
    for a in gens:
        for b in gens:
            v = pair(real.singlet_dual, contract(real, a, b))
            if not v.is_zero():
                kt.B[(a, b)] = v * ninv
    _fill_inverses(kt)
    return kt


def _fill_inverses(kt: KillingTable) -> None:
    rs = kt.rs
    l = rs.rank
    bc = kt.cartan()
    kt.Binv_cartan = cartan_inverse(bc, l)
    for a in rs.roots:
        v = kt(X(a), X(rs.neg(a)))
        if not v.is_zero():
            kt.Binv_roots[a] = v.inverse()


def cartan_inverse(bc: Dict[Tuple[int, int], R.RingElem], l: int) -> Dict[Tuple[int, int], R.RingElem]:
    mat = [[bc[(i, j)] for j in range(1, l + 1)] for i in range(1, l + 1)]
    inv = inverse(mat, R.ZERO, R.ONE)
    return {(i + 1, j + 1): inv[i][j] for i in range(l) for j in range(l)}


def closed_cartan(rs: RootSystem) -> Dict[Tuple[int, int], R.RingElem]:
    l = rs.rank
    two = R.qnum(2)
    out = {}
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            if i == j:
                v = two
            elif abs(i - j) == 1:
                v = -R.ONE
            else:
                v = R.ZERO
            out[(i, j)] = v
    if rs.algebra == "B":
        out[(l, l)] = R.ONE
    elif rs.algebra == "C":
        out[(l, l)] = (R.qpow(2) + R.qpow(-2)) / two
    elif rs.algebra == "D":
        out[(l - 1, l)] = out[(l, l - 1)] = R.ZERO
        out[(l - 2, l)] = out[(l, l - 2)] = -R.ONE
    return out


def closed_killing(rs: RootSystem) -> KillingTable:
    kt = KillingTable(rs)
    for (i, j), v in closed_cartan(rs).items():
        if not v.is_zero():
            kt.B[(H(i), H(j))] = v
    for a in rs.roots:
        kt.B[(X(a), X(rs.neg(a)))] = R.qpow(-rs.rho_dot(a))
    kt.Binv_cartan = closed_killing_inverse(rs)
    for a in rs.roots:
        kt.Binv_roots[a] = R.qpow(rs.rho_dot(a))
    return kt


def closed_killing_inverse(rs: RootSystem, literal_d_range: bool = False) -> Dict[Tuple[int, int], R.RingElem]:
    """Closed Cartan-block inverse B^{ij}.

    For D the general line is used for i <= j < l-1; in the column j = l-1
    (and by the stated rule j = l) the value is [i] / (q^(l-1) + q^(1-l)),
    i.e. half of the general line.  ``literal_d_range`` applies the general
    line for all j < l as tabulated, which is not an inverse."""
    l = rs.rank
    q = R.qpow
    qn = R.qnum
    out = {}
    alg = rs.algebra
    for i in range(1, l + 1):
        for j in range(i, l + 1):
            if alg == "A":
                v = qn(i) * (q(l - j + 1) - q(j - l - 1)) / (q(l + 1) - q(-l - 1))
            elif alg == "B":
                half = Fraction(1, 2)
                v = qn(i) * (q(l - j - half) + q(j - l + half)) / (q(l - half) + q(half - l))
            elif alg == "C":
                v = qn(i) * (q(l - j + 1) + q(j - l - 1)) / (q(l + 1) + q(-l - 1))
            else:
                den = q(l - 1) + q(1 - l)
                qp = q(1) + q(-1)
                general = lambda i_, j_: qn(i_) * (q(l - j_ - 1) + q(j_ - l + 1)) / den
                if i == j and i >= l - 1:
                    v = qn(l) * qp.inverse() / den
                elif i == l - 1 and j == l:
                    v = qn(l - 2) * qp.inverse() / den
                elif j < l - 1 or (literal_d_range and j == l - 1):
                    v = general(i, j)
                elif literal_d_range and j == l:
                    v = general(i, l - 1)
                else:
                    v = qn(i) / den
            out[(i, j)] = v
            out[(j, i)] = v
    return out


def verify_ad_invariance(
    rs: RootSystem, brk: Callable, kt: KillingTable, triples: Optional[Iterable] = None,
    n_random: int = 0, seed: int = 0,
) -> Report:
    """B([a,b],c) = B(a,[b,c]) on all triples (or a random sample)."""
    rpt = Report("ad-invariance")
    gens = generators(rs)
    if triples is None:
        if n_random:
            rng = random.Random(seed)
            triples = [(rng.choice(gens), rng.choice(gens), rng.choice(gens)) for _ in range(n_random)]
        else:
            triples = [(a, b, c) for a in gens for b in gens for c in gens]
    bad = None
    count = 0
    for a, b, c in triples:
        count += 1
        lhs = R.ZERO
        for d, v in brk(a, b).items():
            lhs = lhs + v * kt(d, c)
        rhs = R.ZERO
        for d, v in brk(b, c).items():
            rhs = rhs + kt(a, d) * v
        if lhs != rhs:
            bad = (a, b, c, lhs, rhs)
            break
    detail = ""
    if bad:
        a, b, c, lhs, rhs = bad
        detail = f"{gen_str(a)},{gen_str(b)},{gen_str(c)}: {R.to_str(lhs)} vs {R.to_str(rhs)}"
    rpt.check(f"B([a,b],c)=B(a,[b,c]) on {count} triples", bad is None, detail)
    return rpt


def dagger_form(rs: RootSystem, bc: Dict[Tuple[int, int], R.RingElem]) -> Dict[Tuple[Gen, Gen], R.RingElem]:
    """<X_a,X_b> = delta_ab, <H_i,H_j> = B_ij, mixed entries zero (nonzero entries only)."""
    out = {}
    for a in rs.roots:
        out[(X(a), X(a))] = R.ONE
    for (i, j), v in bc.items():
        if not v.is_zero():
            out[(H(i), H(j))] = v
    return out


def dagger(rs: RootSystem, g: Gen) -> Tuple[R.RingElem, Gen]:
    if g[0] == "H":
        return R.ONE, g
    return R.qpow(-rs.rho_dot(g[1])), X(rs.neg(g[1]))


def verify_dagger(rs: RootSystem, brk: Callable, form, triples: Optional[Iterable] = None) -> Report:
    """<[a,b],c> = <b,[a^dagger,c]>."""
    rpt = Report("dagger form")
    gens = generators(rs)
    if triples is None:
        triples = [(a, b, c) for a in gens for b in gens for c in gens]
    get = lambda x, y: form.get((x, y), R.ZERO)
    bad = None
    count = 0
    for a, b, c in triples:
        count += 1
        lhs = R.ZERO
        for d, v in brk(a, b).items():
            lhs = lhs + v * get(d, c)
        coef, ad = dagger(rs, a)
        rhs = R.ZERO
        for d, v in brk(ad, c).items():
            rhs = rhs + get(b, d) * v
        rhs = rhs * coef
        if lhs != rhs:
            bad = (a, b, c, lhs, rhs)
            break
    detail = ""
    if bad:
        a, b, c, lhs, rhs = bad
        detail = f"{gen_str(a)},{gen_str(b)},{gen_str(c)}: {R.to_str(lhs)} vs {R.to_str(rhs)}"
    rpt.check(f"<[a,b],c>=<b,[a+,c]> on {count} triples", bad is None, detail)
    return rpt
