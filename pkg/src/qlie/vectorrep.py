"""Vector representation of the quantized enveloping algebra for B, C and D.

States are labelled 1..n.  ``bar(i)`` is the state of opposite weight.
Matrices are sparse dicts over :class:`~qlie.ring.RingElem`.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Tuple

from . import ring as R
from .linalg import SparseMat, sp_add, sp_comm, sp_mul, sp_scale
from .rootdata import RootSystem

__all__ = [
    "Representation", "build_vector_rep", "verify_defining_relations",
    "weight_of_state", "bar_map", "Report",
]


class Report:
    """Ordered list of named checks with pass/fail and a first counterexample."""

    def __init__(self, title: str = ""):
        self.title = title
        self.items: List[Tuple[str, bool, str]] = []

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.items.append((name, bool(ok), "" if ok else detail))
        return ok

    def extend(self, other: "Report", prefix: str = ""):
        for n, ok, d in other.items:
            self.items.append((prefix + n, ok, d))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.items)

    def failures(self):
        return [(n, d) for n, ok, d in self.items if not ok]

    def lines(self) -> List[str]:
        out = []
        for n, ok, d in self.items:
            out.append(f"{'PASS' if ok else 'FAIL'} {n}" + (f"  [{d}]" if d else ""))
        return out

    def __repr__(self):
        return f"Report({self.title!r}, ok={self.ok}, n={len(self.items)})"


@dataclass(frozen=True)
class Representation:
    algebra: str
    rank: int
    dim: int
    E: Tuple[SparseMat, ...]
    F: Tuple[SparseMat, ...]
    H: Tuple[SparseMat, ...]
    weights: Tuple[Tuple[int, ...], ...]

    def h_eigen(self, i: int, state) -> int:
        """Eigenvalue of the diagonal H_i (0-based i) on a state."""
        v = self.H[i].get((state, state))
        if v is None:
            return 0
        return int(R.eval_classical(v))

    def with_generator(self, kind: str, i: int, mat: SparseMat) -> "Representation":
        """Copy with one generator matrix replaced (used for negative controls)."""
        lst = list(getattr(self, kind))
        lst[i] = mat
        return replace(self, **{kind: tuple(lst)})


def bar_map(algebra: str, l: int, i: int) -> int:
    if algebra == "B":
        return 2 * l + 2 - i
    return 2 * l + 1 - i


def weight_of_state(rs: RootSystem, k: int) -> Tuple[int, ...]:
    l = rs.rank
    w = [0] * l
    if k <= l:
        w[k - 1] = 1
    elif rs.algebra == "B" and k == l + 1:
        pass
    else:
        w[bar_map(rs.algebra, l, k) - 1] = -1
    return tuple(w)


def _e(i, j, c=R.ONE) -> SparseMat:
    return {(i, j): c}


def _a(alg: str, l: int, i: int, j: int) -> SparseMat:
    """a_ij = e_ij - sign * e_{bar j, bar i}."""
    bi, bj = bar_map(alg, l, i), bar_map(alg, l, j)
    sign = (-1) ** (i + j) if alg == "C" else 1
    return sp_add(_e(i, j), _e(bj, bi), -sign)


def build_vector_rep(rs: RootSystem) -> Representation:
    alg, l = rs.algebra, rs.rank
    if alg not in ("B", "C", "D"):
        raise ValueError("vector representation is only built for B, C, D")
    n = 2 * l + 1 if alg == "B" else 2 * l
    E, F, H = [], [], []
    for i in range(1, l):
        E.append(_a(alg, l, i, i + 1))
        F.append(_a(alg, l, i + 1, i))
        H.append(sp_add(_a(alg, l, i, i), _a(alg, l, i + 1, i + 1), -1))
    if alg == "B":
        # [E_l, F_l] must equal [2] in the variable q^(1/2) on the top state,
        # so F_l carries (q^(1/2) + q^(-1/2)) / sqrt2 instead of sqrt2.
        E.append(sp_scale(_a(alg, l, l, l + 1), R.SQRT2))
        F.append(sp_scale(_a(alg, l, l + 1, l), R.qnum_base(2, Fraction(1, 2)) / R.SQRT2))
        H.append(sp_scale(_a(alg, l, l, l), 2))
    elif alg == "C":
        half = R.const(Fraction(1, 2))
        E.append(sp_scale(_a(alg, l, l, l + 1), half))
        F.append(sp_scale(_a(alg, l, l + 1, l), half))
        H.append(_a(alg, l, l, l))
    else:
        E.append(_a(alg, l, l - 1, l + 1))
        F.append(_a(alg, l, l + 1, l - 1))
        H.append(sp_add(_a(alg, l, l - 1, l - 1), _a(alg, l, l + 1, l + 1), -1))
    weights = tuple(weight_of_state(rs, k) for k in range(1, n + 1))
    return Representation(alg, l, n, tuple(E), tuple(F), tuple(H), weights)


def _identity(n: int) -> SparseMat:
    return {(k, k): R.ONE for k in range(1, n + 1)}


def _k_power(rep: Representation, rs: RootSystem, i: int, sign: int) -> SparseMat:
    """K_i^sign = q_i^(sign H_i) on the diagonal, q_i = v^(2 d_i)."""
    d2 = int(2 * rs.d[i])
    return {
        (k, k): R.vpow(sign * d2 * rep.h_eigen(i, k)) for k in range(1, rep.dim + 1)
    }


def _serre(x_i: SparseMat, x_j: SparseMat, a_ij: int, qi_exp: Fraction, ident) -> SparseMat:
    m = 1 - a_ij
    pw = [ident]
    for _ in range(m):
        pw.append(sp_mul(pw[-1], x_i))
    tot: SparseMat = {}
    for k in range(m + 1):
        c = R.qbinom(m, k, qi_exp) * (-1) ** k
        term = sp_mul(sp_mul(pw[m - k], x_j), pw[k])
        tot = sp_add(tot, term, c)
    return tot


def _mat_diff(a: SparseMat, b: SparseMat) -> str:
    d = sp_add(a, b, -1)
    if not d:
        return ""
    k = sorted(d)[0]
    return f"entry {k}: {R.to_str(a.get(k, R.ZERO))} vs {R.to_str(b.get(k, R.ZERO))}"


def verify_defining_relations(rep: Representation, rs: RootSystem, cartan=None) -> Report:
    """Check the Drinfeld-Jimbo relations exactly, including q-Serre."""
    rep_ = Report(f"defining relations {rs.algebra}{rs.rank}")
    cartan = cartan or rs.cartan
    l = rs.rank
    ident = _identity(rep.dim)
    for i in range(l):
        for j in range(l):
            lhs = sp_comm(rep.H[i], rep.E[j])
            rhs = sp_scale(rep.E[j], cartan[i][j])
            rep_.check(f"[H{i+1},E{j+1}]", lhs == rhs, _mat_diff(lhs, rhs))
            lhs = sp_comm(rep.H[i], rep.F[j])
            rhs = sp_scale(rep.F[j], -cartan[i][j])
            rep_.check(f"[H{i+1},F{j+1}]", lhs == rhs, _mat_diff(lhs, rhs))
            lhs = sp_comm(rep.E[i], rep.F[j])
            if i == j:
                d2 = int(2 * rs.d[i])
                qi = R.vpow(d2) - R.vpow(-d2)
                rhs = sp_scale(
                    sp_add(_k_power(rep, rs, i, 1), _k_power(rep, rs, i, -1), -1), qi.inverse()
                )
            else:
                rhs = {}
            rep_.check(f"[E{i+1},F{j+1}]", lhs == rhs, _mat_diff(lhs, rhs))
        for j in range(l):
            if i == j:
                continue
            qe = rs.d[i]
            for kind, mats in (("E", rep.E), ("F", rep.F)):
                s = _serre(mats[i], mats[j], cartan[i][j], qe, ident)
                rep_.check(f"serre {kind}{i+1}{kind}{j+1}", not s, _mat_diff(s, {}))
    for i in range(l):
        for j in range(l):
            c = sp_comm(rep.H[i], rep.H[j])
            rep_.check(f"[H{i+1},H{j+1}]", not c, _mat_diff(c, {}))
    return rep_
