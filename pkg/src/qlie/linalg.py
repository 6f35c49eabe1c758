"""Small exact linear algebra over any field whose elements support + - * /.

Sparse matrices are dicts ``{(row, col): value}`` with zero entries omitted.
Dense helpers work on lists of lists.
"""
from __future__ import annotations

from typing import Dict, Hashable, List, Sequence, Tuple

SparseMat = Dict[Tuple[Hashable, Hashable], object]


def _nz(x) -> bool:
    return bool(x) if not hasattr(x, "is_zero") else not x.is_zero()


def sp_add(a: SparseMat, b: SparseMat, cb=1) -> SparseMat:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        w = v * cb if w is None else w + v * cb
        if _nz(w):
            out[k] = w
        else:
            out.pop(k, None)
    return out


def sp_scale(a: SparseMat, c) -> SparseMat:
    out = {}
    for k, v in a.items():
        w = v * c
        if _nz(w):
            out[k] = w
    return out


def sp_mul(a: SparseMat, b: SparseMat) -> SparseMat:
    rows: Dict[Hashable, List[Tuple[Hashable, object]]] = {}
    for (i, j), v in b.items():
        rows.setdefault(i, []).append((j, v))
    out: SparseMat = {}
    for (i, k), v in a.items():
        for j, w in rows.get(k, ()):
            key = (i, j)
            cur = out.get(key)
            out[key] = v * w if cur is None else cur + v * w
    return {k: v for k, v in out.items() if _nz(v)}


def sp_comm(a: SparseMat, b: SparseMat) -> SparseMat:
    return sp_add(sp_mul(a, b), sp_mul(b, a), -1)


def sp_pow(a: SparseMat, n: int, ident: SparseMat) -> SparseMat:
    out = ident
    for _ in range(n):
        out = sp_mul(out, a)
    return out


def solve(mat: List[List[object]], rhs: List[List[object]], zero, one):
    """Gauss-Jordan: return X with mat X = rhs, or raise ZeroDivisionError if singular."""
    n = len(mat)
    m = len(rhs[0]) if rhs else 0
    a = [list(mat[i]) + list(rhs[i]) for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if _nz(a[r][col]):
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = one / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and _nz(a[r][col]):
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:n + m] for row in a]


def inverse(mat: List[List[object]], zero, one):
    n = len(mat)
    ident = [[one if i == j else zero for j in range(n)] for i in range(n)]
    return solve(mat, ident, zero, one)


def nullspace(mat: Sequence[Sequence[object]], ncols: int, zero, one) -> List[List[object]]:
    """Basis of the right kernel of a (rows x ncols) matrix."""
    a = [list(r) for r in mat]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for k in range(r, len(a)):
            if _nz(a[k][c]):
                piv = k
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = one / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for k in range(len(a)):
            if k != r and _nz(a[k][c]):
                f = a[k][c]
                a[k] = [x - f * y for x, y in zip(a[k], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [zero] * ncols
        vec[fcol] = one
        for row, pc in enumerate(pivots):
            vec[pc] = zero - a[row][fcol]
        basis.append(vec)
    return basis
