"""Root systems of the classical series in the orthonormal epsilon basis."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

Root = Tuple[int, ...]

__all__ = ["Root", "RootSystem", "build_root_system", "inner", "UnsupportedRank"]

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


class UnsupportedRank(ValueError):
    pass


def inner(x, y) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(x, y)), Fraction(0))


def _unit(n: int, i: int, c: int = 1) -> List[int]:
    v = [0] * n
    v[i] = c
    return v


def _vec(n, pairs) -> Root:
    v = [0] * n
    for i, c in pairs:
        v[i] += c
    return tuple(v)


@dataclass(frozen=True)
class RootSystem:
    algebra: str
    rank: int
    roots: Tuple[Root, ...]
    positive_roots: Tuple[Root, ...]
    simple_roots: Tuple[Root, ...]
    rho: Tuple[Fraction, ...]
    cartan: Tuple[Tuple[int, ...], ...]
    d: Tuple[Fraction, ...]
    _index: Dict[Root, int] = field(default=None, compare=False, repr=False)

    @property
    def dim(self) -> int:
        """Ambient dimension of the epsilon space."""
        return len(self.rho)

    def is_root(self, x) -> bool:
        return tuple(x) in self._index

    def root_index(self, x) -> int:
        return self._index[tuple(x)]

    def add_roots(self, a, b) -> Optional[Root]:
        c = tuple(x + y for x, y in zip(a, b))
        return c if c in self._index else None

    def rho_dot(self, x) -> Fraction:
        return inner(self.rho, x)

    def is_positive(self, x) -> bool:
        return self._index[tuple(x)] < len(self.positive_roots)

    def neg(self, x) -> Root:
        return tuple(-c for c in x)

    def eps(self, i: int, c: int = 1) -> Root:
        """c * epsilon_i with 1-based i."""
        return tuple(_unit(self.dim, i - 1, c))


def _roots_bcd(alg: str, l: int):
    pos = []
    for i in range(l):
        for j in range(i + 1, l):
            pos.append(_vec(l, [(i, 1), (j, -1)]))
            pos.append(_vec(l, [(i, 1), (j, 1)]))
        if alg == "B":
            pos.append(_vec(l, [(i, 1)]))
        elif alg == "C":
            pos.append(_vec(l, [(i, 2)]))
    simple = [_vec(l, [(i, 1), (i + 1, -1)]) for i in range(l - 1)]
    if alg == "B":
        simple.append(_vec(l, [(l - 1, 1)]))
    elif alg == "C":
        simple.append(_vec(l, [(l - 1, 2)]))
    else:
        simple.append(_vec(l, [(l - 2, 1), (l - 1, 1)]))
    return pos, simple


def _roots_a(l: int):
    n = l + 1
    pos = [_vec(n, [(i, 1), (j, -1)]) for i in range(n) for j in range(i + 1, n)]
    simple = [_vec(n, [(i, 1), (i + 1, -1)]) for i in range(l)]
    return pos, simple


def _rho_table(alg: str, l: int) -> Tuple[Fraction, ...]:
    """Components rho . epsilon_i (1-based i)."""
    if alg == "B":
        return tuple(Fraction(2 * (l - i) + 1, 2) for i in range(1, l + 1))
    if alg == "C":
        return tuple(Fraction(l - i + 1) for i in range(1, l + 1))
    if alg == "D":
        return tuple(Fraction(l - i) for i in range(1, l + 1))
    return tuple(Fraction(l + 2 - 2 * i, 2) for i in range(1, l + 2))


def build_root_system(algebra: str, rank: int, allow_low_rank: bool = False) -> RootSystem:
    alg = algebra.upper()
    if alg not in MIN_RANK:
        raise UnsupportedRank(f"unknown algebra {algebra!r}")
    lo = MIN_RANK[alg]
    if alg == "D" and allow_low_rank:
        lo = 2
    if rank < lo:
        raise UnsupportedRank(f"{alg}_{rank} is not supported (rank >= {lo})")
    if alg == "A":
        pos, simple = _roots_a(rank)
    else:
        pos, simple = _roots_bcd(alg, rank)
    neg = [tuple(-c for c in r) for r in pos]
    roots = tuple(pos + neg)
    cartan = tuple(
        tuple(int(2 * inner(a, b) / inner(a, a)) for b in simple) for a in simple
    )
    d = tuple(inner(a, a) / 2 for a in simple)
    rs = RootSystem(
        algebra=alg,
        rank=rank,
        roots=roots,
        positive_roots=tuple(pos),
        simple_roots=tuple(simple),
        rho=_rho_table(alg, rank),
        cartan=cartan,
        d=d,
        _index={r: n for n, r in enumerate(roots)},
    )
    return rs


def half_sum_positive(rs: RootSystem) -> Tuple[Fraction, ...]:
    """Independent recomputation of rho."""
    tot = [Fraction(0)] * rs.dim
    for r in rs.positive_roots:
        for i, c in enumerate(r):
            tot[i] += c
    return tuple(x / 2 for x in tot)
