"""Exact coefficient field for quantum structure constants.

Elements live in ``K(v)[s] / (s^2 - (v^2 + v^-2))`` where ``v = q^(1/2)``,
``K = Q(sqrt 2)`` and ``s`` is the positive square root of ``q + 1/q``.

Three layers:

* base scalars: ``gmpy2.mpq`` for rationals, :class:`Root2` for ``a + b*sqrt2``
  with ``b != 0`` (mixed arithmetic collapses back to ``mpq`` when possible);
* :class:`Frac`: reduced rational functions ``v^k * num(v) / den(v)`` with
  ``num(0) != 0``, ``den(0) == 1`` and ``gcd(num, den) == 1``;
* :class:`RingElem`: pairs ``a + b*s`` of fractions.

All values are immutable and hashable; equality is structural on the
canonical form.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

from gmpy2 import mpq

__all__ = [
    "Root2", "Frac", "RingElem", "PoleError", "ParseError",
    "scalar", "as_pair", "ZERO", "ONE", "S", "SQRT2", "Q", "V",
    "vpow", "qpow", "qnum", "qnum_base", "qbinom", "laurent", "const",
    "add", "mul", "invert", "q_conjugate", "eval_classical", "eval_numeric",
    "parse", "to_str",
]

_MPQ = type(mpq(0))


class PoleError(ArithmeticError):
    """Raised when a fraction is evaluated at a root of its denominator."""


class ParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# base field Q(sqrt2)


class Root2:
    """``a + b*sqrt(2)`` with ``b != 0``; use :func:`scalar` to construct."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a = a
        self.b = b

    @property
    def rat_part(self):
        return self.a

    @property
    def root2_part(self):
        return self.b

    def __add__(self, o):
        if isinstance(o, Root2):
            return scalar(self.a + o.a, self.b + o.b)
        return Root2(self.a + o, self.b)

    __radd__ = __add__

    def __neg__(self):
        return Root2(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, Root2):
            return scalar(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)
        if o == 0:
            return mpq(0)
        return Root2(self.a * o, self.b * o)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - 2 * self.b * self.b
        return Root2(self.a / n, -self.b / n)

    def __truediv__(self, o):
        return self * sc_inv(o)

    def __rtruediv__(self, o):
        return o * self.inverse()

    def __eq__(self, o):
        if isinstance(o, Root2):
            return self.a == o.a and self.b == o.b
        return False

    def __ne__(self, o):
        return not self == o

    def __hash__(self):
        return hash((self.a, self.b, "r2"))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"Root2({self.a}, {self.b})"


def scalar(a, b=0):
    """Canonical base scalar ``a + b*sqrt2``."""
    a = mpq(a)
    if b == 0:
        return a
    return Root2(a, mpq(b))


def as_pair(c) -> Tuple[mpq, mpq]:
    """``(rat_part, root2_part)`` of a base scalar."""
    if isinstance(c, Root2):
        return c.a, c.b
    return mpq(c), mpq(0)


def sc_inv(c):
    if isinstance(c, Root2):
        return c.inverse()
    if c == 0:
        raise ZeroDivisionError("inverse of zero")
    return mpq(1) / c


# ---------------------------------------------------------------------------
# dense polynomials in v with nonnegative exponents (tuples, low degree first)


def _trim(p):
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def _lowstrip(p):
    k = 0
    while p[k] == 0:
        k += 1
    return k, p[k:]


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return _trim(out)


def _pshift_add(p, kp, q, kq):
    """v^kp p + v^kq q for nonnegative shifts."""
    n = max(len(p) + kp, len(q) + kq)
    out = [mpq(0)] * n
    for i, c in enumerate(p):
        out[i + kp] = c
    for i, c in enumerate(q):
        out[i + kq] = out[i + kq] + c
    return _trim(out)


def _pmul(p, q):
    if not p or not q:
        return ()
    if len(p) == 1:
        c = p[0]
        return tuple(c * x for x in q)
    if len(q) == 1:
        c = q[0]
        return tuple(x * c for x in p)
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b != 0:
                out[i + j] = out[i + j] + a * b
    return _trim(out)


def _pscale(p, c):
    return tuple(x * c for x in p)


def _pdivmod(p, d):
    p = list(p)
    dl = len(d) - 1
    inv = sc_inv(d[-1])
    if len(p) <= dl:
        return (), _trim(p)
    quo = [mpq(0)] * (len(p) - dl)
    for i in range(len(p) - 1, dl - 1, -1):
        c = p[i]
        if c == 0:
            continue
        f = c * inv
        quo[i - dl] = f
        for j in range(dl + 1):
            if d[j] != 0:
                p[i - dl + j] = p[i - dl + j] - f * d[j]
    return _trim(quo), _trim(p[:dl])


def _pexact_div(p, d):
    quo, rem = _pdivmod(p, d)
    assert not rem, "inexact polynomial division"
    return quo


def _monic(p):
    c = p[-1]
    if c == 1:
        return p
    return _pscale(p, sc_inv(c))


def _pgcd(a, b):
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (mpq(1),)
        _, r = _pdivmod(a, b)
        a, b = b, r
    return _monic(a)


def _peval(p, x):
    acc = mpq(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# reduced rational functions in v


class Frac:
    """``v^sh * num / den``; construct through the module helpers."""

    __slots__ = ("num", "den", "sh", "_hash")

    def __init__(self, num, den, sh):
        self.num = num
        self.den = den
        self.sh = sh
        self._hash = None

    def is_zero(self):
        return not self.num

    def is_laurent(self):
        return len(self.den) == 1

    def terms(self) -> Dict[int, object]:
        """Map from v-exponent to coefficient; only for Laurent polynomials."""
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        return {i + self.sh: c for i, c in enumerate(self.num) if c != 0}

    def __eq__(self, o):
        return (self.sh == o.sh and self.num == o.num and self.den == o.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den, self.sh))
        return self._hash

    def __repr__(self):
        return f"Frac({_frac_str(self)!r})"


_ONE_POLY = (mpq(1),)
FZERO = Frac((), _ONE_POLY, 0)
FONE = Frac(_ONE_POLY, _ONE_POLY, 0)


def _fmake(num, den, sh, reduced=False):
    num = _trim(num)
    if not num:
        return FZERO
    k1, num = _lowstrip(num)
    k2, den = _lowstrip(den)
    sh += k1 - k2
    if not reduced and len(den) > 1 and len(num) > 1:
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pexact_div(num, g)
            den = _pexact_div(den, g)
    c = den[0]
    if c != 1:
        ic = sc_inv(c)
        num = _pscale(num, ic)
        den = _pscale(den, ic)
    return Frac(tuple(num), tuple(den), sh)


def fadd(x: Frac, y: Frac) -> Frac:
    if not x.num:
        return y
    if not y.num:
        return x
    m = min(x.sh, y.sh)
    if len(x.den) == 1 and len(y.den) == 1:
        num = _pshift_add(x.num, x.sh - m, y.num, y.sh - m)
        return _fmake(num, _ONE_POLY, m, reduced=True)
    if x.den == y.den:
        num = _pshift_add(x.num, x.sh - m, y.num, y.sh - m)
        return _fmake(num, x.den, m)
    g = _pgcd(x.den, y.den)
    if len(g) > 1:
        dx = _pexact_div(x.den, g)
        dy = _pexact_div(y.den, g)
    else:
        dx, dy = x.den, y.den
    num = _pshift_add(_pmul(x.num, dy), x.sh - m, _pmul(y.num, dx), y.sh - m)
    return _fmake(num, _pmul(dx, y.den), m)


def fneg(x: Frac) -> Frac:
    if not x.num:
        return x
    return Frac(tuple(-c for c in x.num), x.den, x.sh)


def fmul(x: Frac, y: Frac) -> Frac:
    if not x.num or not y.num:
        return FZERO
    sh = x.sh + y.sh
    if len(x.den) == 1 and len(y.den) == 1:
        return Frac(_pmul(x.num, y.num), _ONE_POLY, sh)
    n1, d1, n2, d2 = x.num, x.den, y.num, y.den
    if len(d2) > 1 and len(n1) > 1:
        g = _pgcd(n1, d2)
        if len(g) > 1:
            n1, d2 = _pexact_div(n1, g), _pexact_div(d2, g)
    if len(d1) > 1 and len(n2) > 1:
        g = _pgcd(n2, d1)
        if len(g) > 1:
            n2, d1 = _pexact_div(n2, g), _pexact_div(d1, g)
    return _fmake(_pmul(n1, n2), _pmul(d1, d2), sh, reduced=True)


def finv(x: Frac) -> Frac:
    if not x.num:
        raise ZeroDivisionError("inverse of zero")
    return _fmake(x.den, x.num, -x.sh, reduced=True)


def fconj(x: Frac) -> Frac:
    if not x.num:
        return x
    sh = -x.sh - (len(x.num) - 1) + (len(x.den) - 1)
    return _fmake(tuple(reversed(x.num)), tuple(reversed(x.den)), sh, reduced=True)


def feval(x: Frac, v0):
    if not x.num:
        return mpq(0)
    d = _peval(x.den, v0)
    if d == 0:
        raise PoleError(f"pole at v={v0}")
    if v0 == 0 and x.sh < 0:
        raise PoleError("pole at v=0")
    return _peval(x.num, v0) * _vpow_scalar(v0, x.sh) / d


def _vpow_scalar(v0, k):
    if k >= 0:
        return v0 ** k
    return sc_inv(v0 ** (-k))


def _fmono(c, k) -> Frac:
    if c == 0:
        return FZERO
    return Frac((c,), _ONE_POLY, k)


def _flaurent(terms: Dict[int, object]) -> Frac:
    terms = {k: c for k, c in terms.items() if c != 0}
    if not terms:
        return FZERO
    lo = min(terms)
    hi = max(terms)
    num = [mpq(0)] * (hi - lo + 1)
    for k, c in terms.items():
        num[k - lo] = c
    return Frac(tuple(num), _ONE_POLY, lo)


# q + 1/q = v^2 + v^-2
_QQ = _flaurent({2: mpq(1), -2: mpq(1)})


# ---------------------------------------------------------------------------
# ring elements a + b*s


def _coerce(x) -> "RingElem":
    if isinstance(x, RingElem):
        return x
    if isinstance(x, (int, _MPQ, Fraction)):
        return RingElem(_fmono(mpq(x), 0), FZERO)
    if isinstance(x, Root2):
        return RingElem(_fmono(x, 0), FZERO)
    return NotImplemented


class RingElem:
    """``a + b*s`` with ``a, b`` reduced fractions in ``v``."""

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a: Frac, b: Frac = FZERO):
        self.a = a
        self.b = b
        self._hash = None

    # arithmetic -------------------------------------------------------
    def __add__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        if not self.b.num and not o.b.num:
            return RingElem(fadd(self.a, o.a), FZERO)
        return RingElem(fadd(self.a, o.a), fadd(self.b, o.b))

    __radd__ = __add__

    def __neg__(self):
        return RingElem(fneg(self.a), fneg(self.b))

    def __sub__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        if not b1.num and not b2.num:
            return RingElem(fmul(a1, a2), FZERO)
        a = fadd(fmul(a1, a2), fmul(fmul(b1, b2), _QQ))
        b = fadd(fmul(a1, b2), fmul(a2, b1))
        return RingElem(a, b)

    __rmul__ = __mul__

    def inverse(self) -> "RingElem":
        if not self.b.num:
            return RingElem(finv(self.a), FZERO)
        norm = fadd(fmul(self.a, self.a), fneg(fmul(fmul(self.b, self.b), _QQ)))
        if not norm.num:
            raise ZeroDivisionError("inverse of zero divisor")
        ni = finv(norm)
        return RingElem(fmul(self.a, ni), fneg(fmul(self.b, ni)))

    def __truediv__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.a.num and not self.b.num

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return False
        return self.a == o.a and self.b == o.b

    def __ne__(self, o):
        return not self == o

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.a, self.b))
        return self._hash

    def conj(self) -> "RingElem":
        """q-conjugation ``v -> 1/v``."""
        return RingElem(fconj(self.a), fconj(self.b))

    def is_laurent(self) -> bool:
        return self.a.is_laurent() and self.b.is_laurent()

    def __repr__(self):
        return f"RingElem({to_str(self)!r})"

    def __str__(self):
        return to_str(self)


def const(c) -> RingElem:
    return _coerce(c if not isinstance(c, str) else Fraction(c))


ZERO = RingElem(FZERO, FZERO)
ONE = RingElem(FONE, FZERO)
S = RingElem(FZERO, FONE)
SQRT2 = RingElem(_fmono(Root2(mpq(0), mpq(1)), 0), FZERO)
V = RingElem(_fmono(mpq(1), 1), FZERO)
Q = RingElem(_fmono(mpq(1), 2), FZERO)


def vpow(n: int, c=1) -> RingElem:
    """``c * v^n``."""
    if isinstance(c, Root2):
        return RingElem(_fmono(c, n), FZERO)
    return RingElem(_fmono(mpq(c), n), FZERO)


def _q_exp_to_v(e) -> int:
    e2 = Fraction(e) * 2
    if e2.denominator != 1:
        raise ValueError(f"q-exponent {e} is not a multiple of 1/2")
    return int(e2)


def qpow(e, c=1) -> RingElem:
    """``c * q^e`` for ``e`` an integer or half integer."""
    return vpow(_q_exp_to_v(e), c)


def laurent(terms: Dict[object, object]) -> RingElem:
    """Laurent polynomial from ``{q_exponent: coefficient}``."""
    vt: Dict[int, object] = {}
    for e, c in terms.items():
        k = _q_exp_to_v(e)
        c = c if isinstance(c, Root2) else mpq(c)
        vt[k] = vt.get(k, mpq(0)) + c
    return RingElem(_flaurent(vt), FZERO)


def qnum_base(n: int, base) -> RingElem:
    """q-number ``[n]`` in the variable ``q^base``."""
    if n < 0:
        return -qnum_base(-n, base)
    k = _q_exp_to_v(base)
    return RingElem(_flaurent({k * (n - 1 - 2 * j): mpq(1) for j in range(n)}), FZERO)


def qnum(n: int) -> RingElem:
    """``[n]_q = (q^n - q^-n) / (q - q^-1)``."""
    return qnum_base(n, 1)


def qbinom(n: int, k: int, base=1) -> RingElem:
    if k < 0 or k > n:
        return ZERO
    num = ONE
    den = ONE
    for j in range(k):
        num = num * qnum_base(n - j, base)
        den = den * qnum_base(j + 1, base)
    return num / den


# functional API -------------------------------------------------------------


def add(x, y) -> RingElem:
    return _coerce(x) + _coerce(y)


def mul(x, y) -> RingElem:
    return _coerce(x) * _coerce(y)


def invert(x) -> RingElem:
    return _coerce(x).inverse()


def q_conjugate(x) -> RingElem:
    return _coerce(x).conj()


def eval_classical(x):
    """Substitute ``v -> 1`` and ``s -> sqrt2``; returns a base scalar."""
    x = _coerce(x)
    try:
        a = feval(x.a, mpq(1))
        b = feval(x.b, mpq(1))
    except PoleError as exc:
        raise PoleError("pole at q=1") from exc
    return a + b * Root2(mpq(0), mpq(1)) if b != 0 else a


def eval_numeric(x, v0):
    """Return ``(a(v0), b(v0))``; the value is ``a + b*sqrt(v0^2 + v0^-2)``."""
    x = _coerce(x)
    v0 = mpq(v0)
    if v0 <= 0:
        raise ValueError("v0 must be positive")
    return feval(x.a, v0), feval(x.b, v0)


# ---------------------------------------------------------------------------
# text serialisation
#
#   elem  := part | "(" part ")*s" | part " + (" part ")*s"
#   part  := poly | "(" poly ")/(" poly ")"
#   poly  := term ((" + " | " - ") term)*    (leading "-" allowed)
#   term  := rat ["*r2"] ["*q^" exp] | "r2" ["*q^" exp] | "q^" exp


def _fmt_exp(k: int) -> str:
    return str(k // 2) if k % 2 == 0 else f"{k}/2"


def _fmt_rat(c) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _poly_terms(coeffs, sh):
    out = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        a, b = as_pair(c)
        for part, r2 in ((a, False), (b, True)):
            if part != 0:
                out.append((part, r2, i + sh))
    return out


def _poly_str(coeffs, sh) -> str:
    terms = _poly_terms(coeffs, sh)
    if not terms:
        return "0"
    pieces = []
    for n, (c, r2, k) in enumerate(terms):
        neg = c < 0
        c = -c if neg else c
        body = []
        if c != 1 or (not r2 and k == 0):
            body.append(_fmt_rat(c))
        if r2:
            body.append("r2")
        if k != 0:
            body.append("q^" + _fmt_exp(k))
        s = "*".join(body)
        if n == 0:
            pieces.append(("-" if neg else "") + s)
        else:
            pieces.append((" - " if neg else " + ") + s)
    return "".join(pieces)


def _frac_str(x: Frac) -> str:
    if not x.num:
        return "0"
    if len(x.den) == 1:
        return _poly_str(x.num, x.sh)
    return f"({_poly_str(x.num, x.sh)})/({_poly_str(x.den, 0)})"


def to_str(x) -> str:
    x = _coerce(x)
    if not x.b.num:
        return _frac_str(x.a)
    bpart = f"({_frac_str(x.b)})*s"
    if not x.a.num:
        return bpart
    return f"{_frac_str(x.a)} + {bpart}"


_TERM_RE = re.compile(
    r"^(?:(?P<rat>\d+(?:/\d+)?)(?P<r2a>\*r2)?(?:\*q\^(?P<e1>-?\d+(?:/2)?))?"
    r"|(?P<r2b>r2)(?:\*q\^(?P<e2>-?\d+(?:/2)?))?"
    r"|q\^(?P<e3>-?\d+(?:/2)?))$"
)


def _parse_poly(text: str) -> Frac:
    text = text.strip()
    if text == "0":
        return FZERO
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:]
    chunks = re.split(r" ([+-]) ", text)
    signs = [sign] + [1 if s == "+" else -1 for s in chunks[1::2]]
    vt: Dict[int, object] = {}
    for sg, body in zip(signs, chunks[::2]):
        m = _TERM_RE.match(body)
        if not m:
            raise ParseError(f"bad term {body!r}")
        rat = mpq(m.group("rat")) if m.group("rat") else mpq(1)
        r2 = bool(m.group("r2a") or m.group("r2b"))
        e = m.group("e1") or m.group("e2") or m.group("e3") or "0"
        k = _q_exp_to_v(Fraction(e))
        c = scalar(0, sg * rat) if r2 else sg * rat
        vt[k] = vt.get(k, mpq(0)) + c
    return _flaurent(vt)


def _matching_open(text: str, close_idx: int) -> int:
    depth = 0
    for i in range(close_idx, -1, -1):
        if text[i] == ")":
            depth += 1
        elif text[i] == "(":
            depth -= 1
            if depth == 0:
                return i
    raise ParseError("unbalanced parentheses")


def _parse_part(text: str) -> Frac:
    text = text.strip()
    if text.startswith("("):
        close = text.index(")/(")
        num = _parse_poly(text[1:close])
        if not text.endswith(")"):
            raise ParseError(f"bad fraction {text!r}")
        den = _parse_poly(text[close + 3:-1])
        return fmul(num, finv(den))
    return _parse_poly(text)


def parse(text: str) -> RingElem:
    """Inverse of :func:`to_str`."""
    text = text.strip()
    if text.endswith(")*s"):
        op = _matching_open(text, len(text) - 3)
        b = _parse_part(text[op + 1:-3])
        head = text[:op]
        if head == "":
            return RingElem(FZERO, b)
        if not head.endswith(" + "):
            raise ParseError(f"bad element {text!r}")
        return RingElem(_parse_part(head[:-3]), b)
    return RingElem(_parse_part(text), FZERO)
