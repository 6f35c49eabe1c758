from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import assume, given, strategies as st

from qlie import ring as R
from conftest import ring_elems

q = R.qpow
s = R.S


def v_half(e):
    return q(Fraction(e))


# ---------------------------------------------------------------- examples

def test_addition_examples():
    assert R.ZERO + (q(1) + q(-1)) == q(1) + q(-1)
    assert s + s == 2 * s
    assert (v_half("1/2") - v_half("-1/2")) + (v_half("-1/2") - v_half("1/2")) == R.ZERO


def test_multiplication_examples():
    assert s * s == q(1) + q(-1)
    assert R.SQRT2 * R.SQRT2 == R.const(2)
    assert (q(1) - q(-1)) * (q(1) + q(-1)) == q(2) - q(-2)


def test_inverse_examples():
    assert R.invert(q(1)) == q(-1)
    assert R.invert(s) == s / (q(1) + q(-1))
    assert (q(1) + q(-1)).inverse() * (q(2) + 1) == q(1)
    with pytest.raises(ZeroDivisionError):
        R.ZERO.inverse()


def test_qnum_examples():
    assert R.qnum(1) == R.ONE
    assert R.qnum(2) == q(1) + q(-1)
    assert R.qnum(0) == R.ZERO
    assert R.qnum(-3) == -R.qnum(3)


def test_qbinom_symmetry_and_pascal():
    for n in range(1, 6):
        for k in range(0, n + 1):
            assert R.qbinom(n, k) == R.qbinom(n, n - k)
            if 0 < k < n:
                # q-Pascal rule with q^(+-k) weights in the symmetric normalization
                lhs = R.qbinom(n, k)
                rhs = R.qbinom(n - 1, k - 1) * q(Fraction(-(n - k), 1)) + R.qbinom(n - 1, k) * q(k)
                assert lhs == rhs


def test_conjugation_examples():
    assert R.q_conjugate(v_half("3/2") - v_half("-1/2")) == v_half("-3/2") - v_half("1/2")
    assert R.q_conjugate(s) == s
    x = q(2) + 3 * s
    assert R.q_conjugate(R.q_conjugate(x)) == x


def test_classical_examples():
    assert R.eval_classical(v_half("1/2") + v_half("3/2")) == 2
    assert R.eval_classical(s) == R.scalar(0, 1)
    assert R.eval_classical(R.qnum(5)) == 5
    with pytest.raises(R.PoleError):
        R.eval_classical((q(1) - 1).inverse())


def test_numeric_examples():
    assert R.eval_numeric(q(1), 2) == (4, 0)
    assert R.eval_numeric(q(1) + q(-1), 1) == (2, 0)
    a, b = R.eval_numeric((q(1) - q(-1)) / (v_half("1/2") - v_half("-1/2")), 2)
    assert (a, b) == (mpq(5, 2), 0)
    with pytest.raises(R.PoleError):
        R.eval_numeric((q(1) - 4).inverse(), 2)


def test_canonical_strings():
    assert R.to_str(v_half("1/2") + v_half("3/2")) == "q^1/2 + q^3/2"
    assert R.to_str(R.ZERO) == "0"
    assert R.to_str(-s * q(-1)) == "(-q^-1)*s"
    for text in ["q^1/2 + q^3/2", "2*r2*q^-3/2 - 1", "(q^1)/(1 + q^2)", "1 + (3*q^2)*s"]:
        assert R.to_str(R.parse(text)) == text


def test_parse_rejects_garbage():
    with pytest.raises(R.ParseError):
        R.parse("q^^2")


# -------------------------------------------------------------- properties

@given(ring_elems(), ring_elems(), ring_elems())
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + y == y + x
    assert x - x == R.ZERO


@given(ring_elems(), ring_elems())
def test_conjugation_homomorphism_and_involution(x, y):
    c = R.q_conjugate
    assert c(x * y) == c(x) * c(y)
    assert c(x + y) == c(x) + c(y)
    assert c(c(x)) == x


@given(ring_elems())
def test_inverse(x):
    assume(not x.is_zero())
    assert x * x.inverse() == R.ONE


@given(ring_elems(), ring_elems())
def test_canonical_form_uniqueness(x, y):
    assert ((x - y).is_zero()) == (R.to_str(x) == R.to_str(y))
    assert R.parse(R.to_str(x)) == x


def _pair_mul(p1, p2, sigma2):
    # independent route: (a1 + b1 s)(a2 + b2 s) with s^2 = sigma2
    a1, b1 = p1
    a2, b2 = p2
    return a1 * a2 + b1 * b2 * sigma2, a1 * b2 + a2 * b1


@given(ring_elems(), ring_elems(), st.sampled_from([mpq(2), mpq(3, 2), mpq(5, 7)]))
def test_numeric_evaluation_homomorphism(x, y, v0):
    sigma2 = v0 * v0 + 1 / (v0 * v0)
    ex, ey = R.eval_numeric(x, v0), R.eval_numeric(y, v0)
    assert R.eval_numeric(x * y, v0) == _pair_mul(ex, ey, sigma2)
    sx = R.eval_numeric(x + y, v0)
    assert sx == (ex[0] + ey[0], ex[1] + ey[1])


@given(ring_elems(), ring_elems())
def test_classical_homomorphism(x, y):
    ex, ey = R.eval_classical(x), R.eval_classical(y)
    assert R.eval_classical(x * y) == ex * ey
    assert R.eval_classical(x + y) == ex + ey
