from fractions import Fraction

import pytest

from qlie import ring as R
from qlie.killing import (
    KillingTable, cartan_inverse, closed_cartan, closed_killing, closed_killing_inverse,
    compute_killing, dagger_form, verify_ad_invariance, verify_dagger,
)
from qlie.qlabuild import H, X
from qlie.rootdata import build_root_system, inner

from conftest import A_CASES, CASES, ctx_of, rs_of

q = R.qpow


def test_closed_examples():
    kt = closed_killing(rs_of("B", 2))
    assert kt(X((1, 0)), X((-1, 0))) == q(Fraction(-3, 2))
    assert kt(H(2), H(2)) == R.ONE
    kc = closed_killing(rs_of("C", 2))
    assert kc(H(2), H(2)) == (q(2) + q(-2)) / (q(1) + q(-1))


@pytest.mark.parametrize("alg,rank", CASES)
def test_computed_equals_closed(alg, rank):
    ctx = ctx_of(alg, rank)
    comp = compute_killing(ctx.pipeline.real)
    closed = ctx.kt
    keys = set(comp.B) | set(closed.B)
    assert all(comp(*k) == closed(*k) for k in keys)
    assert comp.Binv_cartan == closed.Binv_cartan
    assert comp.Binv_roots == closed.Binv_roots


@pytest.mark.parametrize("alg,rank", CASES + A_CASES + [("B", 4), ("C", 4), ("D", 5), ("A", 4)])
def test_closed_inverse(alg, rank):
    rs = build_root_system(alg, rank)
    l = rs.rank
    bc = closed_cartan(rs)
    inv = closed_killing_inverse(rs)
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            v = sum((bc[(i, m)] * inv[(m, j)] for m in range(1, l + 1)), R.ZERO)
            assert v == (R.ONE if i == j else R.ZERO)
    assert cartan_inverse(bc, l) == inv


@pytest.mark.parametrize("rank", [4, 5])
def test_tabulated_d_range_is_not_an_inverse(rank):
    rs = build_root_system("D", rank)
    assert closed_killing_inverse(rs, literal_d_range=True) != cartan_inverse(closed_cartan(rs), rank)


@pytest.mark.parametrize("alg,rank", CASES + A_CASES)
def test_cartan_block_support(alg, rank):
    rs = rs_of(alg, rank)
    bc = closed_cartan(rs)
    s = rs.simple_roots
    for (i, j), v in bc.items():
        assert (not v.is_zero()) == (inner(s[i - 1], s[j - 1]) != 0)


@pytest.mark.parametrize("alg,rank", CASES + A_CASES)
def test_nonsymmetry(alg, rank):
    rs = rs_of(alg, rank)
    kt = closed_killing(rs)
    for a in rs.roots:
        lhs = kt(X(rs.neg(a)), X(a))
        assert lhs == q(2 * rs.rho_dot(a)) * kt(X(a), X(rs.neg(a)))
        assert kt.Binv_roots[a] * kt(X(a), X(rs.neg(a))) == R.ONE


def test_ad_invariance_b2_full_sweep():
    ctx = ctx_of("B", 2)
    rpt = verify_ad_invariance(ctx.rs, ctx.pipeline.bracket, ctx.kt)
    assert rpt.ok, rpt.failures()


def test_ad_invariance_c2_cartan_triple():
    ctx = ctx_of("C", 2)
    rpt = verify_ad_invariance(ctx.rs, ctx.pipeline.bracket, ctx.kt, triples=[(H(1), H(2), H(1))])
    assert rpt.ok


def test_perturbed_form_fails_ad_invariance():
    ctx = ctx_of("B", 2)
    kt = ctx.kt
    bad = KillingTable(kt.rs, dict(kt.B), kt.Binv_cartan, kt.Binv_roots)
    bad.B[(H(1), H(2))] = bad.B[(H(1), H(2))] + 1
    rpt = verify_ad_invariance(ctx.rs, ctx.pipeline.bracket, bad)
    assert not rpt.ok


def test_dagger_example_and_sweep():
    ctx = ctx_of("B", 2)
    rs = ctx.rs
    form = dagger_form(rs, ctx.kt.cartan())
    brk = ctx.pipeline.bracket
    e1 = X((1, 0))
    lval = brk(H(1), e1)[e1]
    lhs = sum((v * form.get((d, e1), R.ZERO) for d, v in brk(H(1), e1).items()), R.ZERO)
    rhs = sum((form.get((e1, d), R.ZERO) * v for d, v in brk(H(1), e1).items()), R.ZERO)
    assert lhs == rhs == lval
    assert verify_dagger(rs, brk, form).ok
