import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qlie import ring as R
from qlie.checks import compare_tables
from qlie.closedform import (
    C2_REFERENCE_N, ConfluenceError, build_closed_tables, c2_reference_check,
    c2_reference_transform, closed_f, closed_l, closed_N, verify_relations,
)
from qlie.killing import closed_killing

from conftest import A_CASES, CASES, ctx_of, rs_of

q = R.qpow
h = Fraction(1, 2)


def test_l_examples():
    assert closed_l(rs_of("B", 2), (1, -1), 1) == q(h) + q(3 * h)
    assert closed_l(rs_of("C", 2), (2, 0), 1) == (q(1) + q(-1)) * q(3)
    assert closed_l(rs_of("B", 2), (1, 0), 2) == q(3 * h) - q(h)
    # i = k = l: both the delta_ik line and the delta_il line contribute
    assert closed_l(rs_of("B", 2), (0, 1), 2) == q(-h) - q(h) + q(3 * h)


def test_delta_il_term_is_needed():
    # l_{eps_k}(H_l) with k < l-1 gets nothing but the delta_il term; dropping
    # that term would make it zero, the pipeline says otherwise
    ctx = ctx_of("B", 3)
    assert ctx.tables.l[((1, 0, 0), 3)] == q(3 * h) - q(h)
    for rank in (2, 3):
        ctx = ctx_of("B", rank)
        for k in range(1, rank):
            e_k = ctx.rs.eps(k)
            assert ctx.tables.l[(e_k, rank)] == closed_l(ctx.rs, e_k, rank)


def test_complete_l_r_g():
    ctx = ctx_of("B", 2)
    ct = build_closed_tables(ctx.rs, kt=ctx.kt)
    a = (1, 0)
    for i in (1, 2):
        assert ct.l[((-1, 0), i)] == -ct.l[(a, i)].conj()
        assert R.eval_classical(ct.r[(a, i)]) == R.eval_classical(ct.l[(a, i)])
        assert ct.g[(a, i)] == ctx.tables.g[(a, i)]


def test_f_examples():
    d = q(h) - q(-h)
    assert closed_f(rs_of("B", 2), 2, 2, 2) == (q(1) + q(-1)) * d - d
    d4 = rs_of("D", 4)
    assert closed_f(d4, 3, 4, 4) == R.ZERO
    assert closed_f(d4, 3, 3, 4) == R.ZERO
    for rs in (rs_of("B", 3), rs_of("C", 3), d4):
        assert closed_f(rs, 1, 2, 3) == R.ZERO


@pytest.mark.parametrize("alg,rank", CASES)
def test_f_total_symmetry(alg, rank):
    rs = rs_of(alg, rank)
    idx = range(1, rank + 1)
    for i in idx:
        for j in idx:
            for k in idx:
                v = closed_f(rs, i, j, k)
                assert v == closed_f(rs, j, i, k) == closed_f(rs, k, j, i)


def test_n_examples():
    b2 = rs_of("B", 2)
    assert closed_N(b2, (0, 1), (1, 0)) == q(h)
    assert closed_N(b2, (1, 0), (0, 1)) == -q(-h)
    c2 = rs_of("C", 2)
    assert closed_N(c2, (1, -1), (0, 2)) / R.S == -q(2)
    assert closed_N(b2, (1, 0), (1, 0)) == R.ZERO


@pytest.mark.parametrize("alg,rank", CASES + A_CASES)
def test_n_closure_is_confluent(alg, rank):
    rs = rs_of(alg, rank)
    for a in rs.roots:
        for b in rs.roots:
            if rs.add_roots(a, b) is None:
                continue
            v, paths = closed_N(rs, a, b, want_paths=True)
            assert paths and all(p[1] == v for p in paths)


@pytest.mark.parametrize("rank", [2, 3])
def test_tabulated_c_sign_is_not_confluent(rank):
    rs = rs_of("C", rank)
    with pytest.raises(ConfluenceError):
        for a in rs.roots:
            for b in rs.roots:
                if rs.add_roots(a, b) is not None:
                    closed_N(rs, a, b, literal=True)


@pytest.mark.parametrize("alg,rank", CASES)
def test_closed_equals_pipeline(alg, rank):
    ctx = ctx_of(alg, rank)
    rpt = compare_tables(ctx.tables, build_closed_tables(ctx.rs, kt=ctx.kt))
    assert rpt.ok, rpt.failures()


@pytest.mark.parametrize("alg,rank", CASES)
def test_shift_rule_on_closed_tables(alg, rank):
    rs = rs_of(alg, rank)
    ct = build_closed_tables(rs)
    for a in rs.roots:
        for b in rs.roots:
            c = rs.add_roots(a, b)
            if c is not None:
                assert ct.get_N(a, b) == q(rs.rho_dot(b)) * ct.get_N(b, rs.neg(c))


def test_relations_examples():
    b2 = ctx_of("B", 2)
    ct = build_closed_tables(b2.rs, kt=b2.kt)
    rpt, ap = verify_relations(ct, b2.kt)
    assert rpt.ok, rpt.failures()

    def root_sum(a):
        rs = ct.rs
        n2 = sum((ct.get_N(a, b) ** 2 * q(-2 * rs.rho_dot(b)) for b in rs.roots
                  if rs.add_roots(a, b) is not None), R.ZERO)
        bi = b2.kt.Binv_cartan
        return n2 + sum(((ct.r[(a, i)] * ct.r[(a, j)] + ct.l[(a, i)] * ct.l[(a, j)]) * bi[(i, j)]
                         for i in (1, 2) for j in (1, 2)), R.ZERO)
    assert root_sum((1, 0)) == root_sum((1, -1)) == ap

    c2 = ctx_of("C", 2)
    ct = build_closed_tables(c2.rs, kt=c2.kt)
    rpt, ap = verify_relations(ct, c2.kt)
    assert rpt.ok
    bc = c2.kt.cartan()
    assert bc[(1, 2)] == -R.ONE


@pytest.mark.parametrize("alg,rank", CASES)
def test_tabulated_unweighted_cartan_relation_fails(alg, rank):
    ctx = ctx_of(alg, rank)
    rpt, _ = verify_relations(ctx.tables, ctx.kt, unweighted_cartan=True)
    names = [n for n, ok, _ in rpt.items if not ok]
    assert len(names) == 1 and "unweighted" in names[0]


def test_c2_reference_tables():
    ctx = ctx_of("C", 2)
    for t in (ctx.tables, build_closed_tables(ctx.rs, kt=ctx.kt)):
        rpt = c2_reference_check(t)
        assert rpt.ok, rpt.failures()
    assert len(C2_REFERENCE_N) * len(next(iter(C2_REFERENCE_N.values()))) == 32


def test_c2_reference_spot_values():
    t = ctx_of("C", 2).tables
    a1, a2 = (1, -1), (0, 2)
    assert t.get_N(a2, a1) / R.S == q(-2)
    assert t.l[((1, 1), 2)] == q(1)
    assert t.l[((2, 0), 2)] == R.ZERO


def test_transformed_c2_tables_do_not_match_reference():
    t = ctx_of("C", 2).tables
    assert not c2_reference_check(c2_reference_transform(t)).ok


@given(st.fractions(-5, 5, max_denominator=6), st.fractions(-5, 5, max_denominator=6),
       st.sampled_from([1, 2, 3]))
def test_a_family_relations(s, t, rank):
    if s + t == 0:
        return
    rs = rs_of("A", rank)
    kt = closed_killing(rs)
    ct = build_closed_tables(rs, (s, t), kt=kt)
    rpt, ap = verify_relations(ct, kt)
    assert rpt.ok, rpt.failures()
