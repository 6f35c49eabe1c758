import pytest

from qlie import ring as R
from qlie.tensordecomp import (
    build_submodule_bases, check_top_vectors_numeric, coproduct_action, expand_in_basis,
    pair, tv_add, tv_weight, verify_completeness, verify_tabulated_duals, verify_submodule,
)
from qlie.vectorrep import build_vector_rep

from conftest import CASES, rs_of

q = R.qpow


def _dec(alg, rank, **kw):
    rs = rs_of(alg, rank)
    return build_submodule_bases(rs, build_vector_rep(rs), **kw)


def test_h_on_product_state():
    rs = rs_of("B", 2)
    rep = build_vector_rep(rs)
    assert coproduct_action(rep, rs, "h", 0, {(1, 1): R.ONE}) == {(1, 1): R.const(2)}


def test_singlet_is_annihilated():
    dec = _dec("B", 2)
    for i in range(2):
        assert coproduct_action(dec.rep, dec.rs, "e", i, dec.singlet) == {}


def test_lowering_on_diagonal_state():
    # x_2^- (|2>|2>) with x (x) q^{-h/2} + q^{h/2} (x) x, derived by hand:
    # c (q^1/2 |2,3> + q^-1/2 |3,2>),  c = (q^1/2 + q^-1/2)/sqrt2
    rs = rs_of("B", 2)
    rep = build_vector_rep(rs)
    c = (R.vpow(1) + R.vpow(-1)) / R.SQRT2
    got = coproduct_action(rep, rs, "f", 1, {(2, 2): R.ONE})
    assert got == {(2, 3): c * R.vpow(1), (3, 2): c * R.vpow(-1)}


def test_singlet_norm_b2():
    dec = _dec("B", 2)
    assert pair(dec.singlet, dec.singlet) == q(3) + q(1) + 1 + q(-1) + q(-3)


def test_duality_and_orthogonality():
    dec = _dec("B", 2)
    adj = dec.bases[dec.adjoint_label]
    for k in adj.keys:
        for k2 in adj.keys:
            assert pair(adj.duals[k], adj.vectors[k2]) == (R.ONE if k == k2 else R.ZERO)
    top = dec.bases["2e1"]
    for k in top.keys:
        for k2 in adj.keys:
            assert pair(top.duals[k], adj.vectors[k2]) == R.ZERO


def test_expand_in_basis():
    dec = _dec("B", 2)
    adj = dec.adjoint
    k3 = adj.keys[2]
    coeffs, res = expand_in_basis(adj.vectors[k3], adj)
    assert res == {} and coeffs[k3] == R.ONE
    assert all(coeffs[k] == R.ZERO for k in adj.keys if k != k3)
    coeffs, res = expand_in_basis(dec.singlet, adj)
    assert all(v.is_zero() for v in coeffs.values())
    assert res == dec.singlet
    w = tv_add(tv_add({}, adj.vectors[adj.keys[0]], q(1)), adj.vectors[adj.keys[1]], R.S)
    coeffs, res = expand_in_basis(w, adj)
    assert res == {} and coeffs[adj.keys[0]] == q(1) and coeffs[adj.keys[1]] == R.S


@pytest.mark.parametrize("alg,rank", CASES)
def test_submodules(alg, rank):
    dec = _dec(alg, rank)
    for lab in dec.bases:
        rpt = verify_submodule(dec, lab)
        assert rpt.ok, rpt.failures()
    for rpt in (verify_completeness(dec), verify_tabulated_duals(dec), check_top_vectors_numeric(dec)):
        assert rpt.ok, rpt.failures()


@pytest.mark.parametrize("alg,rank", CASES)
def test_basis_vectors_are_weight_vectors(alg, rank):
    dec = _dec(alg, rank)
    for (lab, k), v in dec.all_vectors():
        assert tv_weight(dec.rep, v) is not None, (lab, k)


def test_dropping_delta_term_breaks_invariance():
    dec = _dec("B", 2)
    top = dec.bases["2e1"]
    vec = dict(top.vectors[("c", 2)])
    del vec[(3, 3)]
    top.vectors[("c", 2)] = vec
    rpt = verify_submodule(dec, "2e1")
    assert "2e1: invariance" in dict(rpt.failures())


@pytest.mark.parametrize("rank", [2, 3])
def test_tabulated_b_dual_fails_duality(rank):
    dec = _dec("B", rank, literal_b_dual=True)
    rpt = verify_submodule(dec, "2e1")
    assert "2e1: duality" in dict(rpt.failures())
