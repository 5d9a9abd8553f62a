import pytest
from hypothesis import given, settings, strategies as st

from qg2.coeff.modes import GENERIC, RootOfUnity
from qg2.coeff.ratfunc import RatFunc
from qg2.errors import InvalidArgs
from qg2.hopf import coproduct
from qg2.pairing import (Character, Double, Pairing, antipode_invariance_report,
                         double_relation_report, dual_basis_block, commutator_cross_report,
                         hit_both, nondegeneracy_check, psi_relation_report, r_matrix,
                         ribbon_precheck, serre_eta_report)
from qg2.pbw.algebra import Element
from qg2.pbw.ops import get_algebra

r, s = RatFunc.monomial(1, 0), RatFunc.monomial(0, 1)
GEN = get_algebra(GENERIC)
B_LETTERS = ("e1", "e2", "w1", "w2")
BP_LETTERS = ("f1", "f2", "w1'", "w2'")


def word(letters):
    x = GEN.unit()
    for l in letters:
        x = x * GEN.gen(l)
    return x


b_words = st.lists(st.sampled_from(B_LETTERS), max_size=2).map(word)
bp_words = st.lists(st.sampled_from(BP_LETTERS), max_size=2).map(word)


def mono(m):
    return Element(GEN, {m: GEN.one})


def test_simple_values_both_norms():
    g = GEN.gen
    prop, dbl = Pairing(GEN, "prop"), Pairing(GEN, "double")
    assert prop.pair(g("f1"), g("e1")) == (s - r).inv()
    assert prop.pair(g("f2"), g("e2")) == (s**3 - r**3).inv()
    assert dbl.pair(g("f1"), g("e1")) == RatFunc.const(1)
    assert dbl.pair(g("f1"), g("e2")) == RatFunc.const(0)
    assert dbl.pair(g("w1'"), g("w1")) == r * s**-1
    assert dbl.pair(g("w1'"), g("e1")) == RatFunc.const(0)
    with pytest.raises(InvalidArgs):
        Pairing(GEN, "other")
    with pytest.raises(InvalidArgs):
        dbl.pair(g("e1"), g("f1"))


def test_serre_word_values():
    g = GEN.gen
    P = Pairing(GEN, "double")
    f1, f2, e1, e2, E12 = g("f1"), g("f2"), g("e1"), g("e2"), g("E12")
    assert P.pair(f2 * f2 * f1, e2 * e2 * e1) == 1 + r**3 * s**-3
    assert P.pair(f2 * f2 * f1, e2 * E12) == RatFunc.const(0)
    assert P.pair(f2 * f1 * f2, e2 * e2 * e1) == r**-3 + s**-3
    assert P.pair(f2 * f1 * f2, e2 * E12) == 1 - r**-3 * s**3
    assert P.pair(f1 * f2 * f2, e2 * e2 * e1) == r**-3 * (r**-3 + s**-3)
    assert P.pair(f1 * f2 * f2, e2 * E12) == s**3 * (s**-6 - r**-6)


@settings(max_examples=25)
@given(bp_words, b_words, b_words)
def test_pairing_against_products_in_b(a, x, y):
    P = Pairing(GEN, "prop")
    rhs = GEN.zero
    for (a1, a2), c in coproduct(a).terms.items():
        rhs = rhs + c * P.pair(mono(a1), y) * P.pair(mono(a2), x)
    assert P.pair(a, x * y) == rhs


@settings(max_examples=25)
@given(bp_words, bp_words, b_words)
def test_pairing_against_products_in_bp(a, b, x):
    P = Pairing(GEN, "prop")
    rhs = GEN.zero
    for (x1, x2), c in coproduct(x).terms.items():
        rhs = rhs + c * P.pair(a, mono(x1)) * P.pair(b, mono(x2))
    assert P.pair(a * b, x) == rhs


def test_antipode_invariance():
    g = GEN.gen
    bp = [g("f1"), g("f2") * g("f1"), g("w1'") * g("F12"), g("F1112")]
    b = [g("e1"), g("E12"), g("w2") * g("E12"), g("E1112"), g("e2") * g("e1")]
    rep = antipode_invariance_report(GEN, [(u, v) for u in bp for v in b])
    assert all(ok for _, ok, _, _ in rep)


def test_eta_serre_relations():
    rep = serre_eta_report(GEN)
    assert len(rep) > 0
    assert all(ok for _, ok, _ in rep), [l for l, ok, _ in rep if not ok]


@pytest.fixture(scope="module")
def u5():
    return get_algebra(RootOfUnity(5, 1, 2), restricted=True)


@pytest.mark.parametrize("norm", ["double", "prop"])
def test_double_relations(u5, norm):
    D = Double(u5, norm)
    rep = double_relation_report(D)
    assert len(rep) == 34
    assert all(not v.terms for _, v in rep), [l for l, v in rep if v.terms]


@pytest.mark.parametrize("norm", ["double", "prop"])
def test_psi_homomorphism(u5, norm):
    D = Double(u5, norm)
    rep = psi_relation_report(D)
    assert len(rep) == 144
    assert all(ok for _, ok, _, _ in rep)
    assert all(ok for _, ok, _, _ in commutator_cross_report(D))


def test_double_cross_needs_inverse_antipode(u5, monkeypatch):
    # using S instead of S^-1 in the cross relation must break the double
    D = Double(u5, "double")
    monkeypatch.setattr(D.hopf, "antipode_inv", D.hopf.antipode)
    rep = double_relation_report(D)
    assert any(v.terms for _, v in rep)


def test_nondegeneracy():
    assert nondegeneracy_check(5, 1, 2)
    assert nondegeneracy_check(11, 2, 5)
    # 3 (1 + 4 + 2) = 21 shares the factor 7
    assert not nondegeneracy_check(7, 1, 2)
    assert not nondegeneracy_check(3, 1, 1)


def test_characters(u5):
    g = u5.gen
    d = Character.from_pairing(u5, 5, 3)
    assert d * d.inverse() == Character(u5, u5.one, u5.one)
    assert d(g("e1")) == u5.zero
    assert d(g("w1") * g("w2")) == d(g("w1")) * d(g("w2"))
    # trivial characters on both sides leave x unchanged
    one = Character(u5, u5.one, u5.one)
    x = g("E112") * g("w2")
    assert hit_both(x, one, one) == x


def test_ribbon_preconditions(u5):
    rep = ribbon_precheck(u5)
    assert len(rep) == 2 + 8 + 8
    assert all(ok for _, ok, _, _ in rep), [l for l, ok, _, _ in rep if not ok]


def test_ribbon_needs_correct_grouplike(u5):
    from qg2.hopf import antipode
    g = u5.gen
    d = Character.from_pairing(u5, 5, 3)
    wrong = g("w1") ** -4 * g("w2") ** -3
    a = u5.E_vec(3)
    assert antipode(antipode(a)) != wrong * hit_both(a, d, d.inverse()) * wrong ** -1


@pytest.mark.parametrize("weight", [(1, 0), (0, 1), (1, 1)])
def test_dual_basis(u5, weight):
    pairs = dual_basis_block(u5, weight)
    P = Pairing(u5, "double")
    assert len(pairs) == 25 * {(1, 0): 1, (0, 1): 1, (1, 1): 2}[weight]
    for i, (x, _) in enumerate(pairs[:6]):
        for j, (_, beta) in enumerate(pairs[:6]):
            want = u5.one if i == j else u5.zero
            assert P.pair(beta, Element(u5, {x: u5.one})) == want


def test_r_matrix_is_opt_in(u5):
    with pytest.raises(InvalidArgs):
        r_matrix(u5)
    with pytest.raises(InvalidArgs):
        r_matrix(GEN, enable=True)
    it = r_matrix(u5, enable=True)
    x, beta = next(it)
    assert x == (0,) * 16 and beta
