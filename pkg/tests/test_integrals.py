import pytest

from qg2.errors import InvalidArgs
from qg2.hopf import counit
from qg2.integrals import (build_integrals, distinguished_character_check,
                           distinguished_grouplike_check, dual_integral_check, dual_integrals,
                           e1_chain_scalar, integrals_report, left_integral_dimension,
                           ordered_f_product, restricted_algebra, torus_sum)


@pytest.fixture(scope="module")
def ints():
    return build_integrals(5, 1, 2)


def test_left_and_right_integral(ints):
    alg = ints.alg
    for n in ("e1", "e2", "w1", "w2"):
        b = alg.gen(n)
        assert b * ints.y == ints.y * counit(b), n
        assert ints.y_prime * b == ints.y_prime * counit(b), n
    assert counit(ints.y) == alg.zero


def test_left_integral_fails_without_torus_sum(ints):
    alg = ints.alg
    x = ints.x
    assert alg.gen("w1") * x != x * counit(alg.gen("w1"))


def test_e1_chain_scalar_is_theta_cubed(ints):
    alg = ints.alg
    assert e1_chain_scalar(alg) == alg.mode.theta(3)
    X = alg.monomial((4,) * 5 + (0,) * 11)
    e1 = alg.gen("e1")
    assert e1 * X == X * e1 * e1_chain_scalar(alg)


def test_left_integrals_one_dimensional(ints):
    assert left_integral_dimension(ints) == 1


def test_distinguished_character_and_grouplike(ints):
    assert all(ok for _, ok, _ in distinguished_character_check(ints))
    assert all(ok for _, ok, _ in distinguished_grouplike_check(ints.alg))


def test_ordered_f_product_is_top_monomial_times_theta(ints):
    alg = ints.alg
    top = alg.monomial((0,) * 10 + (4,) * 6)
    assert ordered_f_product(alg) == top * alg.mode.theta(1)


def test_dual_integrals():
    lam, lam_p = dual_integrals(5, 1, 2)
    assert lam and lam_p
    assert all(ok for _, ok, _ in dual_integral_check(5, 1, 2))


def test_torus_sum_absorbs_group_likes(ints):
    alg = ints.alg
    t = torus_sum(alg)
    assert alg.gen("w2") * t == t
    tp = torus_sum(alg, primed=True)
    assert tp * alg.gen("w1'") == tp


def test_degenerate_parameters_rejected():
    with pytest.raises(InvalidArgs):
        restricted_algebra(7, 1, 2)


def test_integral_property_other_root():
    p = build_integrals(7, 1, 3)
    alg = p.alg
    for n in ("e1", "e2", "w1", "w2"):
        b = alg.gen(n)
        assert b * p.y == p.y * counit(b), n
    assert e1_chain_scalar(alg) == alg.mode.theta(9 * 6 * (1 + 3) % 7)
