"""Automorphism generators, group families and the morphism expressions."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylkit import Scalar, WeylElement, bracket
from weylkit.elements import one, p, parse_element, q, zero
from weylkit.errors import (BadParams, ExprSyntaxError, IndexMismatch,
                            NotInvertible, NotLocallyNilpotent, NotUnimodular,
                            PreconditionFailed, ZeroScale)
from weylkit.morphisms import (LTildeGroupElement, RGroupElement, WeylMorphism,
                               alpha1_hat, alpha2_hat, apply, compose, exp_ad,
                               identity_morphism, invert, ltilde_group_identity,
                               ltilde_group_inv, ltilde_group_mul, ltilde_to_aut,
                               parse_morphism, phi, phi_prime, r_group_identity,
                               r_group_inv, r_group_mul, r_to_aut, scale,
                               sl2_semidirect_aut, translation)

from .strategies import element_st, nonzero_scalar_st, scalar_st


def test_images_must_satisfy_the_relation():
    with pytest.raises(PreconditionFailed):
        WeylMorphism(p, p)


def test_generator_images():
    assert apply(phi(2, 1), q) == parse_element("q + p^2")
    assert apply(phi(2, 1), p) == p
    assert apply(phi_prime(3, Scalar(0, 1)), p) == parse_element("p + i*q^3")
    assert apply(scale(2), parse_element("p*q")) == parse_element("p*q")
    assert apply(scale(2), p ** 2) == parse_element("1/4*p^2")
    assert apply(translation(1, 2), p) == parse_element("p - 1")
    assert apply(translation(1, 2), q) == parse_element("q + 2")


def test_compose_applies_left_then_right():
    m = compose(scale(3), phi(2, 1))  # phi is the inner map
    assert apply(m, q) == apply(scale(3), apply(phi(2, 1), q))


def test_invert_round_trips():
    m = compose(phi(2, 1), phi_prime(1, -2))
    inv = invert(m)
    for x in (p, q, parse_element("p^2*q - 3")):
        assert apply(inv, apply(m, x)) == x
    forgetful = WeylMorphism(p, q + p ** 2)
    with pytest.raises(NotInvertible):
        invert(forgetful)


def test_morphisms_preserve_the_relation_on_random_inputs():
    m = compose(phi(3, Scalar(1, 1)), scale(Scalar(0, 1)))
    assert bracket(apply(m, p), apply(m, q)) == one


@given(element_st(max_degree=2, max_terms=3), element_st(max_degree=2, max_terms=3))
def test_morphism_is_multiplicative(x, y):
    m = compose(phi(2, 1), phi_prime(1, -1))
    assert apply(m, x * y) == apply(m, x) * apply(m, y)
    assert apply(m, x + y) == apply(m, x) + apply(m, y)


def test_bad_generator_parameters():
    with pytest.raises(BadParams):
        phi(-1, 1)
    with pytest.raises(ZeroScale):
        scale(0)
    with pytest.raises(NotUnimodular):
        alpha1_hat(((1, 1), (1, 1)))


def test_alpha1_images_and_inverse():
    m = alpha1_hat(((0, 1), (-1, 0)))
    assert apply(m, p) == q
    assert apply(m, q) == -p
    assert apply(invert(m), apply(m, p ** 2 * q)) == p ** 2 * q


def test_translation_is_the_ad_exponential():
    b1, b2 = Scalar(3), Scalar(0, -2)
    z = q.scale(b1) + p.scale(b2)
    m = alpha2_hat(b1, b2)
    assert apply(m, p) == exp_ad(z, p)
    assert apply(m, q) == exp_ad(z, q)


def test_exp_ad_of_phi_generator():
    # exp(ad(λpⁿ⁺¹/(n+1))) realises q ↦ q + λpⁿ
    lam = Scalar(1, 1)
    z = WeylElement.monomial(3, 0).scale(lam / Scalar(3))
    assert exp_ad(z, q) == apply(phi(2, lam), q)
    assert exp_ad(z, p) == p


def test_exp_ad_reports_non_nilpotent_action():
    with pytest.raises(NotLocallyNilpotent):
        exp_ad(parse_element("p*q"), p, max_iter=16)


# -- the solvable group families ------------------------------------------------------


def _r_elem(a, s):
    return RGroupElement((1, 3), a, s)


def test_r_group_laws():
    g = _r_elem([1, -2], Scalar(2))
    h = _r_elem([Scalar(0, 1), 3], Scalar(1, 1))
    e = r_group_identity((1, 3))
    assert r_group_mul(g, e) == g and r_group_mul(e, g) == g
    assert r_group_mul(g, r_group_inv(g)) == e
    with pytest.raises(IndexMismatch):
        r_group_mul(g, r_group_identity((1, 2)))


def test_r_to_aut_is_a_homomorphism():
    g = _r_elem([1, -2], Scalar(2))
    h = _r_elem([Scalar(0, 1), 3], Scalar(1, 1))
    lhs = r_to_aut(r_group_mul(g, h))
    rhs = compose(r_to_aut(g), r_to_aut(h))
    assert lhs.image_p == rhs.image_p and lhs.image_q == rhs.image_q


def test_ltilde_group_laws():
    g = LTildeGroupElement([1, 2, -1], Scalar(1), Scalar(2))
    h = LTildeGroupElement([Scalar(0, 1), 0, 3], Scalar(-2), Scalar(0, 1))
    e = ltilde_group_identity(3)
    assert ltilde_group_mul(g, e) == g and ltilde_group_mul(e, g) == g
    assert ltilde_group_mul(g, ltilde_group_inv(g)) == e
    assert ltilde_group_mul(ltilde_group_inv(g), g) == e


def test_ltilde_to_aut_is_a_homomorphism():
    g = LTildeGroupElement([1, 2, -1], Scalar(1), Scalar(2))
    h = LTildeGroupElement([Scalar(0, 1), 0, 3], Scalar(-2), Scalar(0, 1))
    lhs = ltilde_to_aut(ltilde_group_mul(g, h))
    rhs = compose(ltilde_to_aut(g), ltilde_to_aut(h))
    assert lhs.image_p == rhs.image_p and lhs.image_q == rhs.image_q


def test_ltilde_last_coordinate_acts_trivially():
    g = LTildeGroupElement([0, 0, 5], Scalar(0), Scalar(1))
    m = ltilde_to_aut(g)
    assert m.image_p == p and m.image_q == q


def test_sl2_semidirect_aut_composes_the_two_parts():
    m = sl2_semidirect_aut(((0, 1), (-1, 0)), (1, 1))
    expected = compose(alpha1_hat(((0, 1), (-1, 0))), translation(1, 1))
    assert m.image_p == expected.image_p and m.image_q == expected.image_q


@given(st.lists(scalar_st, min_size=2, max_size=2), nonzero_scalar_st,
       st.lists(scalar_st, min_size=2, max_size=2), nonzero_scalar_st)
def test_r_homomorphism_property(a1, s1, a2, s2):
    g = RGroupElement((2, 5), a1, s1)
    h = RGroupElement((2, 5), a2, s2)
    lhs = r_to_aut(r_group_mul(g, h))
    rhs = compose(r_to_aut(g), r_to_aut(h))
    assert lhs.image_p == rhs.image_p and lhs.image_q == rhs.image_q


# -- morphism expressions -------------------------------------------------------------


def test_parse_morphism_identity_and_chain():
    m = parse_morphism("id")
    assert m.image_p == p and m.image_q == q
    chained = parse_morphism("phi(2,1); scale(3)")
    by_hand = compose(scale(3), phi(2, 1))
    assert chained.image_p == by_hand.image_p
    assert chained.image_q == by_hand.image_q


def test_parse_morphism_all_literals():
    for text in ("phi(2,1)", "phiP(1,-i)", "scale(1/2)", "translate(1,2)",
                 "alpha1(0,1,-1,0)"):
        m = parse_morphism(text)
        assert bracket(m.image_p, m.image_q) == one


def test_parse_morphism_extra_literals_override():
    m = parse_morphism("twist(2)", extra={"twist": lambda args: phi(1, args[0])})
    assert m.image_q == parse_element("q + 2*p")


@pytest.mark.parametrize("bad", ["", "phi", "phi(1)", "phi(1,2,3)", "nope(1)",
                                 "scale(0)", "phi(1,2);;scale(1)",
                                 "alpha1(1,1,1,1)", "phi(-1,2)"])
def test_parse_morphism_rejects_malformed(bad):
    with pytest.raises((ExprSyntaxError, BadParams)):
        parse_morphism(bad)


@given(element_st(max_degree=2, max_terms=3))
def test_parsed_chain_acts_as_composition(x):
    m = parse_morphism("phiP(2,i); scale(2); phi(1,-1)")
    by_hand = compose(phi(1, -1), compose(scale(2), phi_prime(2, Scalar(0, 1))))
    assert apply(m, x) == apply(by_hand, x)
