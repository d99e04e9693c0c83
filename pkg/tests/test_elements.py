"""Normal-ordered arithmetic, spans, gradings and the expression language."""

from fractions import Fraction

import pytest
from hypothesis import given

from weylkit import Scalar, WeylElement, bracket, ad_pow, symmetrize
from weylkit.elements import (ElementSpan, SymTensor, coordinates,
                              format_element, linear_span_dim, one,
                              parse_element, p, q, weight_decompose,
                              wn_components, zero)
from weylkit.errors import ExprSyntaxError

from .oracles import oracle_product
from .strategies import element_st, scalar_st


def _monomial_product(i: int, j: int, k: int, l: int) -> WeylElement:
    return WeylElement.monomial(i, j) * WeylElement.monomial(k, l)


def test_defining_relation():
    assert p * q - q * p == one
    assert bracket(p, q) == one


def test_product_against_word_oracle_small():
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for l in range(4):
                    assert _monomial_product(i, j, k, l) == oracle_product(i, j, k, l)


def test_known_products():
    assert parse_element("q^2*p^2") == parse_element("p^2*q^2 - 4*p*q + 2")
    assert parse_element("q*p") == parse_element("p*q - 1")
    assert (q ** 3) * (p ** 3) == parse_element(
        "p^3*q^3 - 9*p^2*q^2 + 18*p*q - 6")


def test_power_matches_repeated_product():
    x = parse_element("p + q^2")
    assert x ** 3 == x * x * x
    assert x ** 0 == one


def test_scale_and_negation():
    x = parse_element("p*q - 1/2")
    assert x.scale(Scalar(0, 2)) == parse_element("2i*p*q - i")
    assert x + (-x) == zero


def test_degree_and_leading_monomial():
    x = parse_element("3*p^2*q - q^4 + 1")
    assert x.degree() == 4
    assert x.leading_monomial() == (0, 4)
    assert x.coeff(2, 1) == Scalar(3)
    assert x.coeff(5, 5) == Scalar(0)


def test_ad_pow():
    h = parse_element("p*q")
    assert ad_pow(h, q, 3) == q
    assert ad_pow(h, p, 2) == p
    assert ad_pow(p ** 2, q, 2) == zero


def test_wn_components_follow_symmetrized_grading():
    # p²q = (p ⊙ p ⊙ q) + p, so a W₁ shadow appears alongside W₃.
    x = parse_element("p^2*q - p*q + 3")
    comps = wn_components(x)
    assert sorted(comps) == [0, 1, 2, 3]
    assert comps[3] == symmetrize(SymTensor([(1, 0), (1, 0), (0, 1)]))
    assert comps[2] == -symmetrize(SymTensor([(1, 0), (0, 1)]))
    assert comps[1] == p
    total = zero
    for c in comps.values():
        total = total + c
    assert total == x


def test_weight_decompose():
    x = parse_element("p^2*q - p*q + q^3")
    parts = weight_decompose(x)
    assert sorted(w for w, _ in parts) == [-1, 0, 3]
    total = zero
    for _, c in parts:
        total = total + c
    assert total == x


def test_symmetrize_pq():
    # p ⊙ q = (pq + qp)/2 = pq - 1/2
    assert symmetrize(SymTensor([(1, 0), (0, 1)])) == parse_element("p*q - 1/2")


def test_symmetrize_repeated_factor():
    v = SymTensor([(1, 1), (1, 1), (1, 1)])
    assert symmetrize(v) == parse_element("p + q") ** 3


def test_symmetrize_lands_in_single_degree():
    x = symmetrize(SymTensor([(1, 2), (0, 1), (3, 0)]))
    assert set(wn_components(x)) == {3}


# -- spans ----------------------------------------------------------------------------


def test_span_insert_and_membership():
    span = ElementSpan()
    assert span.insert(parse_element("p + q")) is not None
    assert span.insert(parse_element("p - q")) is not None
    assert span.insert(p) is None
    assert span.dim == 2
    assert span.contains(q)
    assert not span.contains(one)


def test_span_express_counts_every_generator():
    span = ElementSpan()
    span.insert(p)
    span.insert(p.scale(3))       # dependent: still occupies a coordinate
    span.insert(q)
    coords = span.express(parse_element("2*p + 5*q"))
    assert coords == [Scalar(2), Scalar(0), Scalar(5)]
    assert span.express(one) is None


def test_span_row_coordinates_are_over_pivot_rows():
    span = ElementSpan()
    span.insert(p)
    span.insert(p.scale(3))
    span.insert(q)
    assert span.row_coordinates(parse_element("2*p + 5*q")) == [Scalar(2), Scalar(5)]
    assert span.row_coordinates(one) is None


def test_reduced_basis_is_canonical():
    a = ElementSpan()
    for t in ("p + q", "p - q"):
        a.insert(parse_element(t))
    b = ElementSpan()
    for t in ("q", "3*p + q"):
        b.insert(parse_element(t))
    assert a.reduced_basis() == b.reduced_basis()


def test_linear_span_dim_and_coordinates():
    dim, basis = linear_span_dim([p, q, parse_element("p + q"), zero])
    assert dim == 2 and len(basis) == 2
    assert coordinates(parse_element("p - 2*q"), [p, q]) == [Scalar(1), Scalar(-2)]
    assert coordinates(one, [p, q]) is None


# -- the expression language ----------------------------------------------------------


PARSE_GOLDEN = [
    ("-1/2*q^2", WeylElement.monomial(0, 2, coeff=Scalar(Fraction(-1, 2)))),
    ("p*q - q*p", one),
    ("(1/2+i)*p", p.scale(Scalar(Fraction(1, 2), 1))),
    ("i", one.scale(Scalar(0, 1))),
    ("p^3*q - 2", parse_element("p^3*q") - one - one),
]


@pytest.mark.parametrize("text,value", PARSE_GOLDEN)
def test_parse_golden(text, value):
    assert parse_element(text) == value


def test_format_orders_terms_canonically():
    x = parse_element("1 + q^2 + p*q + p^2")
    assert format_element(x) == "p^2 + p*q + q^2 + 1"
    assert format_element(zero) == "0"
    assert format_element(-p) == "-p"


@pytest.mark.parametrize("bad", ["", "p q", "p^", "p**q", "(p+q)", "2.5*p", "x"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ExprSyntaxError):
        parse_element(bad)


@given(element_st())
def test_parse_format_round_trip(x):
    assert parse_element(format_element(x)) == x


@given(element_st(max_degree=2, max_terms=3), element_st(max_degree=2, max_terms=3),
       element_st(max_degree=2, max_terms=3))
def test_product_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(element_st(max_degree=2, max_terms=3), element_st(max_degree=2, max_terms=3),
       element_st(max_degree=2, max_terms=3))
def test_jacobi_identity(x, y, z):
    total = (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x))
             + bracket(z, bracket(x, y)))
    assert total == zero


@given(element_st(), element_st())
def test_bracket_lowers_total_degree_by_two(x, y):
    b = bracket(x, y)
    if not (b.is_zero() or x.is_zero() or y.is_zero()):
        assert b.degree() <= x.degree() + y.degree() - 2


@given(element_st(), scalar_st)
def test_scaling_distributes_over_terms(x, c):
    assert x.scale(c) + x.scale(Scalar(1) - c) == x
