from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra_cs import (
    AlgebraElement,
    LaurentPoly,
    decode_element,
    encode_element,
    extract_phi,
    format_element,
    graded_parts,
    min_grid_size,
    norm_A,
    norm_B,
    parse_element,
    parse_scalar,
    product,
)
from src.exact_arith import Cyclotomic
from src.utils.errors import ConstraintError, NotInvertibleError, ParseError
from tests.strategies import algebra_elements, rational_elements

x = AlgebraElement.x()
y = AlgebraElement.y()
one = AlgebraElement.one()


def test_relation_holds_in_the_algebra():
    assert y * x - x * y * y == AlgebraElement.zero()
    assert parse_element("yx - xy^2").is_zero()


def test_graded_product_rule():
    phi = LaurentPoly.from_dict({0: 1, 1: -1})
    psi = LaurentPoly.from_dict({2: 3})
    a = x * phi.as_element()
    b = (x ** 2) * psi.as_element()
    expected = (x ** 3) * (phi.substitute_power(4) * psi).as_element()
    assert product(a, b) == expected


def test_parse_and_format():
    assert format_element(parse_element("y*x")) == "x*y^2"
    assert format_element(parse_element("2*x - 1/2")) == "-1/2+2*x"
    assert format_element(parse_element("x(1-y)")) == "x-x*y"
    assert format_element(AlgebraElement.zero()) == "0"
    assert parse_element("i^2") == -one
    assert parse_element("z{3}^3") == one
    assert parse_element("z3 + z3^2 + 1").is_zero()


def test_unit_inversion():
    assert parse_element("y^-1") * y == one
    assert parse_element("(2y)^-1") == parse_element("1/2*y^-1")
    assert (AlgebraElement.monomial(0, 3, 5) ** -1) * AlgebraElement.monomial(0, 3, 5) == one
    with pytest.raises(NotInvertibleError):
        (x + 1).inverse()


@pytest.mark.parametrize("text, position", [
    ("x^-1", 0),
    ("1/0", 0),
    ("(x", 2),
    ("x $", 2),
    ("(x+1)^-1", 0),
    ("y^1/2", 2),
    ("z{12", 0),
    ("x + z{12", 4),
])
def test_parse_errors(text, position):
    with pytest.raises(ParseError) as info:
        parse_element(text)
    assert info.value.position == position


def test_parse_scalar():
    assert parse_scalar("1/2 + 1/2*i") == Cyclotomic.from_poly(4, [Fraction(1, 2), Fraction(1, 2)])
    with pytest.raises(ParseError):
        parse_scalar("y")


def test_extract_phi():
    a = parse_element("x(1-y) + 3 + x^2*y^-2")
    assert extract_phi(a, 1) == LaurentPoly.from_dict({0: 1, 1: -1})
    assert extract_phi(a, 0) == LaurentPoly.constant(3)
    assert extract_phi(a, 5).is_zero()
    assert sorted(graded_parts(a)) == [0, 1, 2]


def test_norms():
    a = parse_element("2x - 1/2*y")
    assert norm_A(a) == pytest.approx(2.5)
    assert norm_B(parse_element("x + 3y"), 256) == pytest.approx(4.0)
    assert norm_B(parse_element("1 + y"), 256) == pytest.approx(2.0)
    assert norm_B(parse_element("1 + y"), 256) <= norm_A(parse_element("1 + y"))


def test_grid_too_coarse():
    a = parse_element("y^100")
    assert min_grid_size(a) == 404
    with pytest.raises(ConstraintError, match="grid too coarse"):
        norm_B(a, 256)


def test_structured_encoding():
    a = parse_element("x^3*y^-5 - 2")
    records = encode_element(a)
    assert records[1]["m"] == 3 and records[1]["n"] == "-5"
    assert decode_element(records) == a


@settings(max_examples=60, deadline=None)
@given(rational_elements(max_terms=3), rational_elements(max_terms=3), rational_elements(max_terms=3))
def test_product_is_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=200, deadline=None)
@given(algebra_elements(max_terms=3))
def test_format_parses_back(a):
    assert parse_element(format_element(a)) == a


@settings(max_examples=200, deadline=None)
@given(algebra_elements(max_terms=3))
def test_norm_B_bounded_by_norm_A(a):
    assert norm_B(a, max(256, min_grid_size(a))) <= norm_A(a) + 1e-9


@settings(max_examples=200, deadline=None)
@given(algebra_elements(max_terms=3), algebra_elements(max_terms=3))
def test_norm_A_is_submultiplicative(a, b):
    bound = norm_A(a) * norm_A(b)
    assert norm_A(a * b) <= bound + 1e-9 * (1 + bound)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(min_value=0, max_value=4),
    st.integers(min_value=0, max_value=4),
    rational_elements(max_terms=3, max_m=0),
    rational_elements(max_terms=3, max_m=0),
)
def test_grades_add_under_multiplication(j, k, u, v):
    a = AlgebraElement.monomial(j, 0) * u
    b = AlgebraElement.monomial(k, 0) * v
    expected = [] if u.is_zero() or v.is_zero() else [j + k]
    assert sorted(graded_parts(product(a, b))) == expected
