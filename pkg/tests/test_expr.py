from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewpbw import (
    LaurentRing,
    ParseError,
    PrimeField,
    SchemaError,
    SkewPoly,
    format_polynomial,
    load_catalog,
    multiply,
    parse_coefficient,
    parse_polynomial,
)
from skewpbw.expr import parse_expression
from skewpbw.ratfunc import FractionField

from conftest import random_poly


@pytest.fixture(scope="module")
def dq():
    return load_catalog("dqsq").presentation


def test_precedence(dq):
    two = dq.backend.coerce(2)
    assert parse_polynomial("2*x1^2 + 1", dq) == SkewPoly({(2, 0, 0, 0): two, (0,) * 4: dq.backend.one})
    assert parse_polynomial("(2*x1)^2", dq) == SkewPoly({(2, 0, 0, 0): two * two})
    assert parse_polynomial("-x1^2", dq) == SkewPoly({(2, 0, 0, 0): dq.backend.coerce(-1)})
    assert parse_polynomial("1 - 2 - 3", dq) == dq.const(-4)
    assert parse_polynomial("12/3/2", dq) == dq.const(2)


def test_product_respects_order(dq):
    assert parse_polynomial("d1*x1", dq) == multiply(dq, dq.var(2), dq.var(0))
    assert parse_polynomial("d1*x1", dq) != parse_polynomial("x1*d1", dq)


def test_printer_example(dq):
    f = parse_polynomial("d1*x1^2", dq)
    assert format_polynomial(dq, f) == "q^2*x1^2*d1 + (q+1)*x1"


def test_printer_signs(dq):
    assert format_polynomial(dq, dq.zero()) == "0"
    assert format_polynomial(dq, parse_polynomial("3 - x1", dq)) == "-x1 + 3"
    assert format_polynomial(dq, parse_polynomial("-1/2*q*d2 - x2", dq)) == "-x2 - 1/2*q*d2"


def test_coefficient_parsing():
    L = LaurentRing(["q", "t"])
    assert parse_coefficient("q^-2*t/3", L) == L.param("q", -2) * L.param("t") * Fraction(1, 3)
    F = PrimeField(7)
    assert parse_coefficient("3^-1 + 2", F) == F.zero
    FF = FractionField(L)
    a = parse_coefficient("q/(q+1)", FF)
    assert parse_coefficient(FF.format(a), FF) == a


@pytest.mark.parametrize("text, column", [
    ("x1 +* 2", 5),
    ("(x1", 4),
    ("", 1),
    ("2 $", 3),
    ("x1^1.5", 4),
    ("x9", 1),
    ("x1 x2", 4),
])
def test_parse_errors_are_positioned(dq, text, column):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, dq)
    assert info.value.column == column
    assert info.value.line == 1


def test_division_only_by_units(dq):
    with pytest.raises(ParseError, match="not a unit"):
        parse_polynomial("x1/(q+1)", dq)
    with pytest.raises(ParseError, match="divide by a coefficient"):
        parse_polynomial("x1/x2", dq)
    assert parse_polynomial("x1/(2*q)", dq) == SkewPoly(
        {(1, 0, 0, 0): dq.backend.domain.param("q", -1) * Fraction(1, 2)})


def test_negative_exponents():
    dq = load_catalog("dqsq").presentation
    with pytest.raises(SchemaError, match="negative exponent on non-Laurent variable"):
        parse_polynomial("x1^-1", dq)
    torus = load_catalog("quantum-torus").presentation
    f = parse_polynomial("(2*q*x1^-1*x2)^-1", torus)
    assert multiply(torus, f, parse_polynomial("2*q*x1^-1*x2", torus)) == torus.one()
    assert parse_polynomial("q^-1*x1", torus) == SkewPoly(
        {(1, 0): torus.backend.domain.param("q", -1)})


def test_ast_positions():
    node = parse_expression("a + b*c")
    assert node.op == "add" and node.args[1].pos == 4


def test_round_trip_catalog(catalog_doc, rng):
    p = catalog_doc.ring
    for _ in range(40):
        f = random_poly(p, rng)
        assert parse_polynomial(format_polynomial(p, f), p) == f


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3),
                          st.fractions(max_denominator=9).filter(lambda x: x != 0)), max_size=5))
def test_round_trip_torus(terms):
    p = load_catalog("quantum-torus").presentation
    f = SkewPoly({})
    for a, b, c in terms:
        f = f + SkewPoly({(a, b): p.backend.coerce(c)})
    assert parse_polynomial(format_polynomial(p, f), p) == f
