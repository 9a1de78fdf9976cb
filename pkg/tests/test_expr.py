import random
from fractions import Fraction

import pytest
from hypothesis import given

from circfunc.expr import ParseError, format_poly, parse_poly
from circfunc.poly import CIRCLE, X, Y, Polynomial, random_polynomial

from .conftest import polynomials


def test_parse_examples():
    assert parse_poly("x^2*y^2") == Polynomial.monomial(2, 2)
    p = parse_poly("3/2*x^2 - y + 1")
    assert len(p) == 3 and p == Fraction(3, 2) * X**2 - Y + 1
    assert parse_poly("x^2 + y^2 - 1") == CIRCLE


@pytest.mark.parametrize(
    "text,expected",
    [
        ("  x ^ 3 *  y", X**3 * Y),
        ("-x", -X),
        ("+2", Polynomial.constant(2)),
        ("x*x*y", X**2 * Y),
        ("x - x", Polynomial.zero()),
        ("0", Polynomial.zero()),
        ("12/8*y", Fraction(3, 2) * Y),
    ],
)
def test_parse_variants(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize(
    "text,pos",
    [
        ("x^^2", 2),
        ("x +", 3),
        ("2x", 1),
        ("x^2*3", 4),
        ("z", 0),
        ("", 0),
        ("1/0*x", 2),
        ("x * (y)", 4),
        ("x^1.5", 3),
    ],
)
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_poly(text)
    assert exc.value.position == pos
    assert "position" in str(exc.value)


def test_exponent_overflow():
    parse_poly("x^1000000")
    with pytest.raises(ParseError, match="exceeds"):
        parse_poly("x^1000001")
    with pytest.raises(ParseError, match="exceeds"):
        parse_poly("x^1000000*x")


def test_format_examples():
    assert format_poly(CIRCLE) == "x^2 + y^2 - 1"
    assert format_poly(Polynomial.zero()) == "0"
    assert format_poly(-Fraction(3, 2) * X * Y + Fraction(-1, 3)) == "-3/2*x*y - 1/3"


@given(polynomials(max_degree=12, max_terms=8))
def test_round_trip(p):
    assert parse_poly(format_poly(p)) == p


def test_round_trip_seeded():
    rng = random.Random(8)
    for _ in range(200):
        p = random_polynomial(rng, 12)
        assert parse_poly(format_poly(p)) == p
