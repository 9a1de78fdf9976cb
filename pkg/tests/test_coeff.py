from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from circfunc.coeff import (
    PrimeField,
    PrimeFieldElement,
    check_modulus,
    format_rational,
    inverse,
    is_prime,
    parse_rational,
    rational_mod_p,
)

from .conftest import small_rationals

PRIMES = [3, 5, 7, 11, 13, 101, 65537]
residues = st.integers(-10**6, 10**6)


def test_rational_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    x = Fraction(2, 4)
    assert (x.numerator, x.denominator) == (1, 2)
    assert Fraction(0, 7).denominator == 1
    assert Fraction(3, -6).denominator == 2


def test_prime_field_inverse():
    assert PrimeField(5)(2).inverse() == 3
    assert inverse(PrimeFieldElement(2, 5)).value == 3


def test_rational_mod_p_examples():
    assert rational_mod_p(Fraction(1, 2), 5).value == 3
    # 8 = 3 mod 5 and 3 * 2 = 6 = 1 mod 5
    assert rational_mod_p(Fraction(1, 8), 5).value == 2
    with pytest.raises(ValueError):
        rational_mod_p(Fraction(1, 5), 5)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        PrimeField(7)(3) / PrimeField(7)(0)
    with pytest.raises(ZeroDivisionError):
        PrimeField(7)(0).inverse()
    with pytest.raises(ZeroDivisionError):
        inverse(Fraction(0))


def test_mixed_moduli_rejected():
    with pytest.raises(ValueError, match="mixed moduli"):
        PrimeField(5)(1) + PrimeField(7)(1)


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15, 561, 2**32 + 15])
def test_bad_moduli(bad):
    with pytest.raises(ValueError):
        check_modulus(bad)


def test_is_prime_against_sieve():
    limit = 2000
    composite = set()
    for i in range(2, limit):
        composite.update(range(2 * i, limit, i))
    assert [n for n in range(limit) if is_prime(n)] == [
        n for n in range(2, limit) if n not in composite
    ]
    assert is_prime(4294967291)  # largest prime below 2**32


def test_text_forms():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(6, 3)) == "2"
    assert parse_rational(" -3/4 ") == Fraction(-3, 4)
    assert parse_rational("5") == 5
    assert str(PrimeField(7)(10)) == "3 (mod 7)"
    for bad in ["1.5", "a", "", "1/"]:
        with pytest.raises(ValueError):
            parse_rational(bad)


@pytest.mark.parametrize("p", PRIMES)
@given(a=residues, b=residues, c=residues)
def test_prime_field_axioms(p, a, b, c):
    F = PrimeField(p)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x + (-x) == 0
    assert x - y == x + (-y)
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


@given(x=small_rationals, y=small_rationals, z=small_rationals)
def test_rational_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    if x:
        assert x * inverse(x) == 1
    # normalization is idempotent
    n = Fraction(x.numerator, x.denominator)
    assert (n.numerator, n.denominator) == (x.numerator, x.denominator)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@given(
    x=st.builds(Fraction, st.integers(-50, 50), st.integers(1, 50)),
    y=st.builds(Fraction, st.integers(-50, 50), st.integers(1, 50)),
)
def test_mod_p_is_ring_homomorphism(p, x, y):
    if x.denominator % p == 0 or y.denominator % p == 0:
        return
    assert rational_mod_p(x + y, p) == rational_mod_p(x, p) + rational_mod_p(y, p)
    assert rational_mod_p(x * y, p) == rational_mod_p(x, p) * rational_mod_p(y, p)
