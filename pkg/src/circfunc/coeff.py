"""Exact coefficient fields: rationals and residues modulo an odd prime.

Rationals are plain :class:`fractions.Fraction` values, which are always
stored reduced with a positive denominator.  Prime-field residues are
:class:`PrimeFieldElement` instances; both support ``+ - * /``, unary
negation and :func:`inverse`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

Rational = Fraction

MAX_MODULUS = 2**32

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a"`` or ``"a/b"`` into a reduced fraction.  No decimals."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_prime(n: int) -> bool:
    # trial division; moduli are capped at 2**32 so at most 2**16 candidates
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@lru_cache(maxsize=256)
def check_modulus(p: int) -> int:
    """Return ``p`` if it is an odd prime below ``2**32``, else raise ValueError."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f"modulus must be an int, got {type(p).__name__}")
    if p >= MAX_MODULUS:
        raise ValueError(f"modulus {p} too large (limit 2**32)")
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


@dataclass(frozen=True, eq=False)
class PrimeFieldElement:
    """Residue class ``value mod modulus`` for an odd prime modulus."""

    value: int
    modulus: int

    def __post_init__(self):
        p = check_modulus(self.modulus)
        object.__setattr__(self, "value", self.value % p)

    def _coerce(self, other) -> int | None:
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"mixed moduli: {self.modulus} and {other.modulus}"
                )
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return rational_mod_p(other, self.modulus).value
        return None

    def _new(self, v: int) -> PrimeFieldElement:
        return PrimeFieldElement(v, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * self._new(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._new(o) * self.inverse()

    def __neg__(self):
        return self._new(-self.value)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self._new(pow(self.value, e, self.modulus))

    def inverse(self) -> PrimeFieldElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.modulus}")
        return self._new(pow(self.value, -1, self.modulus))

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"

    def __repr__(self):
        return f"PrimeFieldElement({self.value}, {self.modulus})"


class PrimeField:
    """Factory for elements of GF(p); validates ``p`` once."""

    def __init__(self, p: int):
        self.p = check_modulus(p)

    def __call__(self, value: int | Fraction) -> PrimeFieldElement:
        if isinstance(value, Fraction):
            return rational_mod_p(value, self.p)
        return PrimeFieldElement(value, self.p)

    @property
    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self.p)

    @property
    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self.p)

    def elements(self):
        return [PrimeFieldElement(v, self.p) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def inverse(x):
    """Multiplicative inverse in either field."""
    if isinstance(x, PrimeFieldElement):
        return x.inverse()
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("0 has no inverse")
    return 1 / x


def rational_mod_p(x: Fraction | int, p: int) -> PrimeFieldElement:
    """Image of ``x`` under the reduction map Z_(p) -> GF(p).

    Raises ValueError when the reduced denominator is divisible by ``p``.
    """
    p = check_modulus(p)
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"{format_rational(x)} has denominator divisible by {p}")
    return PrimeFieldElement(x.numerator * pow(x.denominator, -1, p), p)
