"""Sparse polynomials in two variables ``x`` (alpha_1) and ``y`` (alpha_2).

A :class:`Polynomial` maps exponent pairs ``(k, l)`` to nonzero coefficients.
Coefficients may be ints, :class:`~fractions.Fraction` or
:class:`~circfunc.coeff.PrimeFieldElement`; mixing fields is the caller's
problem.  Values are immutable.

The rotation group SO(2) acts on polynomials by linear substitution,

    (h . p)(x, y) = p(h11*x + h21*y, h12*x + h22*y),

and on points from the right, ``[x, y] . h = [h11*x + h21*y, h12*x + h22*y]``,
so that ``evaluate(act(h, p), pt) == evaluate(p, act_point(pt, h))``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, NamedTuple


class Monomial(NamedTuple):
    k: int
    l: int

    @property
    def degree(self) -> int:
        return self.k + self.l


class AffinePoint(NamedTuple):
    x: object
    y: object


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        if terms:
            for (k, l), c in terms.items():
                if k < 0 or l < 0:
                    raise ValueError(f"negative exponent in ({k}, {l})")
                if c != 0:
                    clean[Monomial(k, l)] = c
        self._terms = clean
        self._hash = None

    # -- constructors --------------------------------------------------

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, k: int, l: int, c=1) -> Polynomial:
        return cls({(k, l): c})

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def one(cls) -> Polynomial:
        return cls.constant(1)

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, k: int, l: int):
        return self._terms.get((k, l), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int | None:
        """Total degree, or ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(m.k + m.l for m in self._terms)

    def degree_in(self, var: int) -> int | None:
        if not self._terms:
            return None
        return max(m[var] for m in self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _lift(other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) or hasattr(other, "modulus"):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for (k1, l1), c1 in self._terms.items():
            for (k2, l2), c2 in other._terms.items():
                key = (k1 + k2, l1 + l2)
                c = c1 * c2
                out[key] = out[key] + c if key in out else c
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> Polynomial:
        return Polynomial({m: c * v for m, v in self._terms.items()})

    def map_coeffs(self, f) -> Polynomial:
        return Polynomial({m: f(v) for m, v in self._terms.items()})

    # -- equality ------------------------------------------------------

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(other._terms[m] == c for m, c in self._terms.items())

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        items = sorted(self._terms.items(), reverse=True)
        return "Polynomial({" + ", ".join(f"({k}, {l}): {c!r}" for (k, l), c in items) + "})"


X = Polynomial.monomial(1, 0)
Y = Polynomial.monomial(0, 1)
CIRCLE = X * X + Y * Y - 1


def add(p1: Polynomial, p2: Polynomial) -> Polynomial:
    return p1 + p2


def mul(p1: Polynomial, p2: Polynomial) -> Polynomial:
    return p1 * p2


def scale(c, p: Polynomial) -> Polynomial:
    return p.scale(c)


def evaluate(p: Polynomial, pt) -> object:
    """Value of ``p`` at the point ``pt = (x, y)``."""
    x, y = pt
    total = 0
    for (k, l), c in p.items():
        total = total + c * x**k * y**l
    return total


# -- rotations ---------------------------------------------------------


class Rotation:
    """An element of SO(2): either ``-I`` or ``h_u`` for a field element ``u``.

    ``h_u = 1/(1+u^2) * [[1-u^2, -2u], [2u, 1-u^2]]``; requires ``1 + u^2 != 0``.
    """

    __slots__ = ("u",)

    def __init__(self, u=None):
        if u is not None:
            if isinstance(u, int):
                u = Fraction(u)
            if 1 + u * u == 0:
                raise ValueError(f"1 + u^2 vanishes at u = {u}")
        self.u = u

    @classmethod
    def minus_identity(cls) -> Rotation:
        return cls(None)

    @property
    def is_minus_identity(self) -> bool:
        return self.u is None

    def matrix(self):
        return rotation_matrix(self)

    def __eq__(self, other):
        return isinstance(other, Rotation) and self.u == other.u

    def __hash__(self):
        return hash(self.u)

    def __repr__(self):
        return "Rotation(-I)" if self.u is None else f"Rotation(u={self.u})"


MINUS_IDENTITY = Rotation.minus_identity()


def rotation_matrix(h: Rotation):
    """2x2 matrix ``((h11, h12), (h21, h22))`` of the rotation."""
    if h.u is None:
        return ((-1, 0), (0, -1))
    u = h.u
    d = 1 + u * u
    c = (1 - u * u) / d
    s = (2 * u) / d
    return ((c, -s), (s, c))


def matmul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _linear_powers(a, b, n: int) -> list[dict]:
    """Term maps of ``(a*x + b*y)**j`` for j = 0..n, by the binomial theorem."""
    out = []
    for j in range(n + 1):
        terms = {}
        for i in range(j + 1):
            c = comb(j, i) * a**i * b ** (j - i)
            if c != 0:
                terms[(i, j - i)] = c
        out.append(terms)
    return out


def act_matrix(h, p: Polynomial) -> Polynomial:
    """Substitute ``x -> h11*x + h21*y`` and ``y -> h12*x + h22*y`` in ``p``."""
    (h11, h12), (h21, h22) = h
    if p.is_zero():
        return p
    kmax = max(m.k for m, _ in p)
    lmax = max(m.l for m, _ in p)
    xs = _linear_powers(h11, h21, kmax)
    ys = _linear_powers(h12, h22, lmax)
    out: dict = {}
    for (k, l), c in p:
        for (i1, j1), a in xs[k].items():
            ca = c * a
            for (i2, j2), b in ys[l].items():
                key = (i1 + i2, j1 + j2)
                v = ca * b
                out[key] = out[key] + v if key in out else v
    return Polynomial(out)


def act(h: Rotation, p: Polynomial) -> Polynomial:
    """Left action of a rotation on a polynomial."""
    if h.u is None:
        return Polynomial({m: (-c if (m.k + m.l) % 2 else c) for m, c in p})
    return act_matrix(rotation_matrix(h), p)


def act_point(pt, h) -> AffinePoint:
    """Right action ``[x, y] . h``; ``h`` may be a Rotation or a 2x2 matrix."""
    (h11, h12), (h21, h22) = rotation_matrix(h) if isinstance(h, Rotation) else h
    x, y = pt
    return AffinePoint(h11 * x + h21 * y, h12 * x + h22 * y)


# -- division ----------------------------------------------------------


def lex_key(var_order: tuple[int, int]):
    """Sort key for lexicographic order with ``var_order[0]`` dominant.

    ``(0, 1)`` compares the x-exponent first, ``(1, 0)`` the y-exponent first.
    """
    i, j = var_order
    return lambda m: (m[i], m[j])


def leading_term(p: Polynomial, var_order=(0, 1)):
    m = max(p.terms, key=lex_key(var_order))
    return m, p.coeff(*m)


def divide(p: Polynomial, g: Polynomial, var_order=(0, 1)):
    """Multivariate division of ``p`` by a single ``g`` under a lex order.

    Returns ``(quotient, remainder)`` with ``p == quotient * g + remainder`` and
    no term of the remainder divisible by the leading monomial of ``g``.
    Coefficients must support exact division.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    (gk, gl), gc = leading_term(g, var_order)
    key = lex_key(var_order)
    quotient: dict = {}
    remainder: dict = {}
    rest = p
    while not rest.is_zero():
        (k, l) = max(rest.terms, key=key)
        c = rest.coeff(k, l)
        if k >= gk and l >= gl:
            q = (Fraction(c) if isinstance(c, int) else c) / gc
            m = (k - gk, l - gl)
            quotient[m] = quotient.get(m, 0) + q
            rest = rest - Polynomial.monomial(*m, q) * g
        else:
            remainder[(k, l)] = c
            rest = rest - Polynomial.monomial(k, l, c)
    return Polynomial(quotient), Polynomial(remainder)


# -- random generation -------------------------------------------------


def random_rational(rng: random.Random) -> Fraction:
    """Numerator in [-9, 9], denominator in [1, 9]."""
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_polynomial(
    rng: random.Random, max_degree: int, max_terms: int = 6
) -> Polynomial:
    """Random polynomial over Q with up to ``max_terms`` terms of degree <= max_degree."""
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_degree)
        k = rng.randint(0, d)
        terms[(k, d - k)] = random_rational(rng)
    return Polynomial(terms)


def from_univariate(coeffs: Iterable, var: int = 0) -> Polynomial:
    """Polynomial in a single variable from a coefficient list, constant first."""
    out = {}
    for i, c in enumerate(coeffs):
        out[(i, 0) if var == 0 else (0, i)] = c
    return Polynomial(out)
