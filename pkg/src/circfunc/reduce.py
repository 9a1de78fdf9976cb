"""Reduction modulo the circle ideal <x^2 + y^2 - 1>.

Every polynomial is congruent to a unique ``rho(x) + y*omega(x)``: split each
``y^l`` as ``y^(l mod 2) * (1 - x^2)^(l // 2)`` and expand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .poly import Y, AffinePoint, Polynomial, evaluate


@dataclass(frozen=True)
class CanonicalForm:
    """``rho(x) + y * omega(x)``; both parts are polynomials in x alone."""

    rho: Polynomial
    omega: Polynomial

    def to_polynomial(self) -> Polynomial:
        return self.rho + Y * self.omega

    def is_zero(self) -> bool:
        return self.rho.is_zero() and self.omega.is_zero()

    def __add__(self, other: CanonicalForm) -> CanonicalForm:
        return CanonicalForm(self.rho + other.rho, self.omega + other.omega)


def canonicalize(p: Polynomial) -> CanonicalForm:
    rho: dict = {}
    omega: dict = {}
    for (k, l), c in p:
        half, odd = divmod(l, 2)
        target = omega if odd else rho
        # (1 - x^2)^half = sum_j (-1)^j C(half, j) x^(2j)
        for j in range(half + 1):
            v = c * comb(half, j)
            if j % 2:
                v = -v
            key = (k + 2 * j, 0)
            target[key] = target[key] + v if key in target else v
    return CanonicalForm(Polynomial(rho), Polynomial(omega))


def is_ideal_member(p: Polynomial) -> bool:
    return canonicalize(p).is_zero()


def circle_point(u) -> AffinePoint:
    """Point of the unit circle hit by the line through [-1, 0] of slope ``u``."""
    u = Fraction(u) if isinstance(u, int) else u
    d = 1 + u * u
    return AffinePoint((1 - u * u) / d, (2 * u) / d)


def sample_points(count: int) -> list[AffinePoint]:
    """``[-1, 0]`` followed by the rational points for u = 1..count."""
    return [AffinePoint(Fraction(-1), Fraction(0))] + [
        circle_point(u) for u in range(1, count + 1)
    ]


def vanishes_on_sample(p: Polynomial, count: int) -> bool:
    if count < 1:
        raise ValueError("count must be positive")
    return all(evaluate(p, pt) == 0 for pt in sample_points(count))
