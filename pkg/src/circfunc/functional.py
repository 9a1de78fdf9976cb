"""The circular integral functional over Q.

On the unit circle the functional sends ``x^(2m) y^(2n)`` to the circular super
Catalan number Omega(m, n) and every other monomial to zero.  For the circle of
radius ``r`` centred at ``[a, b]`` it is

    psi_{r,[a,b]}(x^k y^l) = r * psi((a + r x)^k (b + r y)^l).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .poly import CIRCLE, X, Y, Polynomial, Rotation, act, random_polynomial, random_rational
from .reduce import canonicalize
from .report import Report


@dataclass(frozen=True)
class CircleSpec:
    """Circle ``(x - a)^2 + (y - b)^2 = r^2`` with ``r != 0``."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    r: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("a", "b", "r"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.r == 0:
            raise ValueError("circle radius must be nonzero")

    def generator(self) -> Polynomial:
        """``(x - a)^2 + (y - b)^2 - r^2``, which vanishes exactly on the circle."""
        return (X - self.a) ** 2 + (Y - self.b) ** 2 - self.r**2


UNIT_CIRCLE = CircleSpec()


@lru_cache(maxsize=4096)
def psi_monomial(k: int, l: int) -> Fraction:
    if k < 0 or l < 0:
        raise ValueError("exponents must be natural numbers")
    if k % 2 or l % 2:
        return Fraction(0)
    m, n = k // 2, l // 2
    # Omega(m, n) = C(2m, m) C(2n, n) / (4^(m+n) C(m+n, m))
    return Fraction(comb(2 * m, m) * comb(2 * n, n), 4 ** (m + n) * comb(m + n, m))


def psi(p: Polynomial) -> Fraction:
    total = Fraction(0)
    for (k, l), c in p:
        if k % 2 == 0 and l % 2 == 0:
            total += c * psi_monomial(k, l)
    return total


def _shifted_moments(center: Fraction, r: Fraction, k: int) -> list[Fraction]:
    # coefficients of (center + r t)^k in t, index i -> C(k, i) center^(k-i) r^i
    return [comb(k, i) * center ** (k - i) * r**i for i in range(k + 1)]


def psi_general(c: CircleSpec, p: Polynomial) -> Fraction:
    total = Fraction(0)
    for (k, l), coef in p:
        xs = _shifted_moments(c.a, c.r, k)
        ys = _shifted_moments(c.b, c.r, l)
        acc = Fraction(0)
        for i in range(0, k + 1, 2):
            if xs[i] == 0:
                continue
            for j in range(0, l + 1, 2):
                acc += xs[i] * ys[j] * psi_monomial(i, j)
        total += coef * acc
    return c.r * total


def psi_via_canonical(p: Polynomial) -> Fraction:
    """``psi`` of the remainder mod the circle ideal; the ``y*omega`` part integrates to 0."""
    return psi(canonicalize(p).rho)


def random_rotation_parameter(rng: random.Random, bound: int = 100) -> int:
    u = 0
    while u == 0:
        u = rng.randint(-bound, bound)
    return u


def verify_axioms(trials: int, max_degree: int, seed: int = 0, invariance_trials: int | None = None) -> Report:
    """Check Normalization, Locality and Invariance on seeded random inputs.

    Locality runs ``trials`` products ``CIRCLE * q``; Invariance runs
    ``invariance_trials`` (default: ``trials``) random ``(u, p)`` pairs plus -I.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    report = Report("axioms")
    one = psi(Polynomial.one())
    report.add("normalization psi(1) = 1", one == 1, str(one))

    bad = []
    for t in range(trials):
        q = random_polynomial(rng, max_degree)
        v = psi(CIRCLE * q)
        if v != 0:
            bad.append(f"trial {t}: psi = {v}")
    report.add(f"locality on {trials} products", not bad, "; ".join(bad[:5]))

    n_inv = trials if invariance_trials is None else invariance_trials
    bad = []
    minus = Rotation.minus_identity()
    for t in range(n_inv):
        u = random_rotation_parameter(rng)
        p = random_polynomial(rng, max_degree)
        before = psi(p)
        for h in (Rotation(u), minus):
            after = psi(act(h, p))
            if after != before:
                bad.append(f"trial {t}, {h}: {after} != {before}")
    report.add(f"invariance on {n_inv} (u, p) pairs and -I", not bad, "; ".join(bad[:5]))
    return report


def verify_general_circle(trials: int, max_degree: int, seed: int = 0) -> Report:
    """Normalization ``psi_c(1) = r`` and Locality for random circles and multipliers."""
    rng = random.Random(seed)
    report = Report("general circle")
    bad_norm, bad_loc = [], []
    for t in range(trials):
        r = Fraction(0)
        while r == 0:
            r = random_rational(rng)
        c = CircleSpec(random_rational(rng), random_rational(rng), r)
        q = random_polynomial(rng, max_degree)
        if psi_general(c, Polynomial.one()) != c.r:
            bad_norm.append(f"trial {t}: {c}")
        v = psi_general(c, q * c.generator())
        if v != 0:
            bad_loc.append(f"trial {t}: {c}, value {v}")
    report.add(f"normalization psi_c(1) = r on {trials} circles", not bad_norm, "; ".join(bad_norm[:5]))
    report.add(f"locality on {trials} (circle, q) pairs", not bad_loc, "; ".join(bad_loc[:5]))
    return report
