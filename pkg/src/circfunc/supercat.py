"""Super Catalan numbers S(m, n) and circular super Catalan numbers Omega(m, n).

    S(m, n) = (2m)! (2n)! / (m! n! (m+n)!),   Omega(m, n) = S(m, n) / 4^(m+n)
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .report import Report

_fact_lock = threading.Lock()
_fact_table = [1]


def factorial(n: int) -> int:
    """n! from a shared, lazily extended table."""
    if n < 0:
        raise ValueError("factorial of a negative number")
    table = _fact_table
    if n < len(table):
        return table[n]
    with _fact_lock:
        while len(table) <= n:
            table.append(table[-1] * len(table))
        return table[n]


def super_catalan(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError("indices must be natural numbers")
    num = factorial(2 * m) * factorial(2 * n)
    den = factorial(m) * factorial(n) * factorial(m + n)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"S({m}, {n}) is not an integer: remainder {r}")
    return q


def omega(m: int, n: int) -> Fraction:
    return Fraction(super_catalan(m, n), 4 ** (m + n))


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("index must be a natural number")
    return comb(2 * n, n) // (n + 1)


def check_identities(max_m: int, max_n: int) -> Report:
    """Integrality, ``4S(m,n) = S(m+1,n) + S(m,n+1)`` and the Pascal-like rule for Omega."""
    report = Report("identities")
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            try:
                s = super_catalan(m, n)
            except ArithmeticError as exc:
                report.add(f"integral S({m},{n})", False, str(exc))
                continue
            report.add(f"integral S({m},{n})", True, str(s))
            lhs, rhs = 4 * s, super_catalan(m + 1, n) + super_catalan(m, n + 1)
            report.add(f"4S({m},{n}) = S({m + 1},{n}) + S({m},{n + 1})", lhs == rhs, f"{lhs} vs {rhs}")
            lhs, rhs = omega(m, n), omega(m + 1, n) + omega(m, n + 1)
            report.add(f"Omega({m},{n}) = Omega({m + 1},{n}) + Omega({m},{n + 1})", lhs == rhs, f"{lhs} vs {rhs}")
    for n in range(max_n + 1):
        lhs, rhs = super_catalan(1, n), 2 * catalan(n)
        report.add(f"S(1,{n}) = 2c_{n}", lhs == rhs, f"{lhs} vs {rhs}")
    return report


@dataclass(frozen=True)
class Interpretation:
    m: int
    n: int
    functional_value: Fraction
    twice_super_catalan: int

    @property
    def passed(self) -> bool:
        v = self.functional_value
        return v == self.twice_super_catalan and v.denominator == 1 and v.numerator % 2 == 0


def interpret(m: int, n: int) -> Interpretation:
    """Integral of ``x^(2m) y^(2n)`` over the radius-2 circle next to ``2 S(m, n)``."""
    from .functional import CircleSpec, psi_general
    from .poly import Polynomial

    value = psi_general(CircleSpec(0, 0, 2), Polynomial.monomial(2 * m, 2 * n))
    return Interpretation(m, n, value, 2 * super_catalan(m, n))
