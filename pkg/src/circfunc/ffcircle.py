"""Unit circle over GF(p) and the character-sum functional built from it.

For an odd prime p and ``k + l < p - 1`` the sum

    -legendre(-1, p) * sum_{x^2 + y^2 = 1} x^k y^l   (mod p)

equals Omega(k/2, l/2) mod p when k, l are both even and 0 otherwise.
This gives an oracle for the rational functional that shares no code with it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import PrimeFieldElement, check_modulus, format_rational, rational_mod_p
from .report import Report

ENUMERATION_LIMIT = 2**20


def legendre(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion."""
    p = check_modulus(p)
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class FiniteCircle:
    modulus: int
    points: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.points)

    def __contains__(self, pt):
        return tuple(pt) in set(self.points)


def _check_budget(p: int) -> int:
    p = check_modulus(p)
    if p >= ENUMERATION_LIMIT:
        raise ValueError(f"prime {p} exceeds enumeration limit {ENUMERATION_LIMIT}")
    return p


def enumerate_circle(p: int) -> FiniteCircle:
    """All ``(x, y)`` in GF(p)^2 with ``x^2 + y^2 = 1``, by direct scan."""
    p = _check_budget(p)
    roots: dict[int, list[int]] = {}
    for y in range(p):
        roots.setdefault(y * y % p, []).append(y)
    points = []
    for x in range(p):
        for y in roots.get((1 - x * x) % p, ()):
            points.append((x, y))
    return FiniteCircle(p, tuple(points))


def parametrized_points(p: int) -> set[tuple[int, int]]:
    """``[-1, 0]`` plus ``((1-u^2)/(1+u^2), 2u/(1+u^2))`` over all u with ``1 + u^2 != 0``."""
    p = _check_budget(p)
    pts = {(p - 1, 0)}
    for u in range(p):
        d = (1 + u * u) % p
        if d == 0:
            continue
        inv = pow(d, -1, p)
        pts.add(((1 - u * u) * inv % p, 2 * u * inv % p))
    return pts


_circle_cache: dict[int, FiniteCircle] = {}


def _circle(p: int) -> FiniteCircle:
    c = _circle_cache.get(p)
    if c is None:
        c = _circle_cache[p] = enumerate_circle(p)
    return c


def psi_finite(p: int, k: int, l: int) -> PrimeFieldElement:
    p = _check_budget(p)
    if k < 0 or l < 0:
        raise ValueError("exponents must be natural numbers")
    if k + l >= p - 1:
        raise ValueError(f"need k + l < p - 1, got k + l = {k + l} for p = {p}")
    s = 0
    for x, y in _circle(p).points:
        s += pow(x, k, p) * pow(y, l, p)
    return PrimeFieldElement(-legendre(-1, p) * s, p)


def cross_check(p: int) -> Report:
    """Compare the finite-field sum with the rational functional for every admissible (k, l)."""
    from .functional import psi_monomial

    p = _check_budget(p)
    report = Report(f"ffcheck p={p}")
    for total in range(p - 1):
        for k in range(total + 1):
            l = total - k
            got = psi_finite(p, k, l)
            want = rational_mod_p(psi_monomial(k, l), p)
            report.add(
                f"({k},{l})",
                got == want,
                f"sum={got.value} psi={format_rational(psi_monomial(k, l))}->{want.value}",
            )
    return report


def odd_primes_up_to(n: int) -> list[int]:
    if n < 3:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(3, n + 1) if sieve[i]]
