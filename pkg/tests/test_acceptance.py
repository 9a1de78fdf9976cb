"""Exit criteria.  Each test records one PASS/FAIL line, printed after the run."""

import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from circfunc.expr import format_poly, parse_poly
from circfunc.ffcircle import cross_check
from circfunc.functional import (
    psi,
    psi_general,
    psi_monomial,
    verify_axioms,
    verify_general_circle,
)
from circfunc.poly import CIRCLE, X, Y, Polynomial, divide, random_polynomial
from circfunc.reduce import canonicalize, is_ideal_member, vanishes_on_sample
from circfunc.supercat import catalan, check_identities, interpret, super_catalan

RESULTS: dict[str, str] = {}


class criterion:
    def __init__(self, name, budget):
        self.name, self.budget = name, budget

    def __enter__(self):
        self.start = time.perf_counter()
        RESULTS[self.name] = "FAIL (did not finish)"
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.budget
        RESULTS[self.name] = f"{'PASS' if ok else 'FAIL'}  ({elapsed:.2f}s, budget {self.budget}s)"
        if exc_type is None:
            assert elapsed < self.budget, f"{self.name} took {elapsed:.2f}s"
        return False


def test_1_super_catalan_identities():
    with criterion("1 super Catalan identities, 0 <= m,n <= 20", 1.0):
        report = check_identities(20, 20)
        assert report.ok, report.failures[:3]
        names = {c.name.split()[0] for c in report.checks}
        assert {"integral", "4S(0,0)", "Omega(0,0)", "S(1,0)"} <= names
        assert all(super_catalan(1, n) == 2 * catalan(n) for n in range(21))


def test_2_functional_axioms():
    with criterion("2 axioms: normalization, 1000 locality, 100 invariance + -I", 10.0):
        report = verify_axioms(1000, 12, seed=2024, invariance_trials=100)
        assert report.ok, report.failures
        assert psi(Polynomial.one()) == 1


def test_3_uniqueness_recurrences():
    with criterion("3 first-order recurrence, 1 <= m <= 50", 1.0):
        for m in range(1, 51):
            assert 2 * m * psi(X ** (2 * m)) == (2 * m - 1) * psi(X ** (2 * m - 2))
            assert psi(X ** (2 * m - 1) * Y) == 0


def test_4_canonical_reduction():
    with criterion("4 canonical reduction on 500 random p", 10.0):
        rng = random.Random(4)
        for _ in range(500):
            p = random_polynomial(rng, 12)
            canon = canonicalize(p).to_polynomial()
            _, r = divide(p - canon, CIRCLE)
            assert r.is_zero()
            assert psi(p) == psi(canon)
            # 12 parametrized points plus [-1, 0]
            assert is_ideal_member(p) == vanishes_on_sample(p, 12)
            assert is_ideal_member(p - canon) and vanishes_on_sample(p - canon, 12)


def test_5_finite_field_bridge():
    with criterion("5 finite-field bridge, p in 5..23", 5.0):
        total = 0
        for p in (5, 7, 11, 13, 17, 19, 23):
            report = cross_check(p)
            assert report.ok, report.failures
            assert len(report) == (p - 1) * p // 2
            total += len(report)
        assert total == 10 + 21 + 55 + 78 + 136 + 171 + 253


def test_6_headline_theorem():
    with criterion("6 psi_2,[0,0](x^2m y^2n) = 2S(m,n), 0 <= m,n <= 10", 1.0):
        for m in range(11):
            for n in range(11):
                res = interpret(m, n)
                assert res.passed, res
                # third path: scale the unit-circle value directly
                assert 2 * 4 ** (m + n) * psi_monomial(2 * m, 2 * n) == res.twice_super_catalan


def test_7_general_circle_axioms():
    with criterion("7 general-circle normalization and locality, 100 tuples", 5.0):
        report = verify_general_circle(100, 6, seed=7)
        assert report.ok, report.failures


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "circfunc", *args], capture_output=True, text=True)


def test_8_cli_contract():
    with criterion("8 CLI round-trip and exit codes", 30.0):
        rng = random.Random(8)
        for _ in range(200):
            p = random_polynomial(rng, 12)
            assert parse_poly(format_poly(p)) == p
        ok = _cli("ffcheck", "--prime", "5")
        assert ok.returncode == 0 and "10/10" in ok.stdout
        assert _cli("psi", "x^2*y^2").stdout == "1/8\n"
        assert _cli("interpret", "--m", "1", "--n", "1").returncode == 0
        assert _cli("psi", "x^2*y^2", "--expect", "1/9").returncode == 1
        assert _cli("psi", "x^^2").returncode == 2
        assert _cli("ffcheck", "--prime", "15").returncode == 2
        assert _cli("table", "--bogus").returncode == 2


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
