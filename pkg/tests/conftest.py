import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from circfunc.poly import Polynomial

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))


@st.composite
def polynomials(draw, max_degree=6, max_terms=5):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        d = draw(st.integers(0, max_degree))
        k = draw(st.integers(0, d))
        terms[(k, d - k)] = draw(small_rationals)
    return Polynomial(terms)


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for name, line in sorted(test_acceptance.RESULTS.items()):
            terminalreporter.write_line(f"{line}  criterion {name}")
