import random

import pytest
from hypothesis import settings, strategies as st

from genericgb.coeff import RATIONALS, PrimeField
from genericgb.poly import Polynomial

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

SMALL_PRIME = PrimeField(32003)

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def worked():
    """The hand-checked (n, m) = (2, 3) instance over the rationals."""
    f1 = Polynomial.parse("x^2 + 3*x*y + 5*y^2", RATIONALS, 2)
    f2 = Polynomial.parse("7*x^3 + 11*x^2*y + 13*x*y^2 + 17*y^3", RATIONALS, 2)
    return f1, f2


def monomials(nvars, max_exp=4):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


@st.composite
def polynomials(draw, nvars=2, domain=RATIONALS, max_terms=5, max_exp=3, nonzero=False):
    n_terms = draw(st.integers(1 if nonzero else 0, max_terms))
    terms = [(draw(monomials(nvars, max_exp)), draw(st.integers(-9, 9))) for _ in range(n_terms)]
    f = Polynomial(domain, nvars, terms)
    if nonzero and not f:
        f = Polynomial(domain, nvars, [((0,) * nvars, 1)])
    return f


def random_poly(rng: random.Random, nvars, domain, max_terms=5, max_exp=3, coeff=9):
    terms = [(tuple(rng.randint(0, max_exp) for _ in range(nvars)), rng.randint(-coeff, coeff))
             for _ in range(rng.randint(1, max_terms))]
    return Polynomial(domain, nvars, terms)
