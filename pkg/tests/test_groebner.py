import itertools
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from genericgb.coeff import RATIONALS, PrimeField
from genericgb.errors import ZeroDivisor, ZeroPolynomial
from genericgb.groebner import (
    Ideal,
    buchberger,
    initial_ideal,
    is_groebner,
    is_reduced,
    normal_form,
    s_polynomial,
)
from genericgb.monideal import MonomialIdeal
from genericgb.poly import LT, Polynomial, grevlex_cmp

from .conftest import random_poly

Q = RATIONALS
F = PrimeField(32003)


def P(text, nvars=2, domain=Q):
    return Polynomial.parse(text, domain, nvars)


def sympy_basis(gens):
    """Reduced grevlex basis from sympy, mapped back into our representation."""
    f0 = gens[0]
    syms = sympy.symbols(f"v0:{f0.nvars}")
    exprs = [sum(sympy.Rational(f0.domain.format(c)) * sympy.prod(s**e for s, e in zip(syms, m))
                 for m, c in g.terms) for g in gens]
    kw = {"modulus": f0.domain.modulus} if f0.domain.modulus else {"domain": "QQ"}
    G = sympy.groebner(exprs, *syms, order="grevlex", **kw)
    out = []
    for g in G.exprs:
        poly = sympy.Poly(g, *syms, **kw)
        out.append(Polynomial(f0.domain, f0.nvars,
                              [(m, sympy.Rational(int(c)) if f0.domain.modulus else sympy.Rational(c))
                               for m, c in poly.terms()]).monic())
    return sorted(out, key=lambda p: str(p))


def test_s_polynomial_example():
    f, g = P("x^2 + 3*x*y + 5*y^2"), P("x*y^2 + 2*y^3")
    assert s_polynomial(f, g) == P("x*y^3 + 5*y^4")
    assert not s_polynomial(f, f)
    assert not s_polynomial(P("x^2"), P("y^3"))


def test_s_polynomial_cancels_lcm():
    f, g = P("3*x^2*y + y^3"), P("-2*x*y^2 + x")
    s = s_polynomial(f, g)
    lcm = f.lm.lcm(g.lm)
    assert s and grevlex_cmp(s.lm, lcm) == LT
    with pytest.raises(ZeroPolynomial):
        s_polynomial(f, Polynomial.zero(Q, 2))


def test_normal_form_example():
    f1, f2 = P("x^2 + 3*x*y + 5*y^2"), P("x*y^2 + 67/8*y^3")
    assert normal_form(s_polynomial(f1, f2), [f2]) == P("3201/64*y^4")
    assert not normal_form(f2, [f2])
    g = P("x^3 + y")
    assert normal_form(P("x*y + y^2"), [g]) == P("x*y + y^2")
    with pytest.raises(ZeroDivisor):
        normal_form(g, [Polynomial.zero(Q, 2)])


def test_worked_basis(worked):
    gb = buchberger(Ideal(worked))
    assert gb.reduced and gb.order == "grevlex"
    assert [g.lm for g in gb] == [(0, 4), (1, 2), (2, 0)]
    assert list(gb) == [P("y^4"), P("x*y^2 + 67/8*y^3"), P("x^2 + 3*x*y + 5*y^2")]
    assert initial_ideal(gb) == MonomialIdeal(2, ((2, 0), (1, 2), (0, 4)))
    assert is_groebner(gb) and is_reduced(gb)


def test_trivial_ideals():
    assert list(buchberger([P("x")])) == [P("x")]
    f = P("3*x^2 - y")
    assert list(buchberger([f])) == [f.monic()]
    assert initial_ideal(buchberger([P("x")])) == MonomialIdeal(2, ((1, 0),))


def test_three_three_initial_ideal():
    rng = random.Random(3)
    from genericgb.genericgen import sample_generic_form
    f1, used = sample_generic_form(3, 2, PrimeField(), rng)
    f2, _ = sample_generic_form(3, 2, PrimeField(), rng, used)
    J = initial_ideal(buchberger([f1, f2]))
    assert J == MonomialIdeal(2, ((3, 0), (2, 1), (1, 3), (0, 5)))


def test_ideal_validation():
    with pytest.raises(ValueError):
        Ideal([])
    with pytest.raises(ZeroPolynomial):
        Ideal([Polynomial.zero(Q, 2)])


@pytest.mark.parametrize("seed", range(25))
def test_matches_sympy(seed):
    rng = random.Random(seed)
    nvars = rng.choice([2, 3])
    dom = Q if seed % 2 else F
    gens = [random_poly(rng, nvars, dom, max_terms=3, max_exp=2, coeff=5) for _ in range(rng.randint(1, 3))]
    gens = [g for g in gens if g] or [P("x1", 3) if nvars == 3 else P("x")]
    ours = sorted(buchberger(gens).basis, key=lambda p: str(p))
    assert ours == sympy_basis(gens)


@pytest.mark.parametrize("seed", range(20))
def test_chain_criterion_does_not_change_result(seed):
    rng = random.Random(100 + seed)
    gens = [random_poly(rng, 3, F, max_terms=4, max_exp=2) for _ in range(3)]
    gens = [g for g in gens if g]
    with_chain = buchberger(gens, chain_criterion=True)
    without = buchberger(gens, chain_criterion=False)
    assert with_chain.basis == without.basis
    assert with_chain.stats["pairs"] <= without.stats["pairs"]


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_postconditions(seed):
    rng = random.Random(seed)
    gens = [random_poly(rng, 3, F, max_terms=3, max_exp=2) for _ in range(rng.randint(1, 3))]
    gens = [g for g in gens if g]
    if not gens:
        return
    gb = buchberger(gens)
    basis = list(gb)
    for gi, gj in itertools.combinations(basis, 2):
        assert not normal_form(s_polynomial(gi, gj), basis)
    for g in gens:
        assert not normal_form(g, basis)
    assert is_reduced(basis)
    perm = gens[:]
    rng.shuffle(perm)
    assert buchberger(perm).basis == gb.basis


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_homogeneous_inputs_give_homogeneous_basis(seed):
    rng = random.Random(seed)
    from genericgb.poly import monomials_of_degree
    gens = []
    for _ in range(2):
        d = rng.randint(1, 3)
        gens.append(Polynomial(F, 3, [(m, rng.randint(0, 3)) for m in monomials_of_degree(d, 3)]))
    gens = [g for g in gens if g]
    if gens:
        assert all(g.is_homogeneous() for g in buchberger(gens))
