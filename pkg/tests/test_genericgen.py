import random

import pytest
from hypothesis import given, settings, strategies as st

from genericgb.coeff import RATIONALS, PrimeField
from genericgb.errors import ArityMismatch, Degenerate, DegreeOrder
from genericgb.genericgen import (
    GenericSpec,
    derive_seed,
    reduce_second_generator,
    sample_generic_form,
    sample_generic_forms,
)
from genericgb.groebner import buchberger, normal_form
from genericgb.poly import Polynomial, monomials_of_degree

Q = RATIONALS
F = PrimeField()


def test_binary_quadric_shape():
    f, used = sample_generic_form(2, 2, F, random.Random(0))
    assert [m for m, _ in f.terms] == [(2, 0), (1, 1), (0, 2)]
    assert len(used) == 3 and 0 not in used


def test_linear_form_in_three_vars():
    f, _ = sample_generic_form(1, 3, Q, random.Random(0))
    assert len(f) == 3


def test_exclusion_threading_keeps_sets_disjoint():
    rng = random.Random(9)
    f, used = sample_generic_form(3, 2, PrimeField(31), rng)
    g, used2 = sample_generic_form(3, 2, PrimeField(31), rng, used)
    assert not used & used2
    assert {c for _, c in f.terms} == used


@settings(max_examples=50)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**40))
def test_sampled_forms_are_dense_and_distinct(d, k, seed):
    f, used = sample_generic_form(d, k, F, random.Random(seed))
    assert f.is_homogeneous() and f.degree == d
    assert [m for m, _ in f.terms] == [tuple(m) for m in monomials_of_degree(d, k)]
    coeffs = [c for _, c in f.terms]
    assert len(set(coeffs)) == len(coeffs) and all(coeffs)


def test_spec_sorts_degrees_and_is_deterministic():
    spec = GenericSpec(3, (3, 1, 2), F, seed=5)
    assert spec.degrees == (1, 2, 3)
    a, b = sample_generic_forms(spec), sample_generic_forms(spec)
    assert a == b
    assert [f.degree for f in a] == [1, 2, 3]
    coeffs = [c for f in a for _, c in f.terms]
    assert len(set(coeffs)) == len(coeffs)


def test_derive_seed_is_stable():
    assert derive_seed(0, 1) == derive_seed(0, 1)
    assert derive_seed(0, 1) != derive_seed(0, 2) != derive_seed(1, 1)
    assert 0 <= derive_seed(123, 456) < 2**63


def test_reduce_worked(worked):
    f1, f2 = worked
    assert reduce_second_generator(f1, f2) == Polynomial.parse("8*x*y^2 + 67*y^3", Q, 2)


@pytest.mark.parametrize("n,m", [(1, 1), (1, 4), (2, 2), (3, 3), (3, 5), (4, 9)])
def test_reduced_support(n, m):
    rng = random.Random(n * 100 + m)
    f1, used = sample_generic_form(n, 2, F, rng)
    f2, _ = sample_generic_form(m, 2, F, rng, used)
    r = reduce_second_generator(f1, f2)
    mu = m - n
    assert [t for t, _ in r.terms] == [(n - i, mu + i) for i in range(1, n + 1)]
    assert r.is_homogeneous() and r.degree == m
    if n == 1:
        assert len(r) == 1 and r.lm == (0, m)
    # <f1, f2> == <f1, r>
    assert not normal_form(f2, buchberger([f1, r]).basis)
    assert not normal_form(r, buchberger([f1, f2]).basis)


def test_reduce_errors():
    f = Polynomial.parse("x^2 + x*y + y^2", Q, 2)
    g = Polynomial.parse("x^3 + y^3", Q, 2)
    with pytest.raises(DegreeOrder):
        reduce_second_generator(g, f)
    with pytest.raises(ArityMismatch):
        reduce_second_generator(Polynomial.parse("x1", Q, 3), Polynomial.parse("x2", Q, 3))
    with pytest.raises(Degenerate):
        reduce_second_generator(Polynomial.parse("x*y + y^2", Q, 2), g)
    # f2 = x * f1 leaves a zero remainder
    with pytest.raises(Degenerate):
        reduce_second_generator(f, f * Polynomial.parse("x", Q, 2))
