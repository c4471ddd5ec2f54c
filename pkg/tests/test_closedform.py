from fractions import Fraction

import pytest

from genericgb.closedform import (
    ClosedFormSpec,
    closed_form_basis,
    closed_form_initial_ideal,
    cross_validate,
    expand_syzygy,
    lead_syzygy,
    run_closed_form,
    sample_pair,
    syzygy_pair,
    verify_syzygy,
)
from genericgb.coeff import RATIONALS, PrimeField
from genericgb.errors import Degenerate, IndexOutOfRange, LengthMismatch, Mismatch
from genericgb.genericgen import reduce_second_generator
from genericgb.groebner import normal_form, s_polynomial
from genericgb.monideal import MonomialIdeal
from genericgb.poly import Polynomial

Q = RATIONALS
F = PrimeField()


def P(text, domain=Q):
    return Polynomial.parse(text, domain, 2)


def generic_basis(n, m, seed=0, domain=F):
    f1, f2 = sample_pair(n, m, domain, seed)
    return closed_form_basis(f1, reduce_second_generator(f1, f2))


def test_worked_third_element(worked):
    f1, f2 = worked
    r = reduce_second_generator(f1, f2)
    cf = closed_form_basis(f1, r)
    assert cf.coefficient(3, 1) == Fraction(3201, 64)
    assert cf.polynomials[2] == P("3201/64*y^4")
    # the same element by one S-polynomial and one reduction step
    assert normal_form(s_polynomial(f1, r), [r]) == cf.polynomials[2]


def test_spec_shapes():
    s = ClosedFormSpec(3, 5)
    assert s.mu == 2
    assert [s.row_length(t) for t in range(1, 5)] == [4, 3, 2, 1]
    assert [s.leading_exponents(t) for t in range(1, 5)] == [(3, 0), (2, 3), (1, 5), (0, 7)]
    with pytest.raises(ValueError):
        ClosedFormSpec(4, 3)
    with pytest.raises(ValueError):
        ClosedFormSpec(0, 3)


def test_n_equals_one():
    cf = generic_basis(1, 5)
    assert len(cf) == 2 and cf.polynomials[1].lm == (0, 5) and len(cf.polynomials[1]) == 1


@pytest.mark.parametrize("n,m", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3), (3, 6), (5, 5), (6, 9)])
def test_basis_shape(n, m):
    cf = generic_basis(n, m, seed=n + m)
    spec = cf.spec
    assert len(cf) == n + 1
    for t, f in enumerate(cf.polynomials, start=1):
        assert f.lm == spec.leading_exponents(t)
        assert f.is_homogeneous() and f.degree == (n if t == 1 else m + t - 2)
        assert len(f) == spec.row_length(t)
        assert all(cf.rows[t - 1])
        assert cf.monic_rows[t - 1][0] == 1
    last = cf.polynomials[-1]
    assert len(last) == 1 and last.lm == (0, spec.mu + 2 * n - 1)


@pytest.mark.parametrize("n,m", [(2, 3), (3, 3), (4, 6), (5, 5)])
def test_recursion_matches_s_polynomial_route(n, m):
    cf = generic_basis(n, m, seed=7)
    polys = cf.polynomials
    for t in range(1, n):
        assert normal_form(s_polynomial(polys[t - 1], polys[t]), [polys[t]]) == polys[t + 1]


def test_basis_rejects_non_generic_shape():
    with pytest.raises(Degenerate):
        closed_form_basis(P("x^2 + 5*y^2"), P("8*x*y^2 + 67*y^3"))
    with pytest.raises(Degenerate):
        closed_form_basis(P("x^2 + 3*x*y + 5*y^2"), P("67*y^3"))
    # a_{3,1} = b_{1,3} - b_{2,2} (b_{1,2} - b_{2,2}) = 1 - 1 * (2 - 1) = 0
    with pytest.raises(Degenerate):
        closed_form_basis(P("x^2 + 2*x*y + y^2"), P("x*y^2 + y^3"))


def test_initial_ideal_formula():
    assert closed_form_initial_ideal(ClosedFormSpec(2, 3)) == MonomialIdeal(2, ((2, 0), (1, 2), (0, 4)))
    assert closed_form_initial_ideal(ClosedFormSpec(1, 4)) == MonomialIdeal(2, ((1, 0), (0, 4)))
    assert closed_form_initial_ideal(ClosedFormSpec(3, 3)) == MonomialIdeal(2, ((3, 0), (2, 1), (1, 3), (0, 5)))
    for n in range(1, 8):
        for m in range(n, 10):
            assert len(closed_form_initial_ideal(ClosedFormSpec(n, m))) == n + 1


# syzygies -------------------------------------------------------------------

def entries(S):
    return [str(e) for e in S.entries]


def test_syzygy_pair_examples():
    spec = ClosedFormSpec(2, 3)
    assert entries(syzygy_pair(1, spec)) == ["y^2", "-x", "0"]
    assert entries(syzygy_pair(2, spec)) == ["0", "y^2", "-x"]
    with pytest.raises(IndexOutOfRange):
        syzygy_pair(3, spec)


def test_syzygies_are_lcm_syzygies():
    spec = ClosedFormSpec(4, 7)
    lms = [spec.leading_exponents(t) for t in range(1, 6)]
    for i in range(1, 5):
        for j in range(i + 1, 6):
            S = lead_syzygy(i, j, spec)
            lcm = tuple(max(a, b) for a, b in zip(lms[i - 1], lms[j - 1]))
            assert S.entries[i - 1].lm == tuple(a - b for a, b in zip(lcm, lms[i - 1]))
            assert S.entries[j - 1].lm == tuple(a - b for a, b in zip(lcm, lms[j - 1]))


def test_expand_examples():
    spec = ClosedFormSpec(3, 4)  # mu = 1
    e = expand_syzygy(1, 2, spec)
    assert e.holds and entries(e.combination) == ["y^4", "0", "-x^2", "0"]
    assert e.multipliers == (((0, 2), (1, 2)), ((1, 0), (2, 3)))
    e1 = expand_syzygy(2, 1, spec)
    assert e1.holds and e1.combination.entries == syzygy_pair(2, spec).entries
    e22 = expand_syzygy(2, 2, spec)
    assert entries(e22.combination) == ["0", "y^4", "0", "-x^2"]
    with pytest.raises(IndexOutOfRange):
        expand_syzygy(3, 2, spec)


def test_verify_syzygy():
    cf = generic_basis(4, 6, seed=2)
    spec = cf.spec
    for i in range(1, 5):
        assert verify_syzygy(syzygy_pair(i, spec), cf)
    for i in range(1, 5):
        for t in range(1, 6 - i):
            assert verify_syzygy(expand_syzygy(i, t, spec).combination, cf)
    S = syzygy_pair(2, spec)
    bad = list(S.entries)
    bad[1] = bad[1].scale(2)
    assert not verify_syzygy(type(S)(tuple(bad), S.pair), cf)
    with pytest.raises(LengthMismatch):
        verify_syzygy(syzygy_pair(1, ClosedFormSpec(2, 3)), cf)


# cross-validation -----------------------------------------------------------

def test_cross_validate_worked(worked):
    rep = cross_validate(*worked)
    assert rep.agreement and rep.initial_ideal == MonomialIdeal(2, ((2, 0), (1, 2), (0, 4)))
    data = rep.to_json()
    assert data["spec"] == {"n": 2, "m": 3, "mu": 1}
    assert set(data) == {"spec", "initial_ideal", "agreement", "resamples", "elapsed_ms"}


def test_cross_validate_small_cases():
    rep = run_closed_form(1, 5, F, seed=3)
    assert rep.agreement and rep.initial_ideal == MonomialIdeal(2, ((1, 0), (0, 5)))
    rep = run_closed_form(4, 7, F, seed=11)
    assert rep.agreement and len(rep.initial_ideal) == 5


def test_cross_validate_reports_mismatch(monkeypatch):
    import genericgb.closedform as cfm

    f1, f2 = sample_pair(3, 4, F, 1)
    real = cfm.closed_form_initial_ideal
    monkeypatch.setattr(cfm, "closed_form_initial_ideal",
                        lambda spec: MonomialIdeal(2, ((3, 0), (0, 1))))
    with pytest.raises(Mismatch) as info:
        cross_validate(f1, f2)
    assert info.value.diff["check"] == "initial_ideal"
    rep = cross_validate(f1, f2, strict=False)
    assert not rep.agreement and rep.to_json()["diff"]["check"] == "initial_ideal"
    monkeypatch.setattr(cfm, "closed_form_initial_ideal", real)


def test_resampling_and_budget(monkeypatch):
    import genericgb.closedform as cfm

    calls = []
    real = cfm.sample_pair

    def flaky(n, m, domain, seed):
        calls.append(seed)
        if len(calls) < 3:
            f1, _ = real(n, m, domain, seed)
            return f1, f1 * Polynomial.monomial(domain, (m - n, 0))  # r = 0: degenerate
        return real(n, m, domain, seed)

    monkeypatch.setattr(cfm, "sample_pair", flaky)
    rep = run_closed_form(2, 3, F, seed=5)
    assert rep.agreement and rep.resamples == 2 and len(set(calls)) == 3
    calls.clear()
    monkeypatch.setattr(cfm, "sample_pair", lambda n, m, d, s: (real(n, m, d, s)[0],) * 2)
    with pytest.raises(Degenerate):
        run_closed_form(2, 2, F, seed=5, max_resamples=2)
