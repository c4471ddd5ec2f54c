"""Explicit two-variable constructions for a generic pair of binary forms.

Setting: ``f1`` of degree ``n`` (dense) and the reduced second generator ``r``
of degree ``m >= n`` with support ``x^(n-1) y^(mu+1), ..., y^m``.  The basis
``f_1, ..., f_{n+1}`` has

* ``LM(f_1) = x^n`` and ``LM(f_t) = x^(n-t+1) y^(mu+2t-3)`` for ``t >= 2``,
* row ``t`` of the coefficient table holding ``n-t+2`` entries (``n+1`` for
  ``t = 1``), all nonzero for generic input,

and each new row comes from one S-polynomial of consecutive elements followed
by a single reduction step, written out as a coefficient recursion on the
monic rows.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .coeff import RATIONALS, CoefficientDomain, PrimeField, Raw
from .errors import Degenerate, IndexOutOfRange, LengthMismatch, Mismatch, WrongArity
from .genericgen import derive_seed, reduce_second_generator, sample_generic_form
from .groebner import buchberger, initial_ideal, normal_form, s_polynomial
from .monideal import MonomialIdeal
from .poly import Polynomial


@dataclass(frozen=True)
class ClosedFormSpec:
    n: int
    m: int

    def __post_init__(self):
        if not (1 <= self.n <= self.m):
            raise ValueError(f"need 1 <= n <= m, got n={self.n}, m={self.m}")

    @property
    def mu(self) -> int:
        return self.m - self.n

    def row_length(self, t: int) -> int:
        return self.n + 1 if t == 1 else self.n - t + 2

    def y_offset(self, t: int) -> int:
        """y-exponent of LM(f_t)."""
        return 0 if t == 1 else self.mu + 2 * t - 3

    def leading_exponents(self, t: int) -> tuple:
        return (self.n - t + 1, self.y_offset(t))

    def support(self, t: int) -> list[tuple]:
        e = self.y_offset(t)
        x0 = self.n - t + 1
        return [(x0 - k, e + k) for k in range(self.row_length(t))]

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "mu": self.mu}


@dataclass(frozen=True)
class ClosedFormBasis:
    """Coefficient table (raw and monic) and the materialized basis."""

    spec: ClosedFormSpec
    domain: CoefficientDomain
    rows: tuple
    monic_rows: tuple
    polynomials: tuple

    def coefficient(self, t: int, i: int) -> Raw:
        """``a_{t,i}``, 1-based as in the displayed basis."""
        return self.rows[t - 1][i - 1]

    def monic_polynomials(self) -> list[Polynomial]:
        return [f.monic() for f in self.polynomials]

    def __len__(self):
        return len(self.polynomials)


def _expect_support(f: Polynomial, support: list, label: str):
    got = [t for t, _ in f.terms]
    if got != support:
        raise Degenerate(f"{label} has support {got}, expected {support}")


def closed_form_basis(f1: Polynomial, r: Polynomial) -> ClosedFormBasis:
    """Build ``f_1..f_{n+1}`` from ``f1`` and the reduced second generator by the recursion."""
    if f1.nvars != 2 or r.nvars != 2:
        raise WrongArity("closed form is for two variables")
    if not f1 or not r:
        raise Degenerate("zero input")
    spec = ClosedFormSpec(f1.degree, r.degree)
    dom = f1.domain
    n = spec.n
    _expect_support(f1, spec.support(1), "f1")
    _expect_support(r, spec.support(2), "r")

    rows = [tuple(c for _, c in f1.terms), tuple(c for _, c in r.terms)]
    monic = [_monic_row(rows[0], dom), _monic_row(rows[1], dom)]
    sub, mul = dom.sub, dom.mul
    for t in range(1, n):
        # 0-based views of rows t and t+1
        bt, bt1 = monic[t - 1], monic[t]
        lead_gap = sub(bt[1], bt1[1])
        new = []
        for i in range(1, n - t + 1):
            if i <= n - t - 1:
                v = sub(sub(bt[i + 1], bt1[i + 1]), mul(bt1[i], lead_gap))
            else:
                v = sub(bt[n - t + 1], mul(bt1[n - t], lead_gap))
            new.append(v)
        row = tuple(new)
        if any(not v for v in row):
            raise Degenerate(f"row {t + 2} has a vanishing coefficient")
        rows.append(row)
        monic.append(_monic_row(row, dom))

    polys = []
    for t, row in enumerate(rows, start=1):
        polys.append(Polynomial(dom, 2, zip(spec.support(t), row), _trusted=True))
    return ClosedFormBasis(spec, dom, tuple(rows), tuple(monic), tuple(polys))


def _monic_row(row: tuple, dom: CoefficientDomain) -> tuple:
    if any(not v for v in row):
        raise Degenerate("vanishing coefficient in an input row")
    inv = dom.inv(row[0])
    return tuple(dom.mul(v, inv) for v in row)


def closed_form_initial_ideal(spec: ClosedFormSpec) -> MonomialIdeal:
    """``<x^n, x^(n-1) y^(mu+1), x^(n-2) y^(mu+3), ..., y^(mu+2n-1)>``."""
    gens = [spec.leading_exponents(t) for t in range(1, spec.n + 2)]
    return MonomialIdeal(2, tuple(gens))


# syzygies --------------------------------------------------------------------


@dataclass(frozen=True)
class Syzygy:
    entries: tuple
    pair: tuple

    def __len__(self):
        return len(self.entries)

    def __add__(self, other: "Syzygy") -> "Syzygy":
        if len(self) != len(other):
            raise LengthMismatch("syzygies of different lengths")
        return Syzygy(tuple(a + b for a, b in zip(self.entries, other.entries)), self.pair)

    def mul_monomial(self, mono) -> "Syzygy":
        return Syzygy(tuple(e.mul_monomial(mono) for e in self.entries), self.pair)


def _check_index(i: int, j: int, spec: ClosedFormSpec):
    if not (1 <= i < j <= spec.n + 1):
        raise IndexOutOfRange(f"pair ({i}, {j}) outside 1..{spec.n + 1}")


def lead_syzygy(i: int, j: int, spec: ClosedFormSpec, domain: CoefficientDomain = RATIONALS) -> Syzygy:
    """``S_{i,j}``: ``y^k`` at position ``i`` and ``-x^(j-i)`` at ``j``.

    ``k = mu + 2(j-i) - 1`` when ``i = 1`` and ``2(j-i)`` otherwise.
    """
    _check_index(i, j, spec)
    t = j - i
    ypow = spec.mu + 2 * t - 1 if i == 1 else 2 * t
    entries = [Polynomial.zero(domain, 2)] * (spec.n + 1)
    entries[i - 1] = Polynomial.monomial(domain, (0, ypow))
    entries[j - 1] = Polynomial.monomial(domain, (t, 0), -1)
    return Syzygy(tuple(entries), (i, j))


def syzygy_pair(i: int, spec: ClosedFormSpec, domain: CoefficientDomain = RATIONALS) -> Syzygy:
    if not (1 <= i <= spec.n):
        raise IndexOutOfRange(f"i = {i} outside 1..{spec.n}")
    return lead_syzygy(i, i + 1, spec, domain)


@dataclass(frozen=True)
class SyzygyExpansion:
    direct: Syzygy
    combination: Syzygy
    multipliers: tuple = field(default=())

    @property
    def holds(self) -> bool:
        return self.direct.entries == self.combination.entries


def expand_syzygy(i: int, t: int, spec: ClosedFormSpec, domain: CoefficientDomain = RATIONALS) -> SyzygyExpansion:
    """Both sides of ``S_{i,i+t} = sum_{j<t} x^j y^(2(t-1-j)) S_{i+j,i+j+1}``.

    ``multipliers`` lists ``((x_exp, y_exp), (k, k+1))`` per summand.
    """
    if t < 1:
        raise IndexOutOfRange("offset t must be >= 1")
    direct = lead_syzygy(i, i + t, spec, domain)
    total = None
    certs = []
    for j in range(t):
        mono = (j, 2 * (t - 1 - j))
        piece = syzygy_pair(i + j, spec, domain).mul_monomial(mono)
        total = piece if total is None else total + piece
        certs.append((mono, (i + j, i + j + 1)))
    combination = Syzygy(total.entries, (i, i + t))
    return SyzygyExpansion(direct, combination, tuple(certs))


def verify_syzygy(S: Syzygy, basis) -> bool:
    """True iff ``sum_k S[k] * LM(f_k) == 0`` with a uniform total degree.

    Leading terms are taken monic.  ``basis`` is a :class:`ClosedFormBasis`
    or any sequence of nonzero polynomials.
    """
    polys = basis.polynomials if isinstance(basis, ClosedFormBasis) else tuple(basis)
    if len(S.entries) != len(polys):
        raise LengthMismatch(f"{len(S.entries)} entries for a basis of {len(polys)}")
    dom = polys[0].domain
    total = Polynomial.zero(dom, polys[0].nvars)
    degrees = set()
    for e, f in zip(S.entries, polys):
        if not e:
            continue
        e = Polynomial(dom, f.nvars, e.terms)  # recast into the basis domain
        if not e.is_homogeneous():
            return False
        degrees.add(e.degree + f.lm.degree)
        total = total + e.mul_monomial(f.lm)
    return not total and len(degrees) <= 1


# cross-validation ------------------------------------------------------------


@dataclass
class CrossValidation:
    spec: ClosedFormSpec
    initial_ideal: MonomialIdeal
    agreement: bool
    resamples: int = 0
    elapsed_ms: int = 0
    diff: dict = field(default_factory=dict)
    basis: ClosedFormBasis | None = field(default=None, repr=False)
    groebner: tuple = field(default=(), repr=False)

    def to_json(self) -> dict:
        out = {
            "spec": self.spec.to_json(),
            "initial_ideal": self.initial_ideal.to_json(),
            "agreement": self.agreement,
            "resamples": self.resamples,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.diff:
            out["diff"] = self.diff
        return out


def cross_validate(f1: Polynomial, f2: Polynomial, *, strict: bool = True) -> CrossValidation:
    """Compare the closed form against an independent Buchberger run on ``<f1, f2>``.

    Checks (a) equal initial ideals, (b) each basis reduces to zero modulo the
    other, (c) consecutive S-polynomials of the closed form reduce to zero.
    Raises :class:`Mismatch` on the first disagreement unless ``strict`` is off.
    """
    start = time.perf_counter()
    r = reduce_second_generator(f1, f2)
    cf = closed_form_basis(f1, r)
    spec = cf.spec
    gb = buchberger([f1, f2])
    expected = closed_form_initial_ideal(spec)
    got = initial_ideal(gb)
    diff: dict = {}
    if got != expected:
        extra = [list(g) for g in got.generators if g not in expected.generators]
        missing = [list(g) for g in expected.generators if g not in got.generators]
        diff = {"check": "initial_ideal", "unexpected": extra, "missing": missing}
    if not diff:
        for t, f in enumerate(cf.polynomials, start=1):
            if normal_form(f, gb.basis):
                diff = {"check": "closed_form_in_ideal", "element": t}
                break
    if not diff:
        for k, g in enumerate(gb.basis, start=1):
            if normal_form(g, cf.polynomials):
                diff = {"check": "groebner_in_closed_form", "element": k}
                break
    if not diff:
        for t in range(1, spec.n + 1):
            s = s_polynomial(cf.polynomials[t - 1], cf.polynomials[t])
            if normal_form(s, cf.polynomials):
                diff = {"check": "s_polynomial", "pair": [t, t + 1]}
                break
    report = CrossValidation(
        spec, got, not diff,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
        diff=diff, basis=cf, groebner=gb.basis,
    )
    if diff and strict:
        raise Mismatch(f"closed form disagrees with Buchberger for n={spec.n}, m={spec.m}", diff)
    return report


def sample_pair(n: int, m: int, domain: CoefficientDomain, seed: int) -> tuple[Polynomial, Polynomial]:
    rng = random.Random(seed)
    f1, used = sample_generic_form(n, 2, domain, rng)
    f2, _ = sample_generic_form(m, 2, domain, rng, used)
    return f1, f2


def run_closed_form(n: int, m: int, domain: CoefficientDomain | None = None, seed: int = 0,
                    max_resamples: int = 5, strict: bool = False) -> CrossValidation:
    """Sample a generic pair and cross-validate; degenerate draws are redrawn.

    Attempt ``k > 0`` uses ``derive_seed(seed, "resample", k)``.  Raises
    :class:`Degenerate` once ``max_resamples`` redraws are spent.
    """
    domain = domain or PrimeField()
    ClosedFormSpec(n, m)
    last = None
    for attempt in range(max_resamples + 1):
        s = seed if attempt == 0 else derive_seed(seed, "resample", attempt)
        f1, f2 = sample_pair(n, m, domain, s)
        try:
            report = cross_validate(f1, f2, strict=strict)
        except Degenerate as exc:
            last = exc
            continue
        report.resamples = attempt
        return report
    raise Degenerate(f"still degenerate after {max_resamples} resamples: {last}")
