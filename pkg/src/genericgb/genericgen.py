"""Sampling of simulated generic forms and the two-variable degree reduction.

Genericity (algebraically independent coefficients) cannot be enforced with
concrete numbers.  We draw pairwise-distinct nonzero coefficients from a large
field instead and let downstream checks flag the rare degenerate draw.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from typing import Iterable

from .coeff import CoefficientDomain, PrimeField, Raw
from .errors import ArityMismatch, Degenerate, DegreeOrder
from .groebner import normal_form
from .poly import Polynomial, monomials_of_degree


def derive_seed(*parts) -> int:
    """Stable 63-bit seed from any tuple of ints/strings (e.g. base seed, trial index)."""
    h = hashlib.sha256(":".join(str(p) for p in parts).encode()).digest()
    return int.from_bytes(h[:8], "big") >> 1


@dataclass(frozen=True)
class GenericSpec:
    nvars: int
    degrees: tuple
    domain: CoefficientDomain = field(default_factory=PrimeField)
    seed: int = 0

    def __post_init__(self):
        degs = tuple(sorted(int(d) for d in self.degrees))
        if not degs:
            raise ValueError("at least one degree is required")
        if degs[0] < 1:
            raise ValueError(f"degrees must be positive: {degs}")
        if self.nvars < 1:
            raise ValueError("nvars must be positive")
        object.__setattr__(self, "degrees", degs)


def sample_generic_form(degree: int, nvars: int, domain: CoefficientDomain, rng: random.Random,
                        exclude: Iterable[Raw] = ()) -> tuple[Polynomial, set]:
    """Dense form of the given degree with pairwise-distinct nonzero coefficients.

    Returns the form and the set of coefficients it used; thread that set into
    the next call's ``exclude`` to keep coefficients distinct across forms.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    used: set = set(exclude)
    fresh: set = set()
    terms = []
    for m in monomials_of_degree(degree, nvars):
        c = domain.sample(rng, used)
        used.add(c)
        fresh.add(c)
        terms.append((tuple(m), c))
    return Polynomial(domain, nvars, terms), fresh


def sample_generic_forms(spec: GenericSpec, seed: int | None = None) -> list[Polynomial]:
    """One form per degree in ``spec``; all coefficients globally distinct."""
    rng = random.Random(spec.seed if seed is None else seed)
    used: set = set()
    forms = []
    for d in spec.degrees:
        f, fresh = sample_generic_form(d, spec.nvars, spec.domain, rng, used)
        used |= fresh
        forms.append(f)
    return forms


def reduce_second_generator(f1: Polynomial, f2: Polynomial) -> Polynomial:
    """Remainder of ``f2`` modulo ``f1`` for binary forms, checked for full support.

    With ``n = deg f1 <= m = deg f2`` and ``mu = m - n``, a generic remainder is
    ``r = sum_{i=1..n} c_i x^(n-i) y^(mu+i)``: exactly ``n`` nonzero terms.
    """
    if f1.nvars != 2 or f2.nvars != 2:
        raise ArityMismatch("reduction is defined for two variables")
    if not f1 or not f2:
        raise Degenerate("zero generator")
    n, m = f1.degree, f2.degree
    if n > m:
        raise DegreeOrder(f"deg f1 = {n} exceeds deg f2 = {m}; swap the generators")
    if not (f1.is_homogeneous() and f2.is_homogeneous()):
        raise ValueError("generators must be forms")
    if not f1.coefficient((n, 0)):
        raise Degenerate("f1 has no x^n term")
    r = normal_form(f2, [f1])
    mu = m - n
    expected = [(n - i, mu + i) for i in range(1, n + 1)]
    if [tuple(t) for t, _ in r.terms] != expected:
        raise Degenerate(f"remainder support {[t for t, _ in r.terms]} differs from {expected}")
    return r
