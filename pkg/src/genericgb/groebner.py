"""S-polynomials, normal forms, and Buchberger's algorithm under grevlex."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

from .errors import ArityMismatch, DomainMismatch, ZeroDivisor, ZeroPolynomial
from .monideal import MonomialIdeal, minimalize
from .poly import Polynomial, _sub_scaled, grevlex_key


@dataclass(frozen=True)
class Ideal:
    generators: tuple

    def __init__(self, generators: Sequence[Polynomial]):
        gens = tuple(generators)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        first = gens[0]
        for g in gens:
            if not g:
                raise ZeroPolynomial("ideal generators must be nonzero")
            if g.domain != first.domain:
                raise DomainMismatch(f"{g.domain} vs {first.domain}")
            if g.nvars != first.nvars:
                raise ArityMismatch(f"{g.nvars} vs {first.nvars} variables")
        object.__setattr__(self, "generators", gens)

    @property
    def domain(self):
        return self.generators[0].domain

    @property
    def nvars(self):
        return self.generators[0].nvars


@dataclass(frozen=True)
class GroebnerBasis:
    basis: tuple
    reduced: bool = True
    order: str = "grevlex"
    stats: dict = field(default_factory=dict, compare=False)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __getitem__(self, i):
        return self.basis[i]

    def leading_monomials(self):
        return [g.lm for g in self.basis]


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """``(L/LT(f))*f - (L/LT(g))*g`` with ``L = lcm(LM(f), LM(g))``."""
    if not f or not g:
        raise ZeroPolynomial("S-polynomial of the zero polynomial")
    f._check(g)
    dom = f.domain
    mf, mg = f.terms[0][0], g.terms[0][0]
    lcm = tuple(max(a, b) for a, b in zip(mf, mg))
    a = f.mul_monomial(tuple(l - e for l, e in zip(lcm, mf))).scale(dom.inv(f.lc))
    b = g.mul_monomial(tuple(l - e for l, e in zip(lcm, mg))).scale(dom.inv(g.lc))
    return a - b


def normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Remainder of ``f`` on division by ``G`` (divisors tried in list order)."""
    for g in G:
        if not g:
            raise ZeroDivisor("cannot reduce by the zero polynomial")
        f._check(g)
    dom = f.domain
    leads = [(g.terms[0][0], dom.inv(g.terms[0][1]), g) for g in G]
    p = dict(f.terms)
    rem: dict = {}
    while p:
        m = max(p, key=grevlex_key)
        c = p[m]
        for lm, lc_inv, g in leads:
            if all(a >= b for a, b in zip(m, lm)):
                _sub_scaled(p, g, tuple(a - b for a, b in zip(m, lm)), dom.mul(c, lc_inv), dom)
                break
        else:
            rem[m] = c
            del p[m]
    return Polynomial.from_dict(dom, f.nvars, rem)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def buchberger(ideal, *, chain_criterion: bool = True) -> GroebnerBasis:
    """Reduced Gröbner basis of ``ideal`` (an :class:`Ideal` or a sequence of polynomials).

    Pairs are processed by the normal strategy: smallest lcm in grevlex first,
    ties broken by the index pair.  The coprime-leading-monomial criterion is
    always applied; ``chain_criterion`` toggles Buchberger's second criterion,
    which never changes the result.
    """
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal)
    G: list[Polynomial] = []
    leads: list[tuple] = []
    queue: list = []
    pending: set = set()
    stats = {"pairs": 0, "coprime_skipped": 0, "chain_skipped": 0, "zero_reductions": 0}

    def add(h: Polynomial):
        h = h.monic()
        j = len(G)
        G.append(h)
        lm = h.terms[0][0]
        leads.append(lm)
        for i in range(j):
            lcm = tuple(max(a, b) for a, b in zip(leads[i], lm))
            heapq.heappush(queue, (grevlex_key(lcm), i, j, lcm))
            pending.add((i, j))

    for g in ideal.generators:
        add(g)

    while queue:
        _, i, j, lcm = heapq.heappop(queue)
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            stats["coprime_skipped"] += 1
            continue
        if chain_criterion and _chain_skip(i, j, lcm, leads, pending):
            stats["chain_skipped"] += 1
            continue
        stats["pairs"] += 1
        h = normal_form(s_polynomial(G[i], G[j]), G)
        if h:
            add(h)
        else:
            stats["zero_reductions"] += 1

    return GroebnerBasis(tuple(reduce_basis(G)), reduced=True, stats=stats)


def _chain_skip(i, j, lcm, leads, pending) -> bool:
    for k in range(len(leads)):
        if k == i or k == j:
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        if _divides(leads[k], lcm):
            return True
    return False


def reduce_basis(G: Sequence[Polynomial]) -> list[Polynomial]:
    """Minimalize, inter-reduce and make monic; result sorted by descending leading monomial."""
    G = sorted((g.monic() for g in G if g), key=lambda g: grevlex_key(g.terms[0][0]))
    minimal: list[Polynomial] = []
    for g in G:
        if not any(_divides(h.terms[0][0], g.terms[0][0]) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        # leading term survives: no other leading monomial divides it
        reduced.append(normal_form(g, others).monic())
    reduced.sort(key=lambda g: grevlex_key(g.terms[0][0]), reverse=True)
    return reduced


def initial_ideal(G) -> MonomialIdeal:
    """Monomial ideal generated by the leading monomials of a Gröbner basis."""
    basis = list(G)
    return minimalize([g.lm for g in basis])


def is_groebner(G: Sequence[Polynomial]) -> bool:
    """Buchberger criterion: every S-pair reduces to zero modulo ``G``."""
    G = list(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if normal_form(s_polynomial(G[i], G[j]), G):
                return False
    return True


def is_reduced(G: Sequence[Polynomial]) -> bool:
    G = list(G)
    for g in G:
        if g.lc != g.domain.one():
            return False
        for h in G:
            if h is g:
                continue
            lm = h.terms[0][0]
            if any(_divides(lm, m) for m, _ in g.terms):
                return False
    return True
