"""Monomial ideals: minimal generators, revlex classification, staircases, Hilbert data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArityMismatch, EmptyGeneratorSet, NotArtinian, WrongArity
from .poly import Monomial, format_monomial, grevlex_key, monomials_of_degree


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimally generated monomial ideal; generators stored grevlex-descending."""

    nvars: int
    generators: tuple

    def __post_init__(self):
        gens = self.generators
        for i, a in enumerate(gens):
            if len(a) != self.nvars:
                raise ArityMismatch(f"generator {tuple(a)} in a ring with {self.nvars} variables")
            for j, b in enumerate(gens):
                if i != j and _divides(a, b):
                    raise ValueError(f"generators not minimal: {tuple(a)} divides {tuple(b)}")
        ordered = tuple(Monomial(g) for g in sorted(gens, key=grevlex_key, reverse=True))
        object.__setattr__(self, "generators", ordered)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        return "<" + ", ".join(format_monomial(g) for g in self.generators) + ">"

    @property
    def max_degree(self) -> int:
        return max(sum(g) for g in self.generators)

    def is_artinian(self) -> bool:
        return all(
            any(g[i] > 0 and sum(g) == g[i] for g in self.generators)
            for i in range(self.nvars)
        )

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "generators": [list(g) for g in self.generators]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        nvars = int(data["nvars"])
        gens = [Monomial(int(e) for e in g) for g in data["generators"]]
        for g in gens:
            if len(g) != nvars:
                raise ArityMismatch(f"generator {tuple(g)} in a ring with {nvars} variables")
        return minimalize(gens)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Drop every generator divisible by another; duplicates collapse."""
    uniq = {tuple(g) for g in gens}
    if not uniq:
        raise EmptyGeneratorSet("a monomial ideal needs at least one generator")
    arities = {len(g) for g in uniq}
    if len(arities) != 1:
        raise ArityMismatch(f"mixed variable counts {sorted(arities)}")
    # a divisor has degree <= its multiple, so ascending degree lets one pass suffice
    kept: list[tuple] = []
    for g in sorted(uniq, key=grevlex_key):
        if not any(_divides(h, g) for h in kept):
            kept.append(g)
    return MonomialIdeal(arities.pop(), tuple(kept))


def contains(J: MonomialIdeal, m: Sequence[int]) -> bool:
    if len(m) != J.nvars:
        raise ArityMismatch(f"monomial in {len(m)} variables, ideal in {J.nvars}")
    return any(_divides(g, m) for g in J.generators)


@dataclass(frozen=True)
class RevlexCheck:
    """Outcome of a (weakly) reverse lexicographic test.

    ``witness`` is ``(member, predecessor)``: a member of the ideal (a minimal
    generator for the weak test) and a same-degree, grevlex-greater monomial
    missing from the ideal.  Failures are reported at the lowest failing
    degree, choosing the greatest missing predecessor and then the greatest
    member it precedes.  ``degree_bound`` is the last degree inspected;
    ``exact`` says whether that bound settles the question for all degrees.
    """

    holds: bool
    witness: tuple | None = None
    degree_bound: int | None = None
    exact: bool = True

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "witness": None if self.witness is None else [list(self.witness[0]), list(self.witness[1])],
            "degree_bound": self.degree_bound,
            "exact": self.exact,
        }


def _first_gap(mons: list, members) -> tuple | None:
    """First (member, missing predecessor) in a grevlex-descending degree slice."""
    gap = None
    for m in mons:
        if m in members:
            if gap is not None:
                return (m, gap)
        elif gap is None:
            gap = m
    return None


def is_weakly_revlex(J: MonomialIdeal) -> RevlexCheck:
    """Every same-degree monomial greater than a minimal generator lies in ``J``."""
    degrees = sorted({sum(g) for g in J.generators})
    gens = set(J.generators)
    for d in degrees:
        mons = monomials_of_degree(d, J.nvars)
        # only generators need closed predecessors; stop scanning once past the last one
        for i, m in enumerate(mons):
            if m in gens:
                missing = next((p for p in mons[:i] if not contains(J, p)), None)
                if missing is not None:
                    # the earliest generator after the first gap is the greatest failing one
                    gen = next(g for g in mons if g in gens and grevlex_key(g) < grevlex_key(missing))
                    return RevlexCheck(False, (gen, missing), max(degrees))
    return RevlexCheck(True, None, max(degrees))


def regularity_bound(J: MonomialIdeal) -> int:
    """Smallest degree in which every monomial lies in ``J`` (Artinian ideals only)."""
    if not J.is_artinian():
        raise NotArtinian(f"{J} contains no pure power of some variable")
    d = 0
    while hilbert_function(J, d):
        d += 1
    return d


def is_revlex(J: MonomialIdeal, degree_bound: int | None = None) -> RevlexCheck:
    """Every same-degree monomial greater than *any* member lies in ``J``.

    For Artinian ``J`` the test is exact: from :func:`regularity_bound` on every
    monomial is a member, so no higher degree can fail.  Otherwise
    ``degree_bound`` is mandatory and the result is marked inexact.
    """
    if J.is_artinian():
        full = regularity_bound(J)
        bound = full if degree_bound is None else min(degree_bound, full)
        exact = degree_bound is None or degree_bound >= full
    else:
        if degree_bound is None:
            raise ValueError(f"{J} is not Artinian; a degree bound is required")
        bound, exact = degree_bound, False
    for d in range(bound + 1):
        mons = monomials_of_degree(d, J.nvars)
        members = {m for m in mons if contains(J, m)}
        hit = _first_gap(mons, members)
        if hit is not None:
            return RevlexCheck(False, hit, bound, exact=True)
    return RevlexCheck(True, None, bound, exact)


# staircase -------------------------------------------------------------------


@dataclass(frozen=True)
class Staircase:
    corners: tuple

    def __post_init__(self):
        c = self.corners
        for (x0, y0), (x1, y1) in zip(c, c[1:]):
            if not (x0 > x1 and y0 < y1):
                raise ValueError(f"corners not a staircase: {c}")

    @property
    def width(self) -> int:
        return max(x for x, _ in self.corners) + 2

    @property
    def height(self) -> int:
        return max(y for _, y in self.corners) + 2

    def contains(self, a: int, b: int) -> bool:
        return any(a >= x and b >= y for x, y in self.corners)


def staircase(J: MonomialIdeal) -> Staircase:
    if J.nvars != 2:
        raise WrongArity(f"staircases are drawn for 2 variables, got {J.nvars}")
    corners = sorted(((g[0], g[1]) for g in J.generators), key=lambda c: -c[0])
    return Staircase(tuple(corners))


# Hilbert data ----------------------------------------------------------------


def hilbert_function(J: MonomialIdeal, d: int) -> int:
    """Number of degree-``d`` monomials outside ``J``."""
    if d < 0:
        return 0
    return sum(1 for m in monomials_of_degree(d, J.nvars) if not contains(J, m))


def standard_monomials(J: MonomialIdeal) -> list[Monomial]:
    top = regularity_bound(J)
    return [m for d in range(top) for m in monomials_of_degree(d, J.nvars) if not contains(J, m)]


def standard_monomial_count(J: MonomialIdeal) -> int:
    top = regularity_bound(J)
    return sum(hilbert_function(J, d) for d in range(top))
