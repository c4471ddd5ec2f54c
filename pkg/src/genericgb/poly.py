"""Monomials, the graded reverse lexicographic order, and sparse polynomials.

A polynomial is an immutable, strictly grevlex-descending tuple of
``(exponents, coefficient)`` pairs.  Exponent vectors are plain tuples
internally; :class:`Monomial` is a tuple subclass, so the two hash and
compare interchangeably.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .coeff import CoefficientDomain, Raw, Scalar
from .errors import (
    ArityMismatch,
    DomainMismatch,
    NotDivisible,
    ParseError,
    ZeroDivisor,
    ZeroPolynomial,
)

LT, EQ, GT = -1, 0, 1


class Monomial(tuple):
    """An exponent vector; ``x`` is index 0 and is the largest variable."""

    def __new__(cls, exponents: Iterable[int]):
        exps = tuple(exponents)
        if any((not isinstance(e, int)) or e < 0 for e in exps):
            raise ValueError(f"exponents must be nonnegative integers: {exps!r}")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def nvars(self) -> int:
        return len(self)

    def __mul__(self, other):
        _same_arity(self, other)
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other) -> bool:
        _same_arity(self, other)
        return all(a <= b for a, b in zip(self, other))

    def __truediv__(self, other):
        """Exact quotient ``self / other``; raises unless ``other`` divides ``self``."""
        _same_arity(self, other)
        if not all(b <= a for a, b in zip(self, other)):
            raise NotDivisible(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self, other))

    def lcm(self, other) -> "Monomial":
        _same_arity(self, other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def __repr__(self):
        return f"Monomial({tuple(self)!r})"

    def __str__(self):
        return format_monomial(self)


def _same_arity(a, b):
    if len(a) != len(b):
        raise ArityMismatch(f"monomials in {len(a)} and {len(b)} variables")


def grevlex_key(exps: Sequence[int]) -> tuple:
    """Sort key: larger key means larger in grevlex.

    Degree first; on a tie, the monomial whose exponent is *smaller* at the
    last position where the two differ is the larger one.
    """
    return (sum(exps), tuple(-e for e in reversed(exps)))


def grevlex_cmp(a: Sequence[int], b: Sequence[int]) -> int:
    """Return GT, EQ or LT comparing ``a`` against ``b`` in grevlex."""
    _same_arity(a, b)
    ka, kb = grevlex_key(a), grevlex_key(b)
    return (ka > kb) - (ka < kb)


def monomial_ops(a: Monomial, b: Monomial) -> dict:
    """Product, divisibility of ``b`` by ``a``, the quotient ``b / a`` when defined, and lcm."""
    a, b = Monomial(a), Monomial(b)
    divides = a.divides(b)
    return {
        "product": a * b,
        "divides": divides,
        "quotient": b / a if divides else None,
        "lcm": a.lcm(b),
    }


def monomials_of_degree(d: int, nvars: int) -> list[Monomial]:
    """All degree-``d`` monomials, grevlex-descending."""
    out: list[tuple] = []

    def rec(prefix, left, k):
        if k == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, k - 1)

    if nvars == 0:
        return [Monomial(())] if d == 0 else []
    rec((), d, nvars)
    out.sort(key=grevlex_key, reverse=True)
    return [Monomial(m) for m in out]


def variable_names(nvars: int) -> list[str]:
    if nvars == 2:
        return ["x", "y"]
    return [f"x{i + 1}" for i in range(nvars)]


def format_monomial(exps: Sequence[int], names: Sequence[str] | None = None) -> str:
    names = names or variable_names(len(exps))
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(names, exps) if e]
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Term:
    coefficient: Scalar
    monomial: Monomial

    def __post_init__(self):
        if not self.coefficient:
            raise ValueError("term coefficient must be nonzero")


class Polynomial:
    """Immutable sparse polynomial over an exact domain, grevlex-descending terms."""

    __slots__ = ("domain", "nvars", "terms", "_hash")

    def __init__(self, domain: CoefficientDomain, nvars: int, terms: Iterable = (), *, _trusted: bool = False):
        self.domain = domain
        self.nvars = nvars
        if _trusted:
            self.terms = tuple(terms)
        else:
            acc: dict = {}
            for m, c in terms:
                m = tuple(m)
                if len(m) != nvars:
                    raise ArityMismatch(f"monomial {m} in a ring with {nvars} variables")
                if any(e < 0 for e in m):
                    raise ValueError(f"negative exponent in {m}")
                c = domain.convert(c)
                acc[m] = domain.add(acc[m], c) if m in acc else c
            self.terms = _sorted_terms(acc)
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, domain: CoefficientDomain, nvars: int) -> "Polynomial":
        return cls(domain, nvars, (), _trusted=True)

    @classmethod
    def constant(cls, domain: CoefficientDomain, nvars: int, c=1) -> "Polynomial":
        return cls(domain, nvars, [((0,) * nvars, c)])

    @classmethod
    def monomial(cls, domain: CoefficientDomain, exps: Sequence[int], c=1) -> "Polynomial":
        return cls(domain, len(exps), [(tuple(exps), c)])

    @classmethod
    def from_dict(cls, domain: CoefficientDomain, nvars: int, coeffs: dict) -> "Polynomial":
        """Build from raw ``{exponents: coefficient}``; values must already be canonical."""
        return cls(domain, nvars, _sorted_terms(coeffs), _trusted=True)

    def as_dict(self) -> dict:
        return dict(self.terms)

    # basic queries

    def __bool__(self):
        return bool(self.terms)

    is_zero = property(lambda self: not self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.terms)

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return Monomial(self.terms[0][0])

    @property
    def lc(self) -> Raw:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("degree of the zero polynomial is undefined")
        return max(sum(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    def coefficient(self, exps: Sequence[int]) -> Raw:
        return dict(self.terms).get(tuple(exps), self.domain.zero())

    def support(self) -> list[Monomial]:
        return [Monomial(m) for m, _ in self.terms]

    # arithmetic

    def _check(self, other: "Polynomial"):
        if self.domain != other.domain:
            raise DomainMismatch(f"{self.domain} vs {other.domain}")
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self.terms)
        add = self.domain.add
        for m, c in other.terms:
            acc[m] = add(acc[m], c) if m in acc else c
        return Polynomial.from_dict(self.domain, self.nvars, acc)

    def __neg__(self) -> "Polynomial":
        neg = self.domain.neg
        return Polynomial(self.domain, self.nvars, [(m, neg(c)) for m, c in self.terms], _trusted=True)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self.terms)
        sub, neg = self.domain.sub, self.domain.neg
        for m, c in other.terms:
            acc[m] = sub(acc[m], c) if m in acc else neg(c)
        return Polynomial.from_dict(self.domain, self.nvars, acc)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        acc: dict = {}
        add, mul = self.domain.add, self.domain.mul
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                c = mul(c1, c2)
                acc[m] = add(acc[m], c) if m in acc else c
        return Polynomial.from_dict(self.domain, self.nvars, acc)

    def scale(self, s) -> "Polynomial":
        s = self.domain.convert(s)
        if not s:
            return Polynomial.zero(self.domain, self.nvars)
        mul = self.domain.mul
        return Polynomial(self.domain, self.nvars, [(m, mul(c, s)) for m, c in self.terms], _trusted=True)

    def mul_monomial(self, mono: Sequence[int]) -> "Polynomial":
        if len(mono) != self.nvars:
            raise ArityMismatch(f"monomial {tuple(mono)} in a ring with {self.nvars} variables")
        # multiplying by a monomial preserves the order, so no re-sort
        terms = [(tuple(a + b for a, b in zip(m, mono)), c) for m, c in self.terms]
        return Polynomial(self.domain, self.nvars, terms, _trusted=True)

    def mul_term(self, mono: Sequence[int], c) -> "Polynomial":
        return self.mul_monomial(mono).scale(c)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.domain.inv(self.lc))

    # comparison, hashing, text

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.domain == other.domain and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.domain, self.nvars, self.terms))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.domain}, {self.nvars}, {self!s})"

    def __str__(self):
        return format_polynomial(self)

    @classmethod
    def parse(cls, text: str, domain: CoefficientDomain, nvars: int, *, line: int | None = None) -> "Polynomial":
        return parse_polynomial(text, domain, nvars, line=line)


def _sorted_terms(acc: dict) -> tuple:
    items = [(m, c) for m, c in acc.items() if c]
    items.sort(key=lambda t: grevlex_key(t[0]), reverse=True)
    return tuple(items)


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def leading_monomial(f: Polynomial) -> Term:
    """Leading term (coefficient and monomial) of a nonzero polynomial."""
    m = f.lm
    return Term(Scalar(f.domain, f.lc), m)


def divide(f: Polynomial, divisors: Sequence[Polynomial]) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division of ``f`` by ``divisors``, tried strictly in list order.

    Returns ``(quotients, remainder)`` with ``f == sum(q*g) + r`` and no term
    of ``r`` divisible by any divisor's leading monomial.
    """
    for g in divisors:
        f._check(g)
        if not g:
            raise ZeroDivisor("cannot divide by the zero polynomial")
    dom = f.domain
    leads = [(g.terms[0][0], dom.inv(g.terms[0][1])) for g in divisors]
    quotients: list[dict] = [{} for _ in divisors]
    p = dict(f.terms)
    rem: dict = {}
    while p:
        m = max(p, key=grevlex_key)
        c = p[m]
        for i, (lm, lc_inv) in enumerate(leads):
            if all(a >= b for a, b in zip(m, lm)):
                shift = tuple(a - b for a, b in zip(m, lm))
                factor = dom.mul(c, lc_inv)
                quotients[i][shift] = factor
                _sub_scaled(p, divisors[i], shift, factor, dom)
                break
        else:
            rem[m] = c
            del p[m]
    qs = [Polynomial.from_dict(dom, f.nvars, q) for q in quotients]
    return qs, Polynomial.from_dict(dom, f.nvars, rem)


def _sub_scaled(p: dict, g: Polynomial, shift: tuple, factor: Raw, dom: CoefficientDomain):
    """In place: ``p -= factor * shift * g``, dropping cancelled entries."""
    sub, mul = dom.sub, dom.mul
    for gm, gc in g.terms:
        m = tuple(a + b for a, b in zip(gm, shift))
        v = sub(p.get(m, 0), mul(factor, gc))
        if v:
            p[m] = v
        else:
            p.pop(m, None)


# text format -----------------------------------------------------------------


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    names = variable_names(f.nvars)
    dom = f.domain
    out = []
    for idx, (m, c) in enumerate(f.terms):
        negative = dom.modulus is None and c < 0
        mag = -c if negative else c
        mono = format_monomial(m, names)
        if mono == "1":
            body = dom.format(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{dom.format(mag)}*{mono}"
        if idx == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^]))")


def _tokenize(text: str, line):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            while text[pos].isspace():
                pos += 1
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        kind = mt.lastgroup
        toks.append((kind, mt.group(kind), mt.start(kind) + 1))
        pos = mt.end()
    return toks


def parse_polynomial(text: str, domain: CoefficientDomain, nvars: int, *, line: int | None = None) -> Polynomial:
    """Parse the ``c*x^a*y^b + ...`` grammar; variable names follow :func:`variable_names`."""
    index = {v: i for i, v in enumerate(variable_names(nvars))}
    toks = _tokenize(text, line)
    if not toks:
        raise ParseError("empty polynomial", line, 1)
    pos = 0
    terms = []

    def peek():
        return toks[pos] if pos < len(toks) else (None, None, len(text) + 1)

    def parse_int_after_caret():
        nonlocal pos
        kind, val, col = peek()
        if kind != "num" or "/" in val:
            raise ParseError("expected an integer exponent after '^'", line, col)
        pos += 1
        return int(val)

    sign = 1
    kind, val, _ = peek()
    if kind == "op" and val in "+-":
        sign = -1 if val == "-" else 1
        pos += 1
    while True:
        coeff = domain.convert(sign)
        exps = [0] * nvars
        expect_factor = True
        while expect_factor:
            kind, val, col = peek()
            if kind == "num":
                pos += 1
                coeff = domain.mul(coeff, domain.convert(val))
            elif kind == "name":
                if val not in index:
                    raise ParseError(
                        f"unknown variable {val!r} for a ring in {nvars} variables "
                        f"(expected {', '.join(index)})", line, col)
                pos += 1
                e = 1
                if peek()[0] == "op" and peek()[1] == "^":
                    pos += 1
                    e = parse_int_after_caret()
                exps[index[val]] += e
            else:
                raise ParseError("expected a number or a variable", line, col)
            kind, val, _ = peek()
            expect_factor = kind == "op" and val == "*"
            if expect_factor:
                pos += 1
        terms.append((tuple(exps), coeff))
        kind, val, col = peek()
        if kind is None:
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            pos += 1
            continue
        raise ParseError(f"unexpected {val!r}", line, col)
    return Polynomial(domain, nvars, terms)
