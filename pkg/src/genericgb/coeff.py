"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Polynomials store *raw* coefficient values (``Fraction`` for the rationals,
``int`` residues in ``[0, p)`` for a prime field) and delegate arithmetic to
their :class:`CoefficientDomain`.  :class:`Scalar` pairs a raw value with its
domain for callers that want domain-checked arithmetic on single numbers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DivisionByZero, DomainMismatch, ExhaustedDomain

DEFAULT_PRIME = 2147483647
RATIONAL_SAMPLE_BOUND = 10**6

Raw = Union[int, Fraction]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24 with the fixed base set."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CoefficientDomain:
    """Either the rationals (``modulus is None``) or GF(p) for an odd prime p."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None:
            if not isinstance(self.modulus, int) or self.modulus < 3 or not is_prime(self.modulus):
                raise ValueError(f"modulus must be a prime >= 3, got {self.modulus!r}")

    @property
    def kind(self) -> str:
        return "rational" if self.modulus is None else "prime"

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is not None

    def __str__(self):
        return "rational" if self.modulus is None else f"prime:{self.modulus}"

    @classmethod
    def parse(cls, text: str) -> "CoefficientDomain":
        """Parse ``rational`` / ``QQ`` or ``prime:p`` (``prime`` alone means the default prime)."""
        t = text.strip().lower()
        if t in ("rational", "rationals", "qq", "q"):
            return RATIONALS
        if t == "prime":
            return PrimeField(DEFAULT_PRIME)
        if t.startswith("prime:"):
            try:
                p = int(t[len("prime:"):])
            except ValueError:
                raise ValueError(f"bad prime modulus in domain {text!r}") from None
            return PrimeField(p)
        raise ValueError(f"unknown coefficient domain {text!r}")

    # raw-value arithmetic; inputs are assumed canonical

    def convert(self, value) -> Raw:
        """Map an int, Fraction, or textual number into this domain."""
        if isinstance(value, str):
            value = parse_number(value)
        if isinstance(value, Scalar):
            self._check(value.domain)
            return value.value
        if self.modulus is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.modulus == 0:
                raise DivisionByZero(f"{value} has no image mod {self.modulus}")
            return value.numerator * pow(value.denominator, -1, self.modulus) % self.modulus
        return int(value) % self.modulus

    def zero(self) -> Raw:
        return Fraction(0) if self.modulus is None else 0

    def one(self) -> Raw:
        return Fraction(1) if self.modulus is None else 1

    def add(self, a: Raw, b: Raw) -> Raw:
        return a + b if self.modulus is None else (a + b) % self.modulus

    def sub(self, a: Raw, b: Raw) -> Raw:
        return a - b if self.modulus is None else (a - b) % self.modulus

    def neg(self, a: Raw) -> Raw:
        return -a if self.modulus is None else -a % self.modulus

    def mul(self, a: Raw, b: Raw) -> Raw:
        return a * b if self.modulus is None else a * b % self.modulus

    def inv(self, a: Raw) -> Raw:
        if not a:
            raise DivisionByZero("inverse of zero")
        return 1 / a if self.modulus is None else pow(a, -1, self.modulus)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def format(self, a: Raw) -> str:
        if self.modulus is None:
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)

    def sample(self, rng: random.Random, exclude: Iterable[Raw] = ()) -> Raw:
        """Draw a nonzero value outside ``exclude``; see :func:`sample_scalar`."""
        excluded = set(exclude)
        if self.modulus is None:
            lo, hi = -RATIONAL_SAMPLE_BOUND, RATIONAL_SAMPLE_BOUND
            taken = sum(1 for e in excluded if e.denominator == 1 and lo <= e <= hi and e != 0)
            if taken + 1 > 2 * RATIONAL_SAMPLE_BOUND:
                raise ExhaustedDomain("no admissible integer left in the sampling range")
            while True:
                v = rng.randint(lo, hi)
                if v and Fraction(v) not in excluded:
                    return Fraction(v)
        p = self.modulus
        taken = sum(1 for e in excluded if 0 < e < p)
        free = p - 1 - taken
        if free <= 0:
            raise ExhaustedDomain(f"all {p - 1} nonzero residues mod {p} are excluded")
        if free * 4 >= p:
            while True:
                v = rng.randrange(1, p)
                if v not in excluded:
                    return v
        # small residue pool: pick uniformly from the explicit complement
        pool = [v for v in range(1, p) if v not in excluded]
        return pool[rng.randrange(len(pool))]

    def _check(self, other: "CoefficientDomain"):
        if other != self:
            raise DomainMismatch(f"{other} vs {self}")


def PrimeField(p: int = DEFAULT_PRIME) -> CoefficientDomain:
    return CoefficientDomain(p)


RATIONALS = CoefficientDomain(None)


def parse_number(text: str) -> Fraction:
    """Parse ``a`` or ``a/b`` into an exact Fraction."""
    t = text.strip()
    try:
        if "/" in t:
            num, den = t.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(t))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not an exact number: {text!r}") from None


@dataclass(frozen=True)
class Scalar:
    """A field element tagged with its domain."""

    domain: CoefficientDomain
    value: Raw

    @classmethod
    def of(cls, domain: CoefficientDomain, value) -> "Scalar":
        return cls(domain, domain.convert(value))

    @classmethod
    def parse(cls, domain: CoefficientDomain, text: str) -> "Scalar":
        return cls.of(domain, text)

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.domain.format(self.value)

    def _coerce(self, other) -> Raw:
        if isinstance(other, Scalar):
            self.domain._check(other.domain)
            return other.value
        return self.domain.convert(other)

    def __add__(self, other):
        return Scalar(self.domain, self.domain.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return Scalar(self.domain, self.domain.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return Scalar(self.domain, self.domain.mul(self.value, self._coerce(other)))

    def __truediv__(self, other):
        return Scalar(self.domain, self.domain.div(self.value, self._coerce(other)))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.domain, self.domain.neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.domain, self.domain.inv(self.value))


_OPS = {"add": "__add__", "sub": "__sub__", "mul": "__mul__", "div": "__truediv__"}


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.domain != b.domain:
        raise DomainMismatch(f"{a.domain} vs {b.domain}")
    try:
        return getattr(a, _OPS[op])(b)
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def sample_scalar(domain: CoefficientDomain, rng: random.Random, exclude: Iterable[Scalar] = ()) -> Scalar:
    """Return a nonzero scalar not in ``exclude``, deterministic in the rng state.

    Rationals are drawn as integers uniform on ``[-10**6, 10**6] \\ {0}``; prime
    field values uniform on ``[1, p)``.
    """
    raw = []
    for s in exclude:
        domain._check(s.domain)
        raw.append(s.value)
    return Scalar(domain, domain.sample(rng, raw))
