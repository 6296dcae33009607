"""Exact arithmetic on factored naturals and rationals.

Group orders are carried as :class:`FactoredNat`; covolumes are
:class:`fractions.Fraction` values (always in lowest terms).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Rat = Fraction

# Deterministic Miller-Rabin witnesses, valid for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
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
class FactoredNat:
    """A positive integer stored as ``((p, e), ...)`` with primes increasing."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1 or not is_prime(p):
                raise ValueError(f"malformed factorization {self.factors!r}")
            prev = p

    @classmethod
    def from_mapping(cls, factors: Mapping[int, int]) -> "FactoredNat":
        return cls(tuple(sorted((p, e) for p, e in factors.items() if e)))

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __int__(self) -> int:
        return self.value

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __mul__(self, other: "FactoredNat") -> "FactoredNat":
        merged = self.as_dict()
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return FactoredNat.from_mapping(merged)

    def divides(self, other: "FactoredNat") -> bool:
        return all(other.exponent(p) >= e for p, e in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "·".join(f"{p}^{e}" for p, e in self.factors)

    @classmethod
    def parse(cls, text: str) -> "FactoredNat":
        """Inverse of ``str``; also accepts ``*`` separators and bare primes."""
        text = text.strip()
        if text == "1":
            return cls()
        factors: dict[int, int] = {}
        for part in text.replace("*", "·").split("·"):
            p, _, e = part.strip().partition("^")
            factors[int(p)] = factors.get(int(p), 0) + (int(e) if e else 1)
        return cls.from_mapping(factors)


def factor(n: int) -> FactoredNat:
    """Trial division, stopping as soon as the cofactor is prime."""
    if n < 1:
        raise ValueError(f"cannot factor {n}: need a positive integer")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p, step = 5, 2
    cofactor_prime = is_prime(n)
    while n > 1 and not cofactor_prime and p * p <= n:
        if n % p == 0:
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
            cofactor_prime = is_prime(n)
        p += step
        step = 6 - step
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return FactoredNat.from_mapping(factors)


def as_factored(x: int | FactoredNat) -> FactoredNat:
    return x if isinstance(x, FactoredNat) else factor(x)


def lcm_factored(orders: Iterable[int | FactoredNat]) -> FactoredNat:
    orders = [as_factored(o) for o in orders]
    if not orders:
        raise ValueError("lcm of an empty list")
    best: dict[int, int] = {}
    for f in orders:
        for p, e in f.factors:
            best[p] = max(best.get(p, 0), e)
    return FactoredNat.from_mapping(best)


def sum_reciprocals(orders: Iterable[int]) -> Fraction:
    total = Fraction(0)
    for o in orders:
        if o < 1:
            raise ValueError(f"stabiliser order must be positive, got {o}")
        total += Fraction(1, o)
    return total


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def is_m_number(b: int, m: int) -> bool:
    """No prime of ``b`` exceeds ``m``; if ``m`` is prime, ``m**2`` does not divide ``b``."""
    if b < 1:
        raise ValueError("b must be positive")
    f = factor(b)
    if f.factors and f.primes[-1] > m:
        return False
    return not (is_prime(m) and f.exponent(m) >= 2)


def format_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(text: str | int | Fraction) -> Fraction:
    x = Fraction(text) if not isinstance(text, str) else Fraction(text.strip())
    if x < 0:
        raise ValueError(f"negative rational {text!r}")
    return x
