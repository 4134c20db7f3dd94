"""Rational interval arithmetic with certified square-root enclosures.

Used wherever a certified value is irrational (Euclidean expansion factors,
the square-root-bearing constants of the one-step expansion bounds).  All
endpoints are Fractions, so interval comparisons are exact and pass/fail
decisions never depend on float rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

Fr = Fraction


@dataclass(frozen=True)
class RInt:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def exact(x) -> "RInt":
        x = Fr(x)
        return RInt(x, x)

    def __add__(self, other):
        other = _coerce(other)
        return RInt(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return RInt(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        cands = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RInt(min(cands), max(cands))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval divisor straddles zero")
        cands = (
            self.lo / other.lo,
            self.lo / other.hi,
            self.hi / other.lo,
            self.hi / other.hi,
        )
        return RInt(min(cands), max(cands))

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def sqrt(self, digits: int = 40) -> "RInt":
        return RInt(sqrt_lower(self.lo, digits), sqrt_upper(self.hi, digits))

    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = Fr(x)
        return self.lo <= x <= self.hi

    def inside(self, lo, hi) -> bool:
        """Whole interval within the open interval (lo, hi)."""
        return Fr(lo) < self.lo and self.hi < Fr(hi)

    def strictly_less(self, other) -> bool:
        other = _coerce(other)
        return self.hi < other.lo

    def __repr__(self):
        return f"RInt({float(self.lo):.12g}, {float(self.hi):.12g})"


def _coerce(x) -> RInt:
    if isinstance(x, RInt):
        return x
    return RInt.exact(x)


def sqrt_lower(x: Fraction, digits: int = 40) -> Fraction:
    """Largest 10^-digits grid fraction whose square is <= x."""
    x = Fr(x)
    if x < 0:
        raise ValueError("sqrt of negative rational")
    scale = 10 ** digits
    n = (x.numerator * scale * scale) // x.denominator
    return Fr(isqrt(n), scale)


def sqrt_upper(x: Fraction, digits: int = 40) -> Fraction:
    x = Fr(x)
    if x < 0:
        raise ValueError("sqrt of negative rational")
    scale = 10 ** digits
    n = -((-x.numerator * scale * scale) // x.denominator)  # ceil
    r = isqrt(n)
    if r * r < n:
        r += 1
    return Fr(r, scale)


def sqrt_interval(x, digits: int = 40) -> RInt:
    """Certified enclosure of sqrt(x) for a nonnegative rational x."""
    x = Fr(x)
    return RInt(sqrt_lower(x, digits), sqrt_upper(x, digits))
