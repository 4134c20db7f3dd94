"""Exact 2x2 integer matrices (Jacobian blocks and their products)."""

from __future__ import annotations

from fractions import Fraction


class Mat2:
    """Row-major integer 2x2 matrix [[a, b], [c, d]] with exact arithmetic."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    def __repr__(self):
        return f"Mat2({self.a}, {self.b}, {self.c}, {self.d})"

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inv() ** (-n)
        result = IDENTITY
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def inv(self) -> "Mat2":
        d = self.det()
        if d == 1:
            return Mat2(self.d, -self.b, -self.c, self.a)
        if d == -1:
            return Mat2(-self.d, self.b, self.c, -self.a)
        raise ValueError(f"matrix with det {d} has no exact integer inverse")

    def apply(self, v):
        """Image of a 2-vector (works for int or Fraction entries)."""
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))


IDENTITY = Mat2(1, 0, 0, 1)


def mat_pow_seq(base: Mat2, gen: Mat2, n_max: int):
    """Yield (n, base * gen**n) for n = 1..n_max without repeated powering."""
    cur = base
    for n in range(1, n_max + 1):
        cur = cur * gen
        yield n, cur


def frac_vec(v):
    return (Fraction(v[0]), Fraction(v[1]))
