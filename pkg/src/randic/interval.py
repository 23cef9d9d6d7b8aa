"""Closed intervals with exact rational endpoints.

Arithmetic on endpoints is exact; the only rounding happens in ``sqrt``,
which rounds the lower endpoint down and the upper endpoint up on a dyadic
grid of ``2**-prec``.  Every result therefore encloses the true value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

DEFAULT_PRECISION = 128


def _floor_sqrt_scaled(x: Fraction, prec: int) -> int:
    """floor(sqrt(x) * 2**prec) for x >= 0."""
    scaled = (x.numerator << (2 * prec)) // x.denominator
    return isqrt(scaled)


def _ceil_sqrt_scaled(x: Fraction, prec: int) -> int:
    """ceil(sqrt(x) * 2**prec) for x >= 0."""
    num = x.numerator << (2 * prec)
    scaled = -(-num // x.denominator)
    r = isqrt(scaled)
    return r if r * r == scaled else r + 1


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> Interval:
        x = Fraction(x)
        return cls(x, x)

    @staticmethod
    def _coerce(x) -> Interval:
        return x if isinstance(x, Interval) else Interval.point(x)

    def __add__(self, other):
        other = self._coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        other = self._coerce(other)
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> Interval:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def sqrt(self, prec: int = DEFAULT_PRECISION) -> Interval:
        if self.lo < 0:
            raise ValueError("square root of an interval reaching below zero")
        scale = 1 << prec
        return Interval(
            Fraction(_floor_sqrt_scaled(self.lo, prec), scale),
            Fraction(_ceil_sqrt_scaled(self.hi, prec), scale),
        )

    # -- certified comparisons --------------------------------------------

    def certainly_positive(self) -> bool:
        return self.lo > 0

    def certainly_negative(self) -> bool:
        return self.hi < 0

    def precedes(self, other: Interval) -> bool:
        """True when every point of ``self`` is below every point of ``other``."""
        return self.hi < self._coerce(other).lo

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint)

    def __str__(self):
        return f"[{float(self.lo):.17g}, {float(self.hi):.17g}]"
