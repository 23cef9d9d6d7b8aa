"""Exact sums of rational multiples of square roots.

A :class:`RadicalSum` stores ``{m: q}`` meaning ``sum(q * sqrt(m))`` with every
``m`` squarefree and every ``q`` a nonzero :class:`~fractions.Fraction`.
Square roots of distinct squarefree integers are linearly independent over
the rationals, so two sums are equal exactly when their term maps are equal.
Signs of nonzero sums are decided by interval evaluation that doubles its
working precision until zero is excluded.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt
from numbers import Rational
from typing import Mapping

from .interval import DEFAULT_PRECISION, Interval

# Trial division beyond this bound is refused rather than attempted.
SQUAREFREE_LIMIT = 10**12


@lru_cache(maxsize=1 << 16)
def squarefree_split(k: int) -> tuple[int, int]:
    """Return ``(q, s)`` with ``k == q*q*s`` and ``s`` squarefree."""
    if k <= 0:
        raise ValueError(f"squarefree_split needs a positive integer, got {k}")
    if k > SQUAREFREE_LIMIT:
        raise OverflowError(f"{k} is too large to factor by trial division")
    q = 1
    s = 1
    rest = k
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            q *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    s *= rest
    return q, s


def is_squarefree(m: int) -> bool:
    return m > 0 and squarefree_split(m)[0] == 1


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected a rational number, got {type(x).__name__}")


class RadicalSum:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean: dict[int, Fraction] = {}
        for m, q in (terms or {}).items():
            if not isinstance(m, int) or not is_squarefree(m):
                raise ValueError(f"radicand {m!r} is not a squarefree positive integer")
            q = _as_fraction(q)
            if q:
                clean[m] = q
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> RadicalSum:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, q) -> RadicalSum:
        q = _as_fraction(q)
        return cls._raw({1: q} if q else {})

    @staticmethod
    def coerce(x) -> RadicalSum:
        return x if isinstance(x, RadicalSum) else RadicalSum.rational(x)

    # -- views -------------------------------------------------------------

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, m: int) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 1 in self._terms)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RadicalSum):
            if not isinstance(other, (int, Rational)):
                return NotImplemented
            other = RadicalSum.rational(other)
        out = dict(self._terms)
        for m, q in other._terms.items():
            r = out.get(m)
            if r is None:
                out[m] = q
            else:
                r += q
                if r:
                    out[m] = r
                else:
                    del out[m]
        return RadicalSum._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return RadicalSum._raw({m: -q for m, q in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (RadicalSum, int, Rational)):
            return NotImplemented
        return self + (-RadicalSum.coerce(other))

    def __rsub__(self, other):
        return RadicalSum.coerce(other) - self

    def scale(self, c) -> RadicalSum:
        c = _as_fraction(c)
        if not c:
            return RadicalSum._raw({})
        return RadicalSum._raw({m: q * c for m, q in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, RadicalSum):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for m1, q1 in self._terms.items():
            for m2, q2 in other._terms.items():
                # sqrt(m1*m2) = g*sqrt(m1*m2/g^2) since both are squarefree
                g = _gcd(m1, m2)
                m = (m1 // g) * (m2 // g)
                acc[m] = acc.get(m, 0) + q1 * q2 * g
        return RadicalSum._raw({m: q for m, q in acc.items() if q})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            other = _as_fraction(other)
            if not other:
                raise ZeroDivisionError("division of a radical sum by zero")
            return self.scale(1 / other)
        return NotImplemented

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RadicalSum):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == RadicalSum.rational(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self._terms.get(1, Fraction(0)))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __bool__(self):
        return bool(self._terms)

    def __float__(self):
        lo, hi = _enclose(self._terms, 64)
        return float(Fraction(lo + hi, 1 << 65))

    # -- rendering -------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms):
            q = self._terms[m]
            body = f"{abs(q)}·√{m}"
            if not parts:
                parts.append(f"-{body}" if q < 0 else body)
            else:
                parts.append(f"- {body}" if q < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        inner = ", ".join(f"{m}: {q!s}" for m, q in sorted(self._terms.items()))
        return f"RadicalSum({{{inner}}})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


ZERO = RadicalSum._raw({})
ONE = RadicalSum._raw({1: Fraction(1)})


# -- constructors ----------------------------------------------------------


def sum_sqrt(weights: Mapping[int, object]) -> RadicalSum:
    """Canonical form of ``sum(w * sqrt(k))`` over positive integers ``k``."""
    acc: dict[int, Fraction] = {}
    for k, w in weights.items():
        if not w:
            continue
        q, s = squarefree_split(k)
        acc[s] = acc.get(s, 0) + w * q
    return RadicalSum._raw({s: _as_fraction(c) for s, c in acc.items() if c})


def sum_inv_sqrt(weights: Mapping[int, object]) -> RadicalSum:
    """Canonical form of ``sum(w / sqrt(k))`` over positive integers ``k``."""
    # w / sqrt(q^2 s) = w / (q s) * sqrt(s); integer weights sharing a
    # radicand are summed over a common denominator before one Fraction
    groups: dict[int, dict[int, object]] = {}
    exact = True
    for k, w in weights.items():
        if not w:
            continue
        if k <= 0:
            raise ValueError(f"1/sqrt({k}) is undefined")
        if not isinstance(w, int):
            exact = False
        q, s = squarefree_split(k)
        row = groups.get(s)
        if row is None:
            groups[s] = {q: w}
        else:
            row[q] = row.get(q, 0) + w
    out: dict[int, Fraction] = {}
    for s, row in groups.items():
        if exact:
            den = 1
            for q in row:
                den = den * q // _gcd(den, q)
            num = sum(w * (den // q) for q, w in row.items())
            if num:
                out[s] = Fraction(num, den * s)
        else:
            c = sum((_as_fraction(w) / q for q, w in row.items()), Fraction(0)) / s
            if c:
                out[s] = c
    return RadicalSum._raw(out)


@lru_cache(maxsize=1 << 14)
def inv_sqrt(k: int) -> RadicalSum:
    """1/sqrt(k) = sqrt(s) / (q*s) where k = q^2 s."""
    if k <= 0:
        raise ValueError(f"inv_sqrt needs k >= 1, got {k}")
    q, s = squarefree_split(k)
    return RadicalSum._raw({s: Fraction(1, q * s)})


@lru_cache(maxsize=1 << 14)
def sqrt_int(k: int) -> RadicalSum:
    if k < 0:
        raise ValueError(f"sqrt of negative integer {k}")
    if k == 0:
        return ZERO
    q, s = squarefree_split(k)
    return RadicalSum._raw({s: Fraction(q)})


def sqrt_rational(x) -> RadicalSum:
    """Exact sqrt(x) for rational x >= 0; raises OverflowError when
    the radicand is too large to factor."""
    x = _as_fraction(x)
    if x < 0:
        raise ValueError(f"sqrt of negative rational {x}")
    if not x:
        return ZERO
    # sqrt(a/b) = sqrt(a*b) / b
    a, b = x.numerator, x.denominator
    q, s = squarefree_split(a * b)
    return RadicalSum._raw({s: Fraction(q, b)})


def combine(a: RadicalSum, b: RadicalSum, ca, cb) -> RadicalSum:
    """The linear combination ``ca*a + cb*b`` in canonical form."""
    return RadicalSum.coerce(a).scale(ca) + RadicalSum.coerce(b).scale(cb)


# -- sign and rendering ----------------------------------------------------


def _enclose(terms: Mapping[int, Fraction], prec: int) -> tuple[int, int]:
    """Integers ``lo <= value * 2**prec <= hi``."""
    lo = hi = 0
    for m, q in terms.items():
        a, b = q.numerator, q.denominator
        if m == 1:
            num = a << prec
            lo += num // b
            hi += -(-num // b)
            continue
        s = isqrt(m << (2 * prec))  # s <= sqrt(m)*2^prec < s+1
        if a > 0:
            lo += (a * s) // b
            hi += -(-(a * (s + 1)) // b)
        else:
            lo += (a * (s + 1)) // b
            hi += -(-(a * s) // b)
    return lo, hi


def enclose(a: RadicalSum, prec: int = DEFAULT_PRECISION) -> Interval:
    """A dyadic interval of width about ``len(terms) * 2**-prec`` around ``a``."""
    lo, hi = _enclose(a._terms, prec)
    scale = 1 << prec
    return Interval(Fraction(lo, scale), Fraction(hi, scale))


def sign(a: RadicalSum) -> int:
    """Exact sign of a radical sum; zero is recognised symbolically."""
    a = RadicalSum.coerce(a)
    terms = a._terms
    if not terms:
        return 0
    if len(terms) == 1:
        (q,) = terms.values()
        return 1 if q > 0 else -1
    prec = DEFAULT_PRECISION
    while True:
        lo, hi = _enclose(terms, prec)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        # A nonzero sum is bounded away from zero, so this terminates.
        prec *= 2


def decimal(a: RadicalSum, digits: int) -> str:
    """``a`` rounded to ``digits`` places after the point."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    a = RadicalSum.coerce(a)
    scale = 10**digits
    if a.is_rational():
        # Only a rational value can sit exactly on a tie; round it half-even.
        nearest = round(a.coefficient(1) * scale)
    else:
        prec = DEFAULT_PRECISION
        while True:
            lo, hi = _enclose(a._terms, prec)
            # floor(x*10^d + 1/2) at both ends of the enclosure
            den = 1 << (prec + 1)
            n_lo = (2 * lo * scale + (1 << prec)) // den
            n_hi = (2 * hi * scale + (1 << prec)) // den
            if n_lo == n_hi:
                nearest = n_lo
                break
            prec *= 2
    return _format_scaled(nearest, digits)


def _format_scaled(n: int, digits: int) -> str:
    text = str(abs(n)).rjust(digits + 1, "0")
    out = f"{text[:-digits]}.{text[-digits:]}"
    return f"-{out}" if n < 0 else out
