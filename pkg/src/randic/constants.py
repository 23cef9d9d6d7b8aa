"""Closed-form numeric objects behind the large-diameter argument.

``h(x) = 3/2 sqrt(x) - (3 - sqrt2)/sqrt(x) + 1/2`` bounds R from below in
terms of the maximum degree, ``phi`` is the auxiliary function used to show
that vertex degrees grow by a factor 2.9 per layer, ``b_i`` is the resulting
degree sequence and ``delta_bound(k)`` the maximum-degree lower bound it
yields.  The constants 2.9 and 7.4 are kept as the exact rationals 29/10
and 37/5.

Claims about all real arguments are replaced by certified finite sweeps.
For the tail beyond the sweep of :func:`final_gap`, ``delta_bound(k + 4)``
is 2.9 times ``delta_bound(k) - 3/2`` plus 3/2 while ``(k + 2)/2`` grows by
exactly 2 over the same four steps, so the one-step domination
``h(delta_bound(k + 4)) - h(delta_bound(k)) > 2`` (checked by
:func:`tail_step_margin`) carries positivity from any four consecutive
checked values of k to every larger k, given that h is increasing.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .interval import DEFAULT_PRECISION, Interval
from .radical import RadicalSum, sqrt_int, sqrt_rational

RATIO = Fraction(29, 10)
COEFF = Fraction(37, 5)
B0 = Fraction(9)

# Precision doubling stops here; an interval still straddling zero is
# returned as is and counted as uncertified by the caller.
MAX_PRECISION = 1 << 14


def _positive(x) -> Fraction:
    x = Fraction(x)
    if x <= 0:
        raise DomainError(f"argument must be positive, got {x}")
    return x


def h(x) -> RadicalSum | Interval:
    """h(x) exactly when sqrt(x) is a radical sum we can build, otherwise a
    certified enclosure."""
    x = _positive(x)
    try:
        root = sqrt_rational(x)
        inv_root = sqrt_rational(1 / x)
    except OverflowError:
        return h_interval(x)
    return root.scale(Fraction(3, 2)) - (3 - sqrt_int(2)) * inv_root + Fraction(1, 2)


def _sqrt2(prec: int) -> Interval:
    return Interval.point(2).sqrt(prec)


def h_interval(x, prec: int = DEFAULT_PRECISION) -> Interval:
    x = _positive(x)
    s = Interval.point(x).sqrt(prec)
    return s * Fraction(3, 2) - (3 - _sqrt2(prec)) / s + Fraction(1, 2)


def phi(x, prec: int = DEFAULT_PRECISION) -> Interval:
    """Enclosure of 1/sqrt(x) + (2/x)(1/sqrt3 - 1/sqrt(x))."""
    x = _positive(x)
    inv_root = 1 / Interval.point(x).sqrt(prec)
    inv_root3 = 1 / Interval.point(3).sqrt(prec)
    return inv_root + (inv_root3 - inv_root) * Fraction(2) / x


def b_seq(i: int) -> Fraction:
    """b_0 = 9, b_i = 2.9 (b_{i-1} - 1)."""
    if i < 0:
        raise DomainError("index must be nonnegative")
    b = B0
    for _ in range(i):
        b = RATIO * (b - 1)
    return b


def b_closed_form(i: int) -> Fraction:
    if i < 0:
        raise DomainError("index must be nonnegative")
    return Fraction(29, 19) + Fraction(142, 19) * RATIO**i


def delta_bound(k: int) -> Fraction:
    """3/2 + 7.4 * 2.9^ceil((k - 6)/4), the degree bound at diameter k >= 7."""
    if k < 7:
        raise DomainError(f"delta_bound needs k >= 7, got {k}")
    return Fraction(3, 2) + COEFF * RATIO ** ((k - 3) // 4)


def certify(make, prec: int = DEFAULT_PRECISION) -> Interval:
    """Evaluate ``make(prec)`` at doubling precision until the enclosure
    excludes zero (or the precision cap is reached)."""
    while True:
        iv = make(prec)
        if iv.lo > 0 or iv.hi < 0 or prec >= MAX_PRECISION:
            return iv
        prec *= 2


def final_gap(k: int, prec: int = DEFAULT_PRECISION) -> Interval:
    """Enclosure of h(delta_bound(k)) - (k + 2)/2 - (sqrt2 - 1)."""
    x = delta_bound(k)
    return certify(lambda p: h_interval(x, p) - Fraction(k + 2, 2) - (_sqrt2(p) - 1), prec)


def tail_step_margin(k: int, prec: int = DEFAULT_PRECISION) -> Interval:
    """Enclosure of h(delta_bound(k + 4)) - h(delta_bound(k)) - 2."""
    lo, hi = delta_bound(k), delta_bound(k + 4)
    return certify(lambda p: h_interval(hi, p) - h_interval(lo, p) - 2, prec)


def phi_threshold_margin(d: int, prec: int = DEFAULT_PRECISION) -> Interval:
    """Enclosure of 2/sqrt(d) - phi(d / 2.9); positive means the threshold holds."""
    if d < 1:
        raise DomainError("degree must be positive")
    x = Fraction(d) / RATIO
    return certify(lambda p: 2 / Interval.point(d).sqrt(p) - phi(x, p), prec)


def small_diameter_margin() -> RadicalSum:
    """h(9) - (8/2 + sqrt2 - 1): the bound when the diameter is at most 8."""
    return h(9) - (4 + sqrt_int(2) - 1)


def h_grid(count: int = 1000, top: int = 10**4) -> list[Fraction]:
    """``count`` increasing points in (0, top], denser near zero."""
    return [Fraction(top * i * i, count * count) for i in range(1, count + 1)]
