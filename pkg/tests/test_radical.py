from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randic.interval import Interval
from randic.radical import (
    ONE,
    ZERO,
    RadicalSum,
    combine,
    decimal,
    enclose,
    inv_sqrt,
    is_squarefree,
    sign,
    sqrt_int,
    sqrt_rational,
    squarefree_split,
    sum_inv_sqrt,
    sum_sqrt,
)

from .oracles import radical_to_decimal

SQ2 = sqrt_int(2)
SQ3 = sqrt_int(3)


def test_inv_sqrt_examples():
    assert inv_sqrt(1).terms == {1: 1}
    assert inv_sqrt(2).terms == {2: Fraction(1, 2)}
    assert inv_sqrt(12).terms == {3: Fraction(1, 6)}
    with pytest.raises(ValueError):
        inv_sqrt(0)


def test_inv_sqrt_squares_back():
    for k in range(1, 10**4 + 1):
        r = inv_sqrt(k)
        assert r * r == RadicalSum.rational(Fraction(1, k))


def test_squarefree_split():
    assert squarefree_split(72) == (6, 2)
    assert squarefree_split(1) == (1, 1)
    assert squarefree_split(3721) == (61, 1)
    for k in range(1, 500):
        q, s = squarefree_split(k)
        assert q * q * s == k and is_squarefree(s)


def test_combine_examples():
    assert combine(SQ2, SQ2, 1, -1).is_zero()
    assert combine(inv_sqrt(2), inv_sqrt(2), 1, 1) == SQ2
    assert combine(RadicalSum({2: 1}), RadicalSum({1: 1}), 1, -1).terms == {2: 1, 1: -1}


def test_constructor_validates():
    with pytest.raises(ValueError):
        RadicalSum({4: 1})
    with pytest.raises(ValueError):
        RadicalSum({0: 1})
    assert RadicalSum({2: 0}).is_zero()


def test_sign_examples():
    assert sign(SQ2 - 1) == 1
    assert sign(ZERO) == 0
    assert sign(SQ2 - SQ3) == -1


def test_sign_of_nearly_cancelling_sum():
    # sqrt(2) + sqrt(3) - sqrt(10) is about -0.0165; scaled far down it still resolves
    x = (SQ2 + SQ3 - sqrt_int(10)).scale(Fraction(1, 10**40))
    assert radical_to_decimal(x) < 0
    assert sign(x) == -1
    # sqrt(10^6 + 1) - 1000 is about 5e-4
    y = sqrt_int(10**6 + 1) - 1000
    assert sign(y) == 1 and sign(-y) == -1
    # (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6 exactly
    assert (SQ2 + SQ3) * (SQ2 + SQ3) == 5 + sqrt_int(24)


def test_decimal_examples():
    assert decimal(SQ2 - 1, 5) == "0.41421"
    assert decimal(RadicalSum({1: Fraction(3, 2)}), 3) == "1.500"
    assert decimal(ZERO, 2) == "0.00"
    assert decimal(-SQ2, 3) == "-1.414"
    assert decimal(RadicalSum.rational(Fraction(1, 8)), 2) == "0.12"  # half-even tie


def test_sum_constructors_agree():
    weights = {1: 2, 2: -3, 8: 1, 12: 5, 18: Fraction(1, 3)}
    direct = ZERO
    for k, w in weights.items():
        direct = direct + inv_sqrt(k).scale(w)
    assert sum_inv_sqrt(weights) == direct
    assert sum_sqrt({8: 1, 2: 1}) == SQ2.scale(3)
    assert sqrt_rational(Fraction(9, 4)) == RadicalSum.rational(Fraction(3, 2))
    assert sqrt_rational(Fraction(1, 2)) == inv_sqrt(2)


radical_sums = st.dictionaries(
    st.sampled_from([1, 2, 3, 5, 6, 7, 10, 11, 13, 15, 30]),
    st.fractions(min_value=-20, max_value=20, max_denominator=50),
    max_size=5,
).map(RadicalSum)


@given(radical_sums, radical_sums)
def test_sign_antisymmetric(a, b):
    assert sign(a - b) == -sign(b - a)
    assert (sign(a - b) == 0) == (a == b)


@given(radical_sums)
def test_sign_matches_high_precision(a):
    ref = radical_to_decimal(a)
    s = sign(a)
    if a.is_zero():
        assert s == 0
    else:
        assert s == (1 if ref > 0 else -1)


@settings(max_examples=50)
@given(radical_sums, st.integers(64, 400))
def test_enclosure_brackets_value(a, prec):
    iv = enclose(a, prec)
    ref = radical_to_decimal(a)
    lo = Decimal(iv.lo.numerator) / Decimal(iv.lo.denominator)
    hi = Decimal(iv.hi.numerator) / Decimal(iv.hi.denominator)
    tol = Decimal(10) ** -60
    assert lo - tol <= ref <= hi + tol


@given(radical_sums, radical_sums)
def test_ring_laws(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) - b == a
    assert a * ONE == a


@given(radical_sums, st.integers(1, 12))
def test_decimal_is_correctly_rounded(a, digits):
    text = decimal(a, digits)
    ref = radical_to_decimal(a)
    got = Decimal(text)
    assert abs(got - ref) <= Decimal(5) * Decimal(10) ** -(digits + 1)


def test_interval_sqrt_is_outward():
    iv = Interval.point(2).sqrt(64)
    assert iv.lo * iv.lo <= 2 <= iv.hi * iv.hi
    assert Interval(Fraction(1), Fraction(2)).precedes(Interval(Fraction(3), Fraction(4)))
    with pytest.raises(ZeroDivisionError):
        Interval(Fraction(-1), Fraction(1)).reciprocal()
