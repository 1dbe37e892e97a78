import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indset.intervals import Interval, log_rational, rational_power, to_fraction

positive = st.fractions(min_value=Fraction(1, 1000), max_value=1000)


def test_exact_rational_enclosure():
    third = Interval.exact(Fraction(1, 3))
    assert third.contains(Fraction(1, 3))
    assert third.lo < third.hi
    two = Interval.exact(2)
    assert two.lo == two.hi == 2


def test_to_fraction():
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction(5) == Fraction(5)
    with pytest.raises(TypeError):
        to_fraction(0.5)


@settings(max_examples=60, deadline=None)
@given(positive, positive)
def test_arithmetic_contains_exact_result(a, b):
    x, y = Interval.exact(a), Interval.exact(b)
    assert (x + y).contains(a + b)
    assert (x - y).contains(a - b)
    assert (x * y).contains(a * b)
    assert (x / y).contains(a / b)
    assert (-x).contains(-a)


@settings(max_examples=60, deadline=None)
@given(positive)
def test_log_exp_enclose_float_values(q):
    lg = log_rational(q)
    assert float(lg.lo) <= math.log(q) + 1e-12 and math.log(q) - 1e-12 <= float(lg.hi)
    assert lg.exp().contains(q)


def test_log_needs_positive():
    with pytest.raises(ValueError):
        Interval.exact(0).log()


def test_powers():
    assert rational_power(Fraction(3, 2), 3).contains(Fraction(27, 8))
    r = rational_power(4, Fraction(1, 2))
    assert r.contains(2)
    assert (Interval.exact(3) ** 4).contains(81)


def test_precision_narrows_width():
    w = [log_rational(3, p).width for p in (64, 256, 1024)]
    assert w[0] > w[1] > w[2] > 0
    assert log_rational(3, 1024).precision_bits == 1024


def test_decimal_is_outward():
    iv = log_rational(2)
    lo, hi = iv.decimal(12)
    assert Fraction(lo) <= Fraction(hi)
    assert Fraction(lo) < Fraction(math.log(2)) < Fraction(hi)


def test_comparisons():
    a, b = Interval.exact(1), Interval.exact(2)
    assert a.certainly_lt(b) and b.certainly_gt(a)
    assert not a.overlaps(b)
    assert (a + b).overlaps(Interval.exact(3))
