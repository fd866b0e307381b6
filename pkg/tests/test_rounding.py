"""Directed-rounding primitives against exact rational arithmetic."""

import math
import operator
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ivroots import rounding as R
from ivroots.errors import IntervalOverflow

finite = st.floats(allow_nan=False, allow_infinity=False, width=64)
moderate = st.floats(min_value=-1e150, max_value=1e150, allow_nan=False)

OPS = [
    (R.add_down, R.add_up, operator.add),
    (R.sub_down, R.sub_up, operator.sub),
    (R.mul_down, R.mul_up, operator.mul),
    (R.div_down, R.div_up, operator.truediv),
]


def check_bracket(lo, hi, exact):
    assert Fraction(lo) <= exact <= Fraction(hi)
    # lo and hi are the closest floats on their side of the exact value
    if Fraction(lo) != exact:
        assert Fraction(math.nextafter(lo, math.inf)) > exact
    if Fraction(hi) != exact:
        assert Fraction(math.nextafter(hi, -math.inf)) < exact


@pytest.mark.parametrize("down,up,op", OPS, ids=["add", "sub", "mul", "div"])
@given(a=moderate, b=moderate)
def test_directed_ops_are_correctly_rounded(down, up, op, a, b):
    if op is operator.truediv:
        assume(b != 0.0)
    try:
        lo, hi = down(a, b), up(a, b)
    except IntervalOverflow:
        return
    check_bracket(lo, hi, op(Fraction(a), Fraction(b)))


@pytest.mark.parametrize("down,up,op", OPS, ids=["add", "sub", "mul", "div"])
@given(a=finite, b=finite)
def test_directed_ops_full_range(down, up, op, a, b):
    if op is operator.truediv:
        assume(b != 0.0)
    try:
        lo, hi = down(a, b), up(a, b)
    except IntervalOverflow:
        # only legitimate when the exact result is beyond the largest float
        assert abs(op(Fraction(a), Fraction(b))) > Fraction(1.7976931348623157e308)
        return
    check_bracket(lo, hi, op(Fraction(a), Fraction(b)))


def test_random_fuzz_products_near_subnormal_and_overflow():
    rng = random.Random(7)
    for _ in range(3000):
        a = rng.uniform(1, 2) * 2.0 ** rng.randint(-600, 600) * rng.choice([-1, 1])
        b = rng.uniform(1, 2) * 2.0 ** rng.randint(-600, 600) * rng.choice([-1, 1])
        for down, up, op in OPS[2:]:
            try:
                lo, hi = down(a, b), up(a, b)
            except IntervalOverflow:
                continue
            check_bracket(lo, hi, op(Fraction(a), Fraction(b)))


@given(st.floats(min_value=0.0, max_value=1e300))
def test_sqrt_brackets(x):
    lo, hi = R.sqrt_down(x), R.sqrt_up(x)
    assert lo <= hi
    assert Fraction(lo) ** 2 <= Fraction(x) <= Fraction(hi) ** 2
    assert hi == lo or math.nextafter(lo, math.inf) == hi


def test_exact_results_are_not_widened():
    assert R.add_down(1.0, 2.0) == R.add_up(1.0, 2.0) == 3.0
    assert R.mul_down(1.5, 4.0) == R.mul_up(1.5, 4.0) == 6.0
    assert R.div_down(1.0, 4.0) == R.div_up(1.0, 4.0) == 0.25
    assert R.sqrt_down(9.0) == R.sqrt_up(9.0) == 3.0


def test_one_tenth_plus_two_tenths():
    lo, hi = R.add_down(0.1, 0.2), R.add_up(0.1, 0.2)
    exact = Fraction(0.1) + Fraction(0.2)
    assert Fraction(lo) < exact < Fraction(hi)
    assert math.nextafter(lo, math.inf) == hi


def test_overflow_raises():
    with pytest.raises(IntervalOverflow):
        R.add_up(1.7e308, 1.7e308)
    with pytest.raises(IntervalOverflow):
        R.mul_down(1e200, -1e200)


def test_next_up_down():
    assert R.next_up(1.0) == 1.0 + 2.0 ** -52
    assert R.next_down(1.0) == 1.0 - 2.0 ** -53
    assert R.next_up(0.0) > 0.0 > R.next_down(0.0)
