"""Directed rounding on binary64 without touching the FPU rounding mode.

Each primitive computes the round-to-nearest result, recovers the exact
rounding error with an error-free transformation (TwoSum, Dekker's
TwoProduct) and steps one ULP in the required direction only when the
nearest result lies on the wrong side of the exact value.  The outcome is
the correctly rounded result toward -inf / +inf.

Error-free transformations break down near the overflow and underflow
thresholds; in those ranges the sign of the error is decided with exact
rational arithmetic instead.
"""

import math
from fractions import Fraction

from .errors import IntervalOverflow

INF = math.inf

_SPLITTER = 134217729.0  # 2**27 + 1
_SPLIT_MAX = 2.0 ** 995
_PROD_MAX = 2.0 ** 1000
# products below this have error terms that may fall into the subnormal range
_TINY = 2.0 ** -900


def next_up(x):
    return math.nextafter(x, INF)


def next_down(x):
    return math.nextafter(x, -INF)


def _finite(x):
    if math.isinf(x) or math.isnan(x):
        raise IntervalOverflow(f"endpoint overflow ({x!r})")
    return x


def _sign(x):
    return (x > 0) - (x < 0)


def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def sum_error_sign(a, b, s):
    """Sign of (a + b) - s, exact; ``s`` is the rounded sum."""
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return _sign(err)


def _dekker_ok(a, b, p):
    return (abs(a) < _SPLIT_MAX and abs(b) < _SPLIT_MAX
            and _TINY < abs(p) < _PROD_MAX)


def _prod_error(a, b, p):
    ah, al = _split(a)
    bh, bl = _split(b)
    return ((ah * bh - p) + ah * bl + al * bh) + al * bl


def prod_error_sign(a, b, p):
    """Sign of a*b - p, exact; ``p`` is the rounded product."""
    if a == 0.0 or b == 0.0:
        return _sign(-p)
    if _dekker_ok(a, b, p):
        return _sign(_prod_error(a, b, p))
    return _sign(Fraction(a) * Fraction(b) - Fraction(p))


def _square_minus_sign(r, x):
    """Sign of r*r - x, exact."""
    p = r * r
    if r != 0.0 and _dekker_ok(r, r, p):
        d = p - x  # exact: p and x are within a factor two
        e = _prod_error(r, r, p)
        return (d > -e) - (d < -e)
    return _sign(Fraction(r) ** 2 - Fraction(x))


def quot_error_sign(a, b, q):
    """Sign of a/b - q, exact; ``q`` is the rounded quotient."""
    if a == 0.0:
        return 0
    p = q * b
    if q != 0.0 and _dekker_ok(q, b, p) and abs(a) > _TINY:
        # a - q*b == (a - p) - e with p + e == q*b exactly; a - p is exact
        # by Sterbenz since p is within a factor two of a.
        e = _prod_error(q, b, p)
        d = a - p
        r = (d > e) - (d < e)
    else:
        r = _sign(Fraction(a) - Fraction(q) * Fraction(b))
    return r * _sign(b)


def add_down(a, b):
    s = _finite(a + b)
    return _finite(next_down(s)) if sum_error_sign(a, b, s) < 0 else s


def add_up(a, b):
    s = _finite(a + b)
    return _finite(next_up(s)) if sum_error_sign(a, b, s) > 0 else s


def sub_down(a, b):
    return add_down(a, -b)


def sub_up(a, b):
    return add_up(a, -b)


def mul_down(a, b):
    p = _finite(a * b)
    return _finite(next_down(p)) if prod_error_sign(a, b, p) < 0 else p


def mul_up(a, b):
    p = _finite(a * b)
    return _finite(next_up(p)) if prod_error_sign(a, b, p) > 0 else p


def div_down(a, b):
    q = _finite(a / b)
    return _finite(next_down(q)) if quot_error_sign(a, b, q) < 0 else q


def div_up(a, b):
    q = _finite(a / b)
    return _finite(next_up(q)) if quot_error_sign(a, b, q) > 0 else q


def sqrt_down(x):
    r = math.sqrt(x)
    return _finite(next_down(r)) if _square_minus_sign(r, x) > 0 else r


def sqrt_up(x):
    r = math.sqrt(x)
    return _finite(next_up(r)) if _square_minus_sign(r, x) < 0 else r
