"""Range enclosures of the elementary functions over an Interval.

Monotone functions map endpoints; sin/cos locate interior extrema against a
rigorous enclosure of pi.  Values from the platform libm are trusted to one
ULP and widened by two steps, which stays sound across binade boundaries.
Results that are known exactly (exp(0), sin(0), ...) are not widened.
"""

import math

from .. import rounding as rd
from ..errors import DomainError, IntervalOverflow, ZeroInDenominator
from ..interval import Interval

# float(pi) < pi < next float; likewise for e
PI_LO = 3.141592653589793
PI_HI = 3.1415926535897936
E_LO = 2.718281828459045
E_HI = 2.7182818284590455

PI = Interval(PI_LO, PI_HI)
E = Interval(E_LO, E_HI)

_LIBM_STEPS = 2
# beyond this |x| the enclosure of j*pi/2 is too loose to be worth locating
_TRIG_ARG_MAX = 2.0 ** 40


def _down(v, steps=_LIBM_STEPS):
    for _ in range(steps):
        v = rd.next_down(v)
    return v


def _up(v, steps=_LIBM_STEPS):
    for _ in range(steps):
        v = rd.next_up(v)
    return v


def _libm(fn, x, exact=None, pivot=None):
    """Enclosure ``(lo, hi)`` of fn(x) from a libm call.

    ``pivot = (p, v)`` states that fn is increasing near p with fn(p) = v
    exactly; the widened bounds are kept on the correct side of v so that
    the kernels stay inclusion-isotone around that exact value.
    """
    if exact is not None and x in exact:
        v = exact[x]
        return v, v
    v = fn(x)
    lo, hi = _down(v), _up(v)
    if pivot is not None:
        p, pv = pivot
        if x >= p:
            lo = max(lo, pv)
        else:
            hi = min(hi, pv)
    return lo, hi


def exp(x: Interval) -> Interval:
    try:
        lo = _libm(math.exp, x.lo, {0.0: 1.0}, (0.0, 1.0))[0]
        hi = _libm(math.exp, x.hi, {0.0: 1.0}, (0.0, 1.0))[1]
    except OverflowError:
        hi = math.inf
    if math.isinf(hi):
        raise IntervalOverflow(f"exp overflow on {x}")
    return Interval(max(lo, 0.0), hi)


def ln(x: Interval) -> Interval:
    if x.lo <= 0.0:
        raise DomainError(f"ln of {x} touches non-positive values")
    return Interval(_libm(math.log, x.lo, {1.0: 0.0}, (1.0, 0.0))[0],
                    _libm(math.log, x.hi, {1.0: 0.0}, (1.0, 0.0))[1])


def sqrt(x: Interval) -> Interval:
    if x.lo < 0.0:
        raise DomainError(f"sqrt of {x} touches negative values")
    return Interval(rd.sqrt_down(x.lo), rd.sqrt_up(x.hi))


def _half_pi_multiple(j):
    """Enclosure of j*pi/2 as (lo, hi)."""
    if j == 0:
        return 0.0, 0.0
    if j > 0:
        return rd.mul_down(j, PI_LO * 0.5), rd.mul_up(j, PI_HI * 0.5)
    return rd.mul_down(j, PI_HI * 0.5), rd.mul_up(j, PI_LO * 0.5)


def _touched_multiples(x):
    """Integers j for which j*pi/2 may lie in ``x``."""
    j0 = math.floor(x.lo / (PI_HI * 0.5)) - 1 if x.lo >= 0 else math.floor(x.lo / (PI_LO * 0.5)) - 1
    j1 = math.ceil(x.hi / (PI_LO * 0.5)) + 1 if x.hi >= 0 else math.ceil(x.hi / (PI_HI * 0.5)) + 1
    out = []
    for j in range(j0, j1 + 1):
        lo, hi = _half_pi_multiple(j)
        if lo <= x.hi and hi >= x.lo:
            out.append(j)
    return out


def _near_zero(t):
    # sin and tan are increasing through 0 on this range
    return (0.0, 0.0) if abs(t) <= PI_LO * 0.25 else None


def _sincos(x, fn, shift, exact):
    # critical point j*pi/2 carries value +1 when (j + shift) % 4 == 1 and
    # -1 when it is 3; shift 0 is sin, shift 1 is cos
    if x.width() >= 2 * PI_LO or max(abs(x.lo), abs(x.hi)) > _TRIG_ARG_MAX:
        return Interval(-1.0, 1.0)
    odd = shift == 0
    a_lo, a_hi = _libm(fn, x.lo, exact, _near_zero(x.lo) if odd else None)
    b_lo, b_hi = _libm(fn, x.hi, exact, _near_zero(x.hi) if odd else None)
    lo, hi = min(a_lo, b_lo), max(a_hi, b_hi)
    for j in _touched_multiples(x):
        r = (j + shift) % 4
        if r == 1:
            hi = 1.0
        elif r == 3:
            lo = -1.0
    return Interval(max(lo, -1.0), min(hi, 1.0))


def sin(x: Interval) -> Interval:
    return _sincos(x, math.sin, 0, {0.0: 0.0})


def cos(x: Interval) -> Interval:
    return _sincos(x, math.cos, 1, {0.0: 1.0})


def tan(x: Interval) -> Interval:
    if max(abs(x.lo), abs(x.hi)) > _TRIG_ARG_MAX or x.width() >= PI_LO:
        raise DomainError(f"tan over {x} may cross a pole")
    for j in _touched_multiples(x):
        if j % 2:
            raise DomainError(f"tan over {x} may cross a pole")
    exact = {0.0: 0.0}
    return Interval(_libm(math.tan, x.lo, exact, _near_zero(x.lo))[0],
                    _libm(math.tan, x.hi, exact, _near_zero(x.hi))[1])


def fabs(x: Interval) -> Interval:
    if x.lo >= 0.0:
        return x
    if x.hi <= 0.0:
        return -x
    return Interval(0.0, max(-x.lo, x.hi))


def _pow_nonneg(a, n):
    """(down, up) bounds of a**n for a >= 0, n >= 1, by repeated squaring."""
    lo_acc = hi_acc = 1.0
    lo_base = hi_base = a
    while True:
        if n & 1:
            lo_acc = rd.mul_down(lo_acc, lo_base)
            hi_acc = rd.mul_up(hi_acc, hi_base)
        n >>= 1
        if not n:
            return lo_acc, hi_acc
        lo_base = rd.mul_down(lo_base, lo_base)
        hi_base = rd.mul_up(hi_base, hi_base)


def ipow(x: Interval, n: int) -> Interval:
    """``x**n`` for integer n; even powers use the exact range, not x*x."""
    if n == 0:
        return Interval(1.0, 1.0)
    if n < 0:
        if x.contains_zero():
            raise ZeroInDenominator(f"negative power of {x}")
        return Interval(1.0, 1.0) / ipow(x, -n)
    if n % 2 == 0:
        lo = _pow_nonneg(x.mig(), n)[0]
        hi = _pow_nonneg(x.mag(), n)[1]
        return Interval(lo, hi)
    # odd: monotone increasing, odd symmetry
    if x.lo >= 0.0:
        lo = _pow_nonneg(x.lo, n)[0]
    else:
        lo = -_pow_nonneg(-x.lo, n)[1]
    if x.hi >= 0.0:
        hi = _pow_nonneg(x.hi, n)[1]
    else:
        hi = -_pow_nonneg(-x.hi, n)[0]
    return Interval(lo, hi)


UNARY = {
    "neg": lambda x: -x,
    "sin": sin,
    "cos": cos,
    "tan": tan,
    "exp": exp,
    "ln": ln,
    "sqrt": sqrt,
    "abs": fabs,
}


def interval_elementary(op, x: Interval) -> Interval:
    """Dispatch by name; ``op`` may also be ``("pow", n)``."""
    if isinstance(op, tuple):
        name, n = op
        if name != "pow":
            raise ValueError(f"unknown elementary op {op!r}")
        return ipow(x, n)
    try:
        fn = UNARY[op]
    except KeyError:
        raise ValueError(f"unknown elementary op {op!r}") from None
    return fn(x)
