"""Closed binary64 intervals with outward rounding.

All arithmetic returns the tightest binary64 interval containing the exact
set result: each endpoint is the correctly rounded value toward -inf or +inf
(see :mod:`ivroots.rounding`).  The empty set is not an ``Interval``;
:func:`intersect` returns ``None`` for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import rounding as rd
from .errors import InvalidInterval, IntervalOverflow, ZeroInDenominator


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = self.lo, self.hi
        if not (isinstance(lo, (int, float)) and isinstance(hi, (int, float))):
            raise InvalidInterval(f"non-numeric endpoints {lo!r}, {hi!r}")
        if math.isnan(lo) or math.isnan(hi):
            raise InvalidInterval("NaN endpoint")
        if math.isinf(lo) or math.isinf(hi):
            raise InvalidInterval(f"unbounded interval [{lo}, {hi}]")
        if lo > hi:
            raise InvalidInterval(f"lower bound {lo!r} exceeds upper bound {hi!r}")
        # normalise ints and -0.0 so equality and hashing are by value
        object.__setattr__(self, "lo", float(lo) + 0.0)
        object.__setattr__(self, "hi", float(hi) + 0.0)

    @classmethod
    def point(cls, x: float) -> Interval:
        return cls(x, x)

    # -- metrics -----------------------------------------------------------

    @property
    def is_thin(self) -> bool:
        return self.lo == self.hi

    def width(self) -> float:
        return rd.sub_up(self.hi, self.lo)

    def radius(self) -> float:
        # halving is exact except in the subnormal range, where rounding up
        # by one step keeps the bound conservative
        w = self.width()
        h = w * 0.5
        return h if h * 2.0 == w else rd.next_up(h)

    def midpoint(self) -> float:
        lo, hi = self.lo, self.hi
        s = lo + hi
        m = 0.5 * s if math.isfinite(s) else 0.5 * lo + 0.5 * hi
        return min(max(m, lo), hi)

    def mag(self) -> float:
        """``|X| = max(|lo|, |hi|)``."""
        return max(abs(self.lo), abs(self.hi))

    def mig(self) -> float:
        if self.lo > 0.0:
            return self.lo
        if self.hi < 0.0:
            return -self.hi
        return 0.0

    # -- predicates --------------------------------------------------------

    def contains(self, t: float) -> bool:
        return self.lo <= t <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0.0 <= self.hi

    def subset_of(self, other: Interval) -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    __contains__ = contains

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return Interval(rd.add_down(self.lo, other.lo), rd.add_up(self.hi, other.hi))

    def __sub__(self, other):
        other = _coerce(other)
        return Interval(rd.sub_down(self.lo, other.hi), rd.sub_up(self.hi, other.lo))

    def __mul__(self, other):
        other = _coerce(other)
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        lo = min(rd.mul_down(a, c), rd.mul_down(a, d), rd.mul_down(b, c), rd.mul_down(b, d))
        hi = max(rd.mul_up(a, c), rd.mul_up(a, d), rd.mul_up(b, c), rd.mul_up(b, d))
        return Interval(lo, hi)

    def __truediv__(self, other):
        other = _coerce(other)
        if other.contains_zero():
            raise ZeroInDenominator(f"division by {other}")
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        lo = min(rd.div_down(a, c), rd.div_down(a, d), rd.div_down(b, c), rd.div_down(b, d))
        hi = max(rd.div_up(a, c), rd.div_up(a, d), rd.div_up(b, c), rd.div_up(b, d))
        return Interval(lo, hi)

    def __radd__(self, other):
        return _coerce(other) + self

    def __rsub__(self, other):
        return _coerce(other) - self

    def __rmul__(self, other):
        return _coerce(other) * self

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __pos__(self):
        return self

    def __str__(self):
        return f"[{self.lo:.17g}, {self.hi:.17g}]"


def _coerce(x) -> Interval:
    if isinstance(x, Interval):
        return x
    if isinstance(x, (int, float)):
        return Interval(x, x)
    raise TypeError(f"cannot combine Interval with {type(x).__name__}")


def make(lo: float, hi: float) -> Interval:
    return Interval(lo, hi)


def add(x: Interval, y: Interval) -> Interval:
    return x + y


def sub(x: Interval, y: Interval) -> Interval:
    return x - y


def mul(x: Interval, y: Interval) -> Interval:
    return x * y


def div(x: Interval, y: Interval) -> Interval:
    """Quotient ``X * (1/Y)``; a denominator containing zero is an error.

    Direct endpoint quotients are used rather than forming ``1/Y`` first,
    which gives the same set with one rounding instead of two.
    """
    return x / y


def intersect(x: Interval, y: Interval) -> Optional[Interval]:
    if y.hi < x.lo or x.hi < y.lo:
        return None
    return Interval(max(x.lo, y.lo), min(x.hi, y.hi))


def hull(x: Interval, y: Interval) -> Interval:
    return Interval(min(x.lo, y.lo), max(x.hi, y.hi))


def midpoint(x: Interval) -> float:
    return x.midpoint()


def width(x: Interval) -> float:
    return x.width()


def contains_point(x: Interval, t: float) -> bool:
    return x.contains(t)


def is_subset(x: Interval, y: Interval) -> bool:
    return x.subset_of(y)


def render(x: Interval) -> str:
    return str(x)


def parse_interval(text: str) -> Interval:
    """Inverse of :func:`render`; also accepts ``lo,hi`` without brackets."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    parts = body.split(",")
    if len(parts) != 2:
        raise InvalidInterval(f"expected 'lo,hi', got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise InvalidInterval(f"bad interval literal {text!r}") from exc
    return Interval(lo, hi)


__all__ = [
    "Interval", "IntervalOverflow", "make", "add", "sub", "mul", "div",
    "intersect", "hull", "midpoint", "width", "contains_point", "is_subset",
    "render", "parse_interval",
]
