"""Interval correction operators.

Every scalar quantity f(m(.)) is carried as the thin-input enclosure
``eval_point(f, m)`` so that rounding can never lose the exact value, and
every correction divides by the derivative enclosure over X only.

The public operators take the expressions and intervals directly.  The
``*_from`` helpers take precomputed values and are what the step functions
use, so a step evaluates F'(X) and each f(m(.)) once.
"""

from ..errors import DegenerateDenominator, DerivativeContainsZero
from ..expr import eval_interval, eval_point
from ..expr.elementary import ipow
from ..interval import Interval


def derivative_enclosure(fprime, x: Interval) -> Interval:
    d = eval_interval(fprime, x)
    if d.contains_zero():
        raise DerivativeContainsZero(f"F'({x}) = {d} contains 0")
    return d


def _nonzero(v: Interval, what: str) -> Interval:
    # also catches products that underflow to a range touching 0
    if v.contains_zero():
        raise DegenerateDenominator(f"{what} = {v} contains 0")
    return v


def newton_from(mx, fx, d):
    return Interval.point(mx) - fx / d


def king_from(my, fx, fy, d, beta):
    b = Interval.point(beta)
    num = fx + b * fy
    den = _nonzero(fx + (b - 2.0) * fy, "f(mX) + (beta-2) f(mY)")
    return Interval.point(my) - (num / den) * (fy / d)


def ostrowski_from(my, fx, fy, d):
    den = _nonzero(fx - 2.0 * fy, "f(mX) - 2 f(mY)")
    return Interval.point(my) - (fx / den) * (fy / d)


def kung_k_from(my, fx, fy, d):
    dxy2 = _nonzero(ipow(fx - fy, 2), "(f(mX) - f(mY))^2")
    c = fx * fy / dxy2
    return Interval.point(my) - c * (fx / d)


def kung_t_from(mz, fx, fy, fz, d):
    dyz = fy - fz
    num = fx * fy * fz * (ipow(fx, 2) + fy * dyz)
    den = _nonzero(ipow(fx - fy, 2) * ipow(fx - fz, 2) * dyz,
                   "(f(mX) - f(mY))^2 (f(mX) - f(mZ))^2 (f(mY) - f(mZ))")
    return Interval.point(mz) - (num / den) * (fx / d)


def newton_operator(f, fprime, x: Interval) -> Interval:
    """N(X) = m(X) - f(m(X)) / F'(X), not yet intersected with X."""
    d = derivative_enclosure(fprime, x)
    mx = x.midpoint()
    return newton_from(mx, eval_point(f, mx), d)


def king_operator(f, fprime, x: Interval, y: Interval, beta: float) -> Interval:
    """King's second-stage image
    m(Y) - [(f(mX) + b f(mY)) / (f(mX) + (b-2) f(mY))] f(mY) / F'(X)."""
    d = derivative_enclosure(fprime, x)
    mx, my = x.midpoint(), y.midpoint()
    return king_from(my, eval_point(f, mx), eval_point(f, my), d, beta)


def ostrowski_operator(f, fprime, x: Interval, y: Interval) -> Interval:
    """Ostrowski's form m(Y) - f(mX) / (f(mX) - 2 f(mY)) * f(mY) / F'(X);
    the King family at beta = 0."""
    d = derivative_enclosure(fprime, x)
    mx, my = x.midpoint(), y.midpoint()
    return ostrowski_from(my, eval_point(f, mx), eval_point(f, my), d)


def kung_k_operator(f, fprime, x: Interval, y: Interval) -> Interval:
    d = derivative_enclosure(fprime, x)
    mx, my = x.midpoint(), y.midpoint()
    return kung_k_from(my, eval_point(f, mx), eval_point(f, my), d)


def kung_t_operator(f, fprime, x: Interval, y: Interval, z: Interval) -> Interval:
    d = derivative_enclosure(fprime, x)
    mx, my, mz = x.midpoint(), y.midpoint(), z.midpoint()
    return kung_t_from(mz, eval_point(f, mx), eval_point(f, my), eval_point(f, mz), d)
