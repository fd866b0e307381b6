"""One iteration of each interval scheme.

A step maps X to (Y, Z, X_next) with ``None`` marking an empty
intersection; once a stage is empty the later ones are empty too.

Only the Newton stage and the Traub stages are enclosures by the mean value
theorem.  The King, K and T images rest on an approximation of f'(alpha) by
f'(m(X)), so with ``verify`` on, each of their results is accepted only if a
sign test at its interior endpoints proves it keeps the root that the
previous (rigorous) stage holds.  Otherwise the step falls back to that
previous stage and records why.
"""

from enum import Enum
from typing import NamedTuple, Optional

from ..errors import DegenerateDenominator, IntervalOverflow

# an overflowing correction term is as unusable as a vanishing denominator
_DEGENERATE = (DegenerateDenominator, IntervalOverflow)
from ..expr import eval_point
from ..interval import Interval, intersect
from . import operators as ops


class Fallback(str, Enum):
    NONE = "none"
    K_DEGENERATE = "k-degenerate"
    T_DEGENERATE = "t-degenerate"
    K_UNVERIFIED = "k-unverified"
    T_UNVERIFIED = "t-unverified"


class StepResult(NamedTuple):
    y: Optional[Interval]
    z: Optional[Interval]
    x_next: Optional[Interval]
    fallback: Fallback = Fallback.NONE


def keeps_root(f, w: Interval, r: Interval, increasing: bool) -> bool:
    """True if every zero of f in ``r`` provably lies in ``w``.

    f must be strictly monotone on the hull of ``w`` and ``r``.  An endpoint
    of ``w`` inside ``r`` needs a certified sign on the correct side.
    """
    if w.lo > r.lo:
        v = eval_point(f, w.lo)
        if not (v.hi <= 0.0 if increasing else v.lo >= 0.0):
            return False
    if w.hi < r.hi:
        v = eval_point(f, w.hi)
        if not (v.lo >= 0.0 if increasing else v.hi <= 0.0):
            return False
    return True


def newton_step(f, fprime, x: Interval) -> StepResult:
    d = ops.derivative_enclosure(fprime, x)
    mx = x.midpoint()
    xn = intersect(ops.newton_from(mx, eval_point(f, mx), d), x)
    return StepResult(None, None, xn)


def king_step(f, fprime, x: Interval, beta: float, verify: bool = True,
              ostrowski: bool = False) -> StepResult:
    d = ops.derivative_enclosure(fprime, x)
    mx = x.midpoint()
    fx = eval_point(f, mx)
    y = intersect(ops.newton_from(mx, fx, d), x)
    if y is None:
        return StepResult(None, None, None)
    my = y.midpoint()
    fy = eval_point(f, my)
    try:
        if ostrowski:
            image = ops.ostrowski_from(my, fx, fy, d)
        else:
            image = ops.king_from(my, fx, fy, d, beta)
    except _DEGENERATE:
        return StepResult(y, None, y, Fallback.K_DEGENERATE)
    xn = intersect(image, x)
    if verify and (xn is None or not keeps_root(f, xn, y, d.lo > 0.0)):
        return StepResult(y, None, y, Fallback.K_UNVERIFIED)
    return StepResult(y, None, xn)


def traub3_step(f, fprime, x: Interval) -> StepResult:
    d = ops.derivative_enclosure(fprime, x)
    mx = x.midpoint()
    y = intersect(ops.newton_from(mx, eval_point(f, mx), d), x)
    if y is None:
        return StepResult(None, None, None)
    my = y.midpoint()
    z = intersect(ops.newton_from(my, eval_point(f, my), d), y)
    if z is None:
        return StepResult(y, None, None)
    mz = z.midpoint()
    xn = intersect(ops.newton_from(mz, eval_point(f, mz), d), z)
    return StepResult(y, z, xn)


def kungtraub3_step(f, fprime, x: Interval, verify: bool = True) -> StepResult:
    d = ops.derivative_enclosure(fprime, x)
    increasing = d.lo > 0.0
    mx = x.midpoint()
    fx = eval_point(f, mx)
    y = intersect(ops.newton_from(mx, fx, d), x)
    if y is None:
        return StepResult(None, None, None)

    my = y.midpoint()
    fy = eval_point(f, my)
    try:
        z = intersect(ops.kung_k_from(my, fx, fy, d), y)
    except _DEGENERATE:
        return StepResult(y, y, y, Fallback.K_DEGENERATE)
    if verify and (z is None or not keeps_root(f, z, y, increasing)):
        return StepResult(y, y, y, Fallback.K_UNVERIFIED)
    if z is None:
        return StepResult(y, None, None)

    mz = z.midpoint()
    fz = eval_point(f, mz)
    try:
        xn = intersect(ops.kung_t_from(mz, fx, fy, fz, d), z)
    except _DEGENERATE:
        return StepResult(y, z, z, Fallback.T_DEGENERATE)
    if verify and (xn is None or not keeps_root(f, xn, z, increasing)):
        return StepResult(y, z, z, Fallback.T_UNVERIFIED)
    return StepResult(y, z, xn)
