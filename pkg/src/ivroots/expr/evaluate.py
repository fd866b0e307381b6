"""Natural interval extension and plain point evaluation of an Expr."""

import math

from ..interval import Interval
from .ast import Binary, Const, Pow, Unary, Var
from .elementary import E, PI, UNARY, ipow

_NAMED = {"pi": PI, "e": E}


def eval_interval(e, x: Interval) -> Interval:
    """Natural extension F(X): every node replaced by its interval version.

    The result contains ``f(t)`` for every ``t`` in ``x``.  Raises
    DomainError / ZeroInDenominator when a sub-expression leaves its domain.
    """
    if isinstance(e, Var):
        return x
    if isinstance(e, Const):
        if e.name is not None:
            return _NAMED[e.name]
        return Interval(e.value, e.value)
    if isinstance(e, Unary):
        return UNARY[e.op](eval_interval(e.arg, x))
    if isinstance(e, Pow):
        return ipow(eval_interval(e.base, x), e.n)
    a = eval_interval(e.left, x)
    b = eval_interval(e.right, x)
    op = e.op
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a / b


def eval_point(e, t: float) -> Interval:
    """F([t, t]): a narrow interval that contains the exact value f(t)."""
    return eval_interval(e, Interval(t, t))


_FLOAT_UNARY = {
    "neg": lambda v: -v,
    "sin": math.sin,
    "cos": math.cos,
    "tan": math.tan,
    "exp": math.exp,
    "ln": math.log,
    "sqrt": math.sqrt,
    "abs": abs,
}


def eval_float(e, t: float) -> float:
    """Ordinary binary64 evaluation (no enclosure, no rigor)."""
    if isinstance(e, Var):
        return t
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Unary):
        return _FLOAT_UNARY[e.op](eval_float(e.arg, t))
    if isinstance(e, Pow):
        return eval_float(e.base, t) ** e.n
    a = eval_float(e.left, t)
    b = eval_float(e.right, t)
    op = e.op
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a / b
