"""Symbolic first derivative with light, value-preserving simplification.

Constant folding only happens when the binary64 result is exact, so the
derivative tree denotes exactly f' and its natural extension stays a
rigorous enclosure of f'.
"""

from fractions import Fraction

from ..errors import NonDifferentiable
from .ast import Binary, Const, Pow, Unary, Var, has_var

ZERO = Const(0.0)
ONE = Const(1.0)


def _is_const(e, v=None):
    return isinstance(e, Const) and e.name is None and (v is None or e.value == v)


def _fold(op, a, b):
    """Exact binary64 result of ``a op b`` or None."""
    fa, fb = Fraction(a), Fraction(b)
    if op == "add":
        r = fa + fb
    elif op == "sub":
        r = fa - fb
    elif op == "mul":
        r = fa * fb
    else:
        if fb == 0:
            return None
        r = fa / fb
    try:
        f = float(r)
    except OverflowError:
        return None
    return f if Fraction(f) == r else None


def _binary(op, a, b):
    if _is_const(a) and _is_const(b):
        v = _fold(op, a.value, b.value)
        if v is not None:
            return Const(v)
    return Binary(op, a, b)


def add(a, b):
    if _is_const(a, 0.0):
        return b
    if _is_const(b, 0.0):
        return a
    return _binary("add", a, b)


def sub(a, b):
    if _is_const(b, 0.0):
        return a
    if _is_const(a, 0.0):
        return neg(b)
    return _binary("sub", a, b)


def mul(a, b):
    if _is_const(a, 0.0) or _is_const(b, 0.0):
        return ZERO
    if _is_const(a, 1.0):
        return b
    if _is_const(b, 1.0):
        return a
    if _is_const(a, -1.0):
        return neg(b)
    if _is_const(b, -1.0):
        return neg(a)
    return _binary("mul", a, b)


def div(a, b):
    if _is_const(a, 0.0):
        return ZERO
    if _is_const(b, 1.0):
        return a
    return _binary("div", a, b)


def neg(a):
    if _is_const(a):
        return Const(-a.value)
    if isinstance(a, Unary) and a.op == "neg":
        return a.arg
    return Unary("neg", a)


def power(base, n):
    if n == 0:
        return ONE
    if n == 1:
        return base
    return Pow(base, n)


def derive(e):
    """d/dx of ``e``; raises NonDifferentiable for ``abs``."""
    if isinstance(e, Const):
        return ZERO
    if isinstance(e, Var):
        return ONE
    if isinstance(e, Pow):
        du = derive(e.base)
        return mul(mul(Const(float(e.n)), power(e.base, e.n - 1)), du)
    if isinstance(e, Binary):
        u, v = e.left, e.right
        if e.op in ("add", "sub"):
            combine = add if e.op == "add" else sub
            return combine(derive(u), derive(v))
        if e.op == "mul":
            return add(mul(derive(u), v), mul(u, derive(v)))
        if not has_var(v):
            return div(derive(u), v)
        return div(sub(mul(derive(u), v), mul(u, derive(v))), power(v, 2))
    u = e.arg
    du = derive(u)
    op = e.op
    if op == "neg":
        return neg(du)
    if op == "sin":
        return mul(Unary("cos", u), du)
    if op == "cos":
        return mul(neg(Unary("sin", u)), du)
    if op == "tan":
        return div(du, power(Unary("cos", u), 2))
    if op == "exp":
        return mul(e, du)
    if op == "ln":
        return div(du, u)
    if op == "sqrt":
        return div(du, mul(Const(2.0), e))
    raise NonDifferentiable(f"{op} has no derivative rule")
