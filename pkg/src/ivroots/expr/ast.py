"""Expression tree for univariate real functions of ``x``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

UNARY_OPS = ("neg", "sin", "cos", "tan", "exp", "ln", "sqrt", "abs")
FUNCTIONS = ("sin", "cos", "tan", "exp", "ln", "sqrt", "abs")
BINARY_OPS = ("add", "sub", "mul", "div")
NAMED_CONSTANTS = {"pi": math.pi, "e": math.e}
MAX_EXPONENT = 64


@dataclass(frozen=True)
class Const:
    """A binary64 literal, or a named constant (``pi``, ``e``) that is
    evaluated through a rigorous enclosure rather than ``value``."""

    value: float
    name: Optional[str] = None

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"non-finite constant {self.value!r}")
        object.__setattr__(self, "value", float(self.value) + 0.0)
        if self.name is not None and self.name not in NAMED_CONSTANTS:
            raise ValueError(f"unknown named constant {self.name!r}")


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Unary:
    op: str
    arg: Expr

    def __post_init__(self):
        if self.op not in UNARY_OPS:
            raise ValueError(f"unknown unary op {self.op!r}")


@dataclass(frozen=True)
class Binary:
    op: str
    left: Expr
    right: Expr

    def __post_init__(self):
        if self.op not in BINARY_OPS:
            raise ValueError(f"unknown binary op {self.op!r}")


@dataclass(frozen=True)
class Pow:
    base: Expr
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or abs(self.n) > MAX_EXPONENT:
            raise ValueError(f"exponent must be an integer with |n| <= {MAX_EXPONENT}")


Expr = Union[Const, Var, Unary, Binary, Pow]

X = Var()


def has_var(e: Expr) -> bool:
    if isinstance(e, Var):
        return True
    if isinstance(e, Const):
        return False
    if isinstance(e, Unary):
        return has_var(e.arg)
    if isinstance(e, Pow):
        return has_var(e.base)
    return has_var(e.left) or has_var(e.right)


def walk(e: Expr):
    yield e
    if isinstance(e, Unary):
        yield from walk(e.arg)
    elif isinstance(e, Pow):
        yield from walk(e.base)
    elif isinstance(e, Binary):
        yield from walk(e.left)
        yield from walk(e.right)


# -- rendering ----------------------------------------------------------------

_PREC = {"add": 1, "sub": 1, "mul": 2, "div": 2}
_SYMBOL = {"add": " + ", "sub": " - ", "mul": "*", "div": "/"}
_NEG, _POW, _ATOM = 3, 4, 5


def _format_number(v: float) -> str:
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def _prec(e: Expr) -> int:
    if isinstance(e, Binary):
        return _PREC[e.op]
    if isinstance(e, Unary) and e.op == "neg":
        return _NEG
    if isinstance(e, Const) and e.name is None and e.value < 0:
        return _NEG
    if isinstance(e, Pow):
        return _POW
    return _ATOM


def render(e: Expr) -> str:
    """Canonical text form; ``parse(render(e)) == e`` for every tree."""
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Const):
        return e.name if e.name else _format_number(e.value)
    if isinstance(e, Unary):
        if e.op == "neg":
            inner = render(e.arg)
            # "-2" would read back as a negative literal
            if _prec(e.arg) < _NEG or (isinstance(e.arg, Const) and e.arg.name is None):
                inner = f"({inner})"
            return "-" + inner
        return f"{e.op}({render(e.arg)})"
    if isinstance(e, Pow):
        base = render(e.base)
        if _prec(e.base) < _ATOM:
            base = f"({base})"
        return f"{base}^{e.n}"
    p = _PREC[e.op]
    left, right = render(e.left), render(e.right)
    if _prec(e.left) < p:
        left = f"({left})"
    if _prec(e.right) <= p:
        right = f"({right})"
    return left + _SYMBOL[e.op] + right


def __str__(self):
    return render(self)


for _cls in (Const, Var, Unary, Binary, Pow):
    _cls.__str__ = __str__
del _cls
