"""Univariate expressions: parsing, rendering, evaluation, differentiation."""

from .ast import Binary, Const, Expr, Pow, Unary, Var, render
from .derive import derive
from .elementary import interval_elementary
from .evaluate import eval_float, eval_interval, eval_point
from .parser import parse

__all__ = [
    "Binary", "Const", "Expr", "Pow", "Unary", "Var", "derive", "eval_float",
    "eval_interval", "eval_point", "interval_elementary", "parse", "render",
]
