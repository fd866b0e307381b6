"""Interval root-finding schemes, the driver and convergence diagnostics."""

from .analysis import empirical_orders, point_kungtraub
from .driver import (Certificate, InputError, Method, MethodSpec, SolveOutcome,
                     StepRecord, certify, iterate, solve, step)
from .operators import (king_operator, kung_k_operator, kung_t_operator,
                        newton_operator, ostrowski_operator)
from .steps import (Fallback, StepResult, king_step, kungtraub3_step,
                    newton_step, traub3_step)

__all__ = [
    "Certificate", "Fallback", "InputError", "Method", "MethodSpec",
    "SolveOutcome", "StepRecord", "StepResult", "certify", "empirical_orders",
    "iterate", "king_operator", "king_step", "kung_k_operator",
    "kung_t_operator", "kungtraub3_step", "newton_operator", "newton_step",
    "ostrowski_operator", "point_kungtraub", "solve", "step", "traub3_step",
]
