"""Iteration driver, termination rules and certificates."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from ..errors import (DerivativeContainsZero, DomainError, IntervalError,
                      NonDifferentiable, ParseError)
from ..expr import derive, parse
from ..interval import Interval
from . import operators as ops
from .steps import (Fallback, StepResult, king_step, kungtraub3_step,
                    newton_step, traub3_step)


class Method(str, Enum):
    NEWTON = "newton"
    OSTROWSKI = "ostrowski"
    KING = "king"
    TRAUB3 = "traub3"
    KUNGTRAUB3 = "kungtraub3"


class Certificate(str, Enum):
    UNIQUE = "unique"
    NO_ROOT = "no-root"
    TOLERANCE = "tolerance"
    INCONCLUSIVE = "inconclusive"


class InputError(ValueError):
    """The problem itself is malformed (bad text, X0 outside the domain)."""


@dataclass(frozen=True)
class MethodSpec:
    kind: Method = Method.KUNGTRAUB3
    beta: float = 2.0
    tol: float = 1e-15
    max_iter: int = 100
    verify: bool = True

    def __post_init__(self):
        object.__setattr__(self, "kind", Method(self.kind))
        if not (self.tol > 0.0 and math.isfinite(self.tol)):
            raise ValueError(f"tol must be positive, got {self.tol!r}")
        if not (isinstance(self.max_iter, int) and self.max_iter >= 1):
            raise ValueError(f"max_iter must be a positive integer, got {self.max_iter!r}")
        if not math.isfinite(self.beta):
            raise ValueError("beta must be finite")

    @property
    def effective_beta(self) -> Optional[float]:
        if self.kind is Method.KING:
            return self.beta
        if self.kind is Method.OSTROWSKI:
            return 0.0
        return None

    @property
    def label(self) -> str:
        if self.kind is Method.KING:
            return f"king(beta={self.beta:g})"
        return self.kind.value


@dataclass(frozen=True)
class StepRecord:
    """X^(k) and the stages Y^(k), Z^(k) computed from it."""

    k: int
    x: Interval
    y: Optional[Interval] = None
    z: Optional[Interval] = None
    fallback: Fallback = Fallback.NONE

    @property
    def width(self) -> float:
        return self.x.width()

    @property
    def width_y(self) -> Optional[float]:
        return None if self.y is None else self.y.width()

    @property
    def width_z(self) -> Optional[float]:
        return None if self.z is None else self.z.width()


@dataclass(frozen=True)
class SolveOutcome:
    certificate: Certificate
    enclosure: Optional[Interval]
    trace: Tuple[StepRecord, ...]
    method: MethodSpec
    iterations: int
    reason: Optional[str] = None

    @property
    def widths(self):
        return [r.width for r in self.trace]


def step(f, fprime, x: Interval, spec: MethodSpec) -> StepResult:
    kind = spec.kind
    if kind is Method.NEWTON:
        return newton_step(f, fprime, x)
    if kind is Method.OSTROWSKI:
        return king_step(f, fprime, x, 0.0, spec.verify, ostrowski=True)
    if kind is Method.KING:
        return king_step(f, fprime, x, spec.beta, spec.verify)
    if kind is Method.TRAUB3:
        return traub3_step(f, fprime, x)
    return kungtraub3_step(f, fprime, x, spec.verify)


def _witness(f, fprime, rec: StepRecord, spec: Optional[MethodSpec]) -> bool:
    x = rec.x
    try:
        if not ops.newton_operator(f, fprime, x).subset_of(x):
            return False
        if spec is None or spec.kind is not Method.KUNGTRAUB3:
            return True
        if rec.fallback is not Fallback.NONE or rec.y is None or rec.z is None:
            return False
        return (ops.kung_k_operator(f, fprime, x, rec.y).subset_of(rec.y)
                and ops.kung_t_operator(f, fprime, x, rec.y, rec.z).subset_of(rec.z))
    except IntervalError:
        return False


def certify(trace, f, fprime, spec: Optional[MethodSpec] = None) -> Certificate:
    """UNIQUE if some recorded step carries an existence-and-uniqueness
    witness, else TOLERANCE.

    The witness is N(X) inside X (with 0 outside F'(X)), for every scheme.
    Kung-Traub steps additionally need K(X,Y) inside Y and T(X,Y,Z) inside Z
    with no fallback at that step.  Without ``spec`` only the Newton
    witness is checked.
    """
    kt3 = spec is not None and spec.kind is Method.KUNGTRAUB3
    for rec in trace:
        if kt3 and rec.y is None and rec.z is None:
            continue
        if _witness(f, fprime, rec, spec):
            return Certificate.UNIQUE
    return Certificate.TOLERANCE


def solve(f, x0: Interval, spec: MethodSpec, fprime=None) -> SolveOutcome:
    """Run ``spec`` on the expression ``f`` from ``x0``.

    Termination, in priority order: an empty intersection (NO_ROOT); width
    at most ``tol``; a fixed point X^(k+1) == X^(k); ``max_iter`` steps.
    A derivative enclosure containing zero ends the run as INCONCLUSIVE.
    """
    if fprime is None:
        try:
            fprime = derive(f)
        except NonDifferentiable as exc:
            raise InputError(str(exc)) from exc
    trace = []
    x = x0
    for k in range(spec.max_iter):
        try:
            res = step(f, fprime, x, spec)
        except DerivativeContainsZero:
            trace.append(StepRecord(k, x))
            return SolveOutcome(Certificate.INCONCLUSIVE, x, tuple(trace), spec, k,
                                "derivative-contains-zero")
        except (DomainError, IntervalError) as exc:
            raise InputError(f"evaluation failed on {x}: {exc}") from exc
        trace.append(StepRecord(k, x, res.y, res.z, res.fallback))
        if res.x_next is None:
            return SolveOutcome(Certificate.NO_ROOT, None, tuple(trace), spec, k + 1)
        xn = res.x_next
        if xn.width() <= spec.tol or xn == x:
            trace.append(StepRecord(k + 1, xn))
            cert = certify(trace, f, fprime, spec)
            return SolveOutcome(cert, xn, tuple(trace), spec, k + 1)
        x = xn
    trace.append(StepRecord(spec.max_iter, x))
    return SolveOutcome(Certificate.INCONCLUSIVE, x, tuple(trace), spec, spec.max_iter,
                        "max-iter")


def iterate(f_text: str, x0: Interval, spec: MethodSpec) -> SolveOutcome:
    try:
        f = parse(f_text)
    except ParseError as exc:
        raise InputError(str(exc)) from exc
    return solve(f, x0, spec)
