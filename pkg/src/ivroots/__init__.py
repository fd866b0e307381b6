"""Validated enclosures of simple roots of univariate equations.

Interval Newton, King/Ostrowski, Traub three-step and the interval
three-step Kung-Traub scheme over outward-rounded binary64 intervals.
"""

from .interval import Interval
from .solvers import Certificate, Method, MethodSpec, iterate, solve

__version__ = "0.1.0"

__all__ = ["Certificate", "Interval", "Method", "MethodSpec", "iterate", "solve"]
