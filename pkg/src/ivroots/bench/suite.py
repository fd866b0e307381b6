"""The five-function benchmark suite and its reference width tables."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from typing import Dict, Optional, Tuple

from ..expr import derive, eval_interval, eval_point, parse
from ..interval import Interval

_SUITE = (
    (1, "x^3 + sin(x/sqrt(3)) - 1/4", (0.0, 0.8), 0.3568342187225045,
     (0.35683421872250, 0.35683421872251)),
    (2, "cos(x) + x - x^2 + x^5", (-0.9, -0.2), -0.5333964635678204,
     (-0.53339646356783, -0.53339646356782)),
    (3, "exp(x) - sin(x)^3", (-3.5, -3.4), -3.4623979938206757,
     (-3.46239799382068, -3.46239799382067)),
    (4, "(x - 1)*exp(-2*x) + x^3", (0.4, 0.6), 0.5391809932576055,
     (0.53918099325760, 0.53918099325761)),
    (5, "sin(x^2+1)^2 - sqrt(x+1)/3", (1.0, 1.2), 1.1684762578039694,
     (1.16847625780396, 1.16847625780397)),
)


class SuiteError(RuntimeError):
    """A suite entry or the reference table failed validation."""


@dataclass(frozen=True)
class SuiteEntry:
    id: int
    expr_text: str
    x0: Interval
    reference_root: float
    reference_enclosure: Interval

    @cached_property
    def expr(self):
        return parse(self.expr_text)

    @cached_property
    def fprime(self):
        return derive(self.expr)

    @property
    def name(self) -> str:
        return f"f{self.id}"

    def validate(self) -> None:
        r = self.reference_root
        if not (self.x0.contains(r) and self.reference_enclosure.contains(r)):
            raise SuiteError(f"{self.name}: reference root {r!r} not in X0 or enclosure")
        d = eval_interval(self.fprime, self.x0)
        if d.contains_zero():
            raise SuiteError(f"{self.name}: F'(X0) = {d} contains 0")
        if not eval_point(self.expr, r).mag() <= 1e-13:
            raise SuiteError(f"{self.name}: |f(root)| exceeds 1e-13")


def load_suite():
    """Return the five suite entries, validated; any failure raises SuiteError."""
    entries = []
    for fid, text, (a, b), root, (elo, ehi) in _SUITE:
        entry = SuiteEntry(fid, text, Interval(a, b), root, Interval(elo, ehi))
        entry.validate()
        entries.append(entry)
    return entries


def method_key(kind: str, beta: Optional[float]) -> Tuple[str, Optional[float]]:
    """Identity of a table column: beta only distinguishes King variants."""
    return (kind, float(beta) if kind == "king" else None)


@dataclass
class ReferenceWidths:
    """Expected widths keyed by (function id, method key), each a {k: width} map."""

    cells: Dict[Tuple[int, Tuple[str, Optional[float]]], Dict[int, float]] = field(
        default_factory=dict)

    def iterations(self, fid, key) -> int:
        return max(self.cells[(fid, key)])

    def pairs(self):
        return sorted(self.cells, key=lambda p: (p[0], p[1][0], p[1][1] or 0.0))

    def validate(self) -> None:
        for pair, seq in self.cells.items():
            ks = sorted(seq)
            if ks != list(range(1, len(ks) + 1)):
                raise SuiteError(f"reference {pair}: iterations not 1..n")
            ws = [seq[k] for k in ks]
            if any(w <= 0.0 for w in ws):
                raise SuiteError(f"reference {pair}: non-positive width")
            if any(b > a for a, b in zip(ws, ws[1:])):
                raise SuiteError(f"reference {pair}: widths increase with k")


_METHODS = {"newton", "ostrowski", "king", "traub3", "kungtraub3"}


def parse_reference(text: str) -> ReferenceWidths:
    ref = ReferenceWidths()
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != ["function_id", "method", "beta", "k", "width"]:
        raise SuiteError(f"unexpected reference header {reader.fieldnames}")
    for row in reader:
        method = row["method"]
        if method not in _METHODS:
            raise SuiteError(f"unknown method {method!r} in reference data")
        beta = row["beta"].strip()
        if (method == "king") != bool(beta):
            raise SuiteError(f"beta column must be set only for king: {row}")
        key = method_key(method, float(beta) if beta else None)
        cell = ref.cells.setdefault((int(row["function_id"]), key), {})
        cell[int(row["k"])] = float(row["width"])
    ref.validate()
    return ref


def load_reference() -> ReferenceWidths:
    """The bundled width tables (five functions by five methods)."""
    text = resources.files(__package__).joinpath("data/reference_widths.csv").read_text("utf-8")
    return parse_reference(text)
