"""Run the suite, compare against the reference tables, render reports."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence

from ..solvers import Certificate, InputError, Method, MethodSpec, SolveOutcome, solve
from .suite import ReferenceWidths, SuiteEntry, load_suite, method_key

WIDTH_FACTOR = 100.0
SATURATION_ULPS = 10
ITERATION_SLACK = 1


def default_methods() -> List[MethodSpec]:
    """The five table columns: Newton, Ostrowski, King(beta=2), Traub3, KungTraub3."""
    return [MethodSpec(Method.NEWTON), MethodSpec(Method.OSTROWSKI),
            MethodSpec(Method.KING, beta=2.0), MethodSpec(Method.TRAUB3),
            MethodSpec(Method.KUNGTRAUB3)]


def spec_key(spec: MethodSpec):
    return method_key(spec.kind.value, spec.beta)


@dataclass(frozen=True)
class BenchRow:
    """One (function, method) run.  ``outcome`` is None when the solve raised."""

    entry: SuiteEntry
    spec: MethodSpec
    outcome: Optional[SolveOutcome]
    error: Optional[str] = None

    @property
    def function_id(self) -> int:
        return self.entry.id

    @property
    def iterations(self) -> Optional[int]:
        return None if self.outcome is None else self.outcome.iterations

    @property
    def certificate(self) -> Optional[Certificate]:
        return None if self.outcome is None else self.outcome.certificate

    @property
    def widths(self) -> List[float]:
        """w(X^(k)) for k = 1, 2, ... (the initial width is left out)."""
        if self.outcome is None:
            return []
        return [r.width for r in self.outcome.trace if r.k >= 1]


@dataclass(frozen=True)
class BenchReport:
    rows: tuple
    methods: tuple

    def row(self, function_id: int, spec: MethodSpec) -> Optional[BenchRow]:
        key = spec_key(spec)
        for r in self.rows:
            if r.function_id == function_id and spec_key(r.spec) == key:
                return r
        return None

    @property
    def function_ids(self):
        return sorted({r.function_id for r in self.rows})


def _run_one(args):
    entry, spec = args
    try:
        return BenchRow(entry, spec, solve(entry.expr, entry.x0, spec, entry.fprime))
    except (InputError, ArithmeticError, ValueError) as exc:
        return BenchRow(entry, spec, None, f"{type(exc).__name__}: {exc}")


def run_suite(methods: Optional[Sequence[MethodSpec]] = None, tol: float = 1e-15,
              max_iter: int = 100, workers: int = 1,
              suite: Optional[Sequence[SuiteEntry]] = None) -> BenchReport:
    """Solve every (entry, method) pair; rows come out function-major.

    ``tol`` and ``max_iter`` override those carried by each MethodSpec.
    With ``workers > 1`` the pairs run in separate processes; the result
    order does not depend on scheduling.
    """
    methods = list(default_methods() if methods is None else methods)
    if not methods:
        raise ValueError("run_suite needs at least one method")
    keys = [spec_key(m) for m in methods]
    if len(set(keys)) != len(keys):
        raise ValueError("duplicate method in run_suite")
    methods = [replace(m, tol=tol, max_iter=max_iter) for m in methods]
    entries = list(load_suite() if suite is None else suite)
    jobs = [(e, m) for e in entries for m in methods]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_one, jobs))
    else:
        rows = [_run_one(job) for job in jobs]
    return BenchReport(tuple(rows), tuple(methods))


@dataclass(frozen=True)
class CellCheck:
    function_id: int
    method: str
    k: int
    measured: Optional[float]
    reference: float
    passed: bool
    rule: str  # "factor", "saturated", "fail" or "missing"


@dataclass(frozen=True)
class IterationCheck:
    function_id: int
    method: str
    measured: Optional[int]
    reference: int
    passed: bool


@dataclass(frozen=True)
class Comparison:
    cells: tuple
    iterations: tuple
    structural: tuple  # messages about missing (function, method) pairs

    @property
    def passed(self) -> bool:
        return (not self.structural and all(c.passed for c in self.cells)
                and all(i.passed for i in self.iterations))

    def failures(self) -> List[str]:
        out = list(self.structural)
        out += [f"f{c.function_id} {c.method} k={c.k}: measured {c.measured!r} vs "
                f"reference {c.reference:.3g} ({c.rule})" for c in self.cells if not c.passed]
        out += [f"f{i.function_id} {i.method}: {i.measured} iterations vs reference "
                f"{i.reference}" for i in self.iterations if not i.passed]
        return out


def _label(key) -> str:
    kind, beta = key
    return f"king(beta={beta:g})" if kind == "king" else kind


def compare_reference(report: BenchReport, ref: ReferenceWidths) -> Comparison:
    """Check every reference cell against the measured run.

    A width passes when it is within a factor of 100 of the reference, or
    when both are at most 10 ulp of the root.  When a run stops before a
    reference row, its final width stands in for the missing rows.
    Iteration counts may differ by one.
    """
    by_pair = {(r.function_id, spec_key(r.spec)): r for r in report.rows}
    cells, iters, structural = [], [], []
    for fid, key in ref.pairs():
        seq = ref.cells[(fid, key)]
        label = _label(key)
        row = by_pair.get((fid, key))
        if row is None:
            structural.append(f"f{fid} {label}: pair missing from report")
            continue
        measured = row.widths
        sat = SATURATION_ULPS * math.ulp(row.entry.reference_root)
        for k in sorted(seq):
            want = seq[k]
            if not measured:
                cells.append(CellCheck(fid, label, k, None, want, False, "missing"))
                continue
            got = measured[min(k, len(measured)) - 1]
            if got <= sat and want <= sat:
                ok, rule = True, "saturated"
            elif want / WIDTH_FACTOR <= got <= want * WIDTH_FACTOR:
                ok, rule = True, "factor"
            else:
                ok, rule = False, "fail"
            cells.append(CellCheck(fid, label, k, got, want, ok, rule))
        n_ref = ref.iterations(fid, key)
        n = row.iterations
        iters.append(IterationCheck(fid, label, n, n_ref,
                                    n is not None and abs(n - n_ref) <= ITERATION_SLACK))
    return Comparison(tuple(cells), tuple(iters), tuple(structural))


def _beta_field(spec: MethodSpec) -> str:
    return f"{spec.beta:g}" if spec.kind is Method.KING else ""


def _fmt(w: float) -> str:
    return f"{w:.2e}"


def emit_markdown(report: BenchReport) -> str:
    out = []
    for fid in report.function_ids:
        rows = [r for r in report.rows if r.function_id == fid]
        entry = rows[0].entry
        out.append(f"### {entry.name}(x) = {entry.expr_text} on [{entry.x0.lo:g}, {entry.x0.hi:g}]")
        out.append("")
        out.append("| k | " + " | ".join(r.spec.label for r in rows) + " |")
        out.append("|---|" + "---|" * len(rows))
        depth = max((len(r.widths) for r in rows), default=0)
        for k in range(1, depth + 1):
            cells = [_fmt(r.widths[k - 1]) if k <= len(r.widths) else "" for r in rows]
            out.append(f"| {k} | " + " | ".join(cells) + " |")
        certs = [r.certificate.value if r.outcome else f"error ({r.error})" for r in rows]
        out.append("| certificate | " + " | ".join(certs) + " |")
        out.append("")
    return "\n".join(out)


def emit_csv(report: BenchReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["function_id", "method", "beta", "k", "width", "certificate"])
    for r in report.rows:
        cert = r.certificate.value if r.outcome else "error"
        for k, width in enumerate(r.widths, 1):
            w.writerow([r.function_id, r.spec.kind.value, _beta_field(r.spec), k,
                        _fmt(width), cert])
    return buf.getvalue()


def emit_report(report: BenchReport, format: str = "md") -> str:
    if format == "md":
        return emit_markdown(report)
    if format == "csv":
        return emit_csv(report)
    raise ValueError(f"unknown report format {format!r}")
