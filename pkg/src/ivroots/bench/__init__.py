"""Benchmark suite runner and reference-table comparison."""

from .report import (BenchReport, BenchRow, CellCheck, Comparison, IterationCheck,
                     compare_reference, default_methods, emit_report, run_suite)
from .suite import (ReferenceWidths, SuiteEntry, SuiteError, load_reference,
                    load_suite, parse_reference)

__all__ = [
    "BenchReport", "BenchRow", "CellCheck", "Comparison", "IterationCheck",
    "ReferenceWidths", "SuiteEntry", "SuiteError", "compare_reference",
    "default_methods", "emit_report", "load_reference", "load_suite",
    "parse_reference", "run_suite",
]
