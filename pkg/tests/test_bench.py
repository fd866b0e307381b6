import csv
import io
import math
from dataclasses import replace

import pytest

from ivroots.bench import (SuiteError, compare_reference, default_methods, emit_report,
                           load_reference, load_suite, parse_reference, run_suite)
from ivroots.bench.suite import SuiteEntry
from ivroots.expr import eval_interval, eval_point
from ivroots.interval import Interval
from ivroots.solvers import Certificate, Method, MethodSpec

ROOTS = [0.3568342187225045, -0.5333964635678204, -3.4623979938206757,
         0.5391809932576055, 1.1684762578039694]


@pytest.fixture(scope="module")
def report():
    return run_suite()


@pytest.fixture(scope="module")
def reference():
    return load_reference()


def test_suite_entries():
    suite = load_suite()
    assert [e.id for e in suite] == [1, 2, 3, 4, 5]
    assert [e.reference_root for e in suite] == ROOTS
    assert suite[0].expr_text == "x^3 + sin(x/sqrt(3)) - 1/4"
    assert suite[4].expr_text == "sin(x^2+1)^2 - sqrt(x+1)/3"
    assert suite[2].x0 == Interval(-3.5, -3.4) and suite[2].x0.contains(-3.4623979938206757)
    for e in suite:
        assert not eval_interval(e.fprime, e.x0).contains_zero()
        assert e.reference_enclosure.contains(e.reference_root)
    assert eval_point(suite[0].expr, ROOTS[0]).mag() <= 1e-13


def test_suite_validation_rejects_bad_entry():
    bad = SuiteEntry(9, "x^2 - 2", Interval(-1, 2), 1.4142135623730951, Interval(1.4, 1.5))
    with pytest.raises(SuiteError):
        bad.validate()
    outside = SuiteEntry(9, "x - 3", Interval(0, 1), 3.0, Interval(2, 4))
    with pytest.raises(SuiteError):
        outside.validate()


def test_reference_table_shape(reference):
    assert len(reference.cells) == 25
    iters = {(fid, key[0]): reference.iterations(fid, key) for fid, key in reference.cells}
    assert iters[(1, "newton")] == 5 and iters[(1, "kungtraub3")] == 2
    assert iters[(5, "kungtraub3")] == 2 and iters[(5, "traub3")] == 3
    assert reference.cells[(1, ("kungtraub3", None))][1] == 1.53e-3
    assert reference.cells[(4, ("ostrowski", None))][2] == 2.34e-10
    assert reference.cells[(1, ("king", 2.0))][2] == 4.76e-8


@pytest.mark.parametrize("text", [
    "function_id,method,k,width\n1,newton,1,0.1\n",
    "function_id,method,beta,k,width\n1,halley,,1,0.1\n",
    "function_id,method,beta,k,width\n1,newton,2,1,0.1\n",
    "function_id,method,beta,k,width\n1,newton,,1,0.1\n1,newton,,2,0.2\n",
    "function_id,method,beta,k,width\n1,newton,,1,0\n",
    "function_id,method,beta,k,width\n1,newton,,2,0.1\n",
])
def test_reference_parser_rejects_malformed(text):
    with pytest.raises(SuiteError):
        parse_reference(text)


def test_default_methods():
    labels = [m.label for m in default_methods()]
    assert labels == ["newton", "ostrowski", "king(beta=2)", "traub3", "kungtraub3"]


def test_run_suite_shape_and_order(report):
    assert len(report.rows) == 25
    keys = [(r.function_id, r.spec.label) for r in report.rows]
    assert keys == [(f, m.label) for f in range(1, 6) for m in default_methods()]


def test_run_suite_examples(report):
    newton = report.row(1, MethodSpec(Method.NEWTON))
    assert newton.iterations == 5
    assert newton.widths[-1] <= 4 * 2.22e-16
    assert report.row(5, MethodSpec(Method.KUNGTRAUB3)).iterations == 2


def test_every_certificate_is_positive(report):
    for r in report.rows:
        assert r.error is None
        assert r.certificate in (Certificate.UNIQUE, Certificate.TOLERANCE)


def test_iteration_ordering_by_method_speed(report):
    for fid in range(1, 6):
        n = {r.spec.kind: r.iterations for r in report.rows if r.function_id == fid}
        assert n[Method.KUNGTRAUB3] <= n[Method.TRAUB3]
        assert n[Method.TRAUB3] <= min(n[Method.OSTROWSKI], n[Method.KING])
        assert max(n[Method.OSTROWSKI], n[Method.KING]) <= n[Method.NEWTON] + 1


def test_compare_reference_passes(report, reference):
    cmp = compare_reference(report, reference)
    assert cmp.passed, cmp.failures()
    assert len(cmp.iterations) == 25


def test_compare_reference_named_cells(report, reference):
    cells = {(c.function_id, c.method, c.k): c for c in compare_reference(report, reference).cells}
    assert cells[(1, "kungtraub3", 1)].rule == "factor"
    assert cells[(2, "traub3", 2)].rule == "saturated"
    assert cells[(4, "ostrowski", 2)].rule == "factor"


def test_compare_reference_detects_problems(report, reference):
    partial = replace(report, rows=tuple(r for r in report.rows if r.spec.kind is not Method.KING))
    cmp = compare_reference(partial, reference)
    assert not cmp.passed and len(cmp.structural) == 5

    bad = parse_reference("function_id,method,beta,k,width\n1,newton,,1,1e-9\n")
    cmp = compare_reference(report, bad)
    assert not cmp.passed
    assert any("newton" in msg for msg in cmp.failures())


def test_run_suite_records_failures_without_aborting():
    suite = [SuiteEntry(1, "ln(x) - 1", Interval(-1, 3), 2.718281828459045, Interval(2, 3))]
    rep = run_suite([MethodSpec(Method.NEWTON)], suite=suite)
    assert rep.rows[0].outcome is None and "InputError" in rep.rows[0].error
    assert "error" in emit_report(rep, "md")


def test_run_suite_needs_methods():
    with pytest.raises(ValueError):
        run_suite([])


def test_markdown_report_shape(report):
    md = emit_report(report, "md")
    tables = md.split("### ")[1:]
    assert len(tables) == 5
    f1 = tables[0].splitlines()
    header = next(line for line in f1 if line.startswith("| k |"))
    assert header.count("|") == 7
    k_rows = [line for line in f1 if line[:4] in {f"| {k} " for k in range(1, 10)}]
    assert len(k_rows) <= 5
    assert "1.53e-03" in tables[0]


def test_csv_report(report):
    text = emit_report(report, "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["function_id", "method", "beta", "k", "width", "certificate"]
    kt = [r for r in rows if r["function_id"] == "1" and r["method"] == "kungtraub3"]
    assert [r["k"] for r in kt] == ["1", "2"]
    assert kt[1]["beta"] == "" and kt[1]["certificate"] == "unique"
    assert float(kt[1]["width"]) <= 10 * math.ulp(ROOTS[0])
    assert {r["beta"] for r in rows if r["method"] == "king"} == {"2"}


def test_reports_are_deterministic(report):
    again = run_suite()
    parallel = run_suite(workers=3)
    for fmt in ("md", "csv"):
        assert emit_report(report, fmt) == emit_report(again, fmt) == emit_report(parallel, fmt)


def test_unknown_format(report):
    with pytest.raises(ValueError):
        emit_report(report, "html")
