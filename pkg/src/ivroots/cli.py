"""Command-line front end: ``solve``, ``bench`` and ``parse``.

Exit codes for ``solve``: 0 unique/tolerance, 1 no root, 2 inconclusive,
3 usage, parse, domain or I/O error.  ``bench`` exits 0 when every
reference check passes and 1 otherwise.  Negative interval bounds need the ``=`` form, e.g.
``--interval=-0.9,-0.2``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bench.report import spec_key
from .bench import compare_reference, emit_report, load_reference, run_suite
from .errors import IntervalError, NonDifferentiable, ParseError
from .expr import derive, parse, render
from .interval import parse_interval
from .solvers import Certificate, InputError, Method, MethodSpec, iterate

EXIT_OK, EXIT_NO_ROOT, EXIT_INCONCLUSIVE, EXIT_ERROR = 0, 1, 2, 3
EXIT_MISMATCH = 1  # bench: some reference check failed

EXIT_CODES = {
    Certificate.UNIQUE: EXIT_OK,
    Certificate.TOLERANCE: EXIT_OK,
    Certificate.NO_ROOT: EXIT_NO_ROOT,
    Certificate.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

METHOD_NAMES = [m.value for m in Method]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ivroots", description="Verified interval root finding.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="enclose the root of f on an interval")
    s.add_argument("--expr", required=True, help="expression in x, e.g. 'x^2 - 2'")
    s.add_argument("--interval", required=True, metavar="LO,HI")
    s.add_argument("--method", choices=METHOD_NAMES, default="kungtraub3")
    s.add_argument("--beta", type=float, default=None, help="King parameter (default 2)")
    s.add_argument("--tol", type=float, default=1e-15)
    s.add_argument("--max-iter", type=int, default=100)
    s.add_argument("--format", choices=["text", "json", "csv", "md"], default="text")
    s.add_argument("--out", default=None)

    b = sub.add_parser("bench", help="run the five-function suite")
    b.add_argument("--suite", default="paper")
    b.add_argument("--methods", default=None, help="comma list, default all five")
    b.add_argument("--beta", type=float, default=None, help="beta for king (default 2)")
    b.add_argument("--tol", type=float, default=1e-15)
    b.add_argument("--max-iter", type=int, default=100)
    b.add_argument("--format", choices=["text", "md", "csv"], default="text")
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--out", default=None)

    q = sub.add_parser("parse", help="show the normalized expression and derivative")
    q.add_argument("--expr", required=True)
    return p


def _method_spec(name: str, beta, tol, max_iter) -> MethodSpec:
    if beta is not None and name != "king":
        raise UsageError("--beta is only valid with the king method")
    try:
        return MethodSpec(Method(name), 2.0 if beta is None else beta, tol, max_iter)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _ival(x):
    return None if x is None else {"lo": x.lo, "hi": x.hi}


def outcome_to_json(outcome, x0) -> dict:
    spec = outcome.method
    return {
        "method": spec.kind.value,
        "beta": spec.effective_beta,
        "initial": _ival(x0),
        "certificate": outcome.certificate.value,
        "enclosure": _ival(outcome.enclosure),
        "iterations": [{"k": r.k, "x": _ival(r.x), "width": r.width,
                        "fallback": r.fallback.value} for r in outcome.trace],
        "reason": outcome.reason,
    }


def render_outcome(outcome, x0, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(outcome_to_json(outcome, x0), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "lo", "hi", "width", "fallback"])
        for r in outcome.trace:
            w.writerow([r.k, repr(r.x.lo), repr(r.x.hi), repr(r.width), r.fallback.value])
        return buf.getvalue()
    if fmt == "md":
        lines = [f"method: {outcome.method.label}; certificate: {outcome.certificate.value}",
                 "", "| k | X(k) | width | fallback |", "|---|---|---|---|"]
        lines += [f"| {r.k} | {r.x} | {r.width:.2e} | {r.fallback.value} |"
                  for r in outcome.trace]
        return "\n".join(lines) + "\n"
    cert = outcome.certificate
    lines = [f"method:      {outcome.method.label}",
             f"certificate: {cert.value}" + (" (no root)" if cert is Certificate.NO_ROOT else "")]
    if outcome.enclosure is not None:
        lines.append(f"enclosure:   {outcome.enclosure}")
        lines.append(f"width:       {outcome.enclosure.width():.3g}")
    lines.append(f"iterations:  {outcome.iterations}")
    if outcome.reason:
        lines.append(f"reason:      {outcome.reason}")
    for r in outcome.trace:
        flag = "" if r.fallback.value == "none" else f"  [{r.fallback.value}]"
        lines.append(f"  k={r.k:<3d} {r.x}  w={r.width:.3g}{flag}")
    return "\n".join(lines) + "\n"


def _write(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_solve(args) -> int:
    spec = _method_spec(args.method, args.beta, args.tol, args.max_iter)
    try:
        x0 = parse_interval(args.interval)
    except (IntervalError, ValueError) as exc:
        raise UsageError(f"bad --interval: {exc}") from exc
    outcome = iterate(args.expr, x0, spec)
    _write(render_outcome(outcome, x0, args.format), args.out)
    return EXIT_CODES[outcome.certificate]


def cmd_bench(args) -> int:
    if args.suite != "paper":
        raise UsageError(f"unknown suite {args.suite!r} (available: paper)")
    names = METHOD_NAMES if args.methods is None else [
        n.strip() for n in args.methods.split(",") if n.strip()]
    unknown = [n for n in names if n not in METHOD_NAMES]
    if unknown or not names:
        raise UsageError(f"bad --methods {args.methods!r}; choose from {','.join(METHOD_NAMES)}")
    if args.beta is not None and "king" not in names:
        raise UsageError("--beta is only valid when king is among --methods")
    methods = [_method_spec(n, args.beta if n == "king" else None, args.tol, args.max_iter)
               for n in dict.fromkeys(names)]
    report = run_suite(methods, args.tol, args.max_iter, workers=args.workers)
    fmt = "md" if args.format == "text" else args.format
    _write(emit_report(report, fmt), args.out)

    ran = {(r.function_id, spec_key(r.spec)) for r in report.rows}
    ref = load_reference()
    ref.cells = {pair: seq for pair, seq in ref.cells.items() if pair in ran}
    comparison = compare_reference(report, ref)
    for msg in comparison.failures():
        print(f"reference mismatch: {msg}", file=sys.stderr)
    return EXIT_OK if comparison.passed else EXIT_MISMATCH


def cmd_parse(args) -> int:
    e = parse(args.expr)
    d = derive(e)
    print(f"f(x)  = {render(e)}")
    print(f"f'(x) = {render(d)}")
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "bench": cmd_bench, "parse": cmd_parse}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, InputError, ParseError, NonDifferentiable, OSError) as exc:
        print(f"ivroots {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
