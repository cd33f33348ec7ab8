"""Command-line front end.

    glasser eval     --a A --b B [--rep TAG|all]
    glasser verify   --a A --b B [--tol T]
    glasser grid     [--a-list ...] [--b-list ...] [--out PATH]
    glasser gr-check

``b`` (and ``a``) accept decimals, fractions such as ``3/2`` and the token
``sqrt3``.  Exit codes: 0 success, 1 failed check or no convergence,
2 usage error, 3 parameter outside the domain, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .errors import DomainError
from .family import SQRT3, Params, Status
from .quadrature import ToleranceSpec
from .verify import (
    DEFAULT_A_GRID,
    DEFAULT_B_GRID,
    DEFAULT_TOLERANCE,
    REP_IDS,
    IdentityReport,
    applicable,
    audit_grid,
    evaluate_all,
    evaluate_rep,
    gr_check,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

TOL_ENV = "GLASSER_TOL"
PAIR_HEADER = ["a", "b", "rep_i", "rep_j", "delta", "verdict"]
EVAL_HEADER = ["a", "b", "rep_id", "value", "status", "error_estimate"]


def parse_real(text: str) -> float:
    """Decimal, ``p/q`` fraction or ``sqrt3``."""
    t = text.strip().lower()
    if t in ("sqrt3", "sqrt(3)"):
        return SQRT3
    try:
        if "/" in t:
            return float(Fraction(t))
        return float(t)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def parse_list(text: str) -> list[float]:
    return [parse_real(part) for part in text.split(",") if part.strip()]


def positive_float(text: str) -> float:
    v = parse_real(text)
    if not v > 0.0 or not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be a positive number: {text!r}")
    return v


def fmt(x: float | None) -> str:
    """17 significant digits: enough to round-trip any binary64."""
    return "" if x is None else format(x, ".17g")


# Rendering ------------------------------------------------------------------


def _pair_rows(report: IdentityReport) -> list[list[str]]:
    a, b = report.params.a, report.params.b
    return [
        [fmt(a), fmt(b), pr.rep_i, pr.rep_j, fmt(pr.delta), pr.verdict.value]
        for pr in report.pairwise
    ]


def _csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def render_reports(reports: list[IdentityReport], fmt_name: str, *, single: bool = False) -> str:
    if fmt_name == "json":
        data = [r.to_dict() for r in reports]
        return _json(data[0] if single else data)
    rows = [row for r in reports for row in _pair_rows(r)]
    if fmt_name == "csv":
        return _csv(PAIR_HEADER, rows)
    out = []
    for r in reports:
        out.append(f"f(a, b) at a = {fmt(r.params.a)}, b = {fmt(r.params.b)}  (tolerance {r.tolerance:g})\n")
        out.append(_table(
            ["rep_id", "value", "status", "error_estimate"],
            [[e.rep_id, fmt(e.value), e.status.value, f"{e.error_estimate:.2e}"] for e in r.entries],
        ))
        out.append(_table(PAIR_HEADER[2:], [row[2:] for row in _pair_rows(r)]))
        for e in r.entries:
            if e.detail:
                out.append(f"note: {e.rep_id}: {e.detail}\n")
        if r.unexpected_refutations:
            bad = ", ".join(f"{p.rep_i}/{p.rep_j}" for p in r.unexpected_refutations)
            out.append(f"unexpected refutations: {bad}\n")
        out.append("\n")
    return "".join(out)


# Commands -------------------------------------------------------------------


def _quad_tol(args) -> ToleranceSpec:
    return ToleranceSpec(abs_tol=args.quad_tol, max_level=args.max_level)


def cmd_eval(args) -> tuple[str, int]:
    p = Params(args.a, args.b)
    if args.rep == "all":
        tags = [r.rep_id for r in applicable(p)]
    else:
        tags = [args.rep]
    values = [evaluate_rep(t, p, _quad_tol(args)) for t in tags]
    code = EXIT_FAIL if any(v.status is Status.NO_CONVERGENCE for v in values) else EXIT_OK
    if args.format == "json":
        text = _json([
            {
                "a": p.a,
                "b": p.b,
                "rep_id": v.rep_id,
                "value": v.value,
                "status": v.status.value,
                "error_estimate": v.error_estimate,
                "applicability": v.applicability,
                "conjectural": v.conjectural,
                "detail": v.detail,
            }
            for v in values
        ])
    else:
        rows = [
            [fmt(p.a), fmt(p.b), v.rep_id, fmt(v.value), v.status.value, fmt(v.error_estimate)]
            for v in values
        ]
        text = _csv(EVAL_HEADER, rows) if args.format == "csv" else _table(EVAL_HEADER, rows)
    return text, code


def cmd_verify(args) -> tuple[str, int]:
    report = evaluate_all(Params(args.a, args.b), args.tol, _quad_tol(args))
    text = render_reports([report], args.format, single=True)
    return text, EXIT_OK if report.passed else EXIT_FAIL


def cmd_grid(args) -> tuple[str, int]:
    if not args.a_list or not args.b_list:
        raise DomainError("grid needs nonempty a and b lists")
    reports = audit_grid(args.a_list, args.b_list, args.tol, _quad_tol(args))
    text = render_reports(reports, args.format)
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    if args.out is None:
        return text, code
    path = Path(args.out)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror or exc}") from exc
    return "", code


def cmd_gr_check(args) -> tuple[str, int]:
    res = gr_check(args.tol, args.tol_refute, _quad_tol(args))
    if args.format == "json":
        text = _json(res.to_dict())
    else:
        text = (
            f"closed form  {'CONFIRMED' if res.arias_confirmed else 'REFUTED'}: "
            f"|{fmt(res.arias)} - {fmt(res.reference)}| = {fmt(res.arias_delta)} "
            f"(tolerance {res.tol_confirm:g})\n"
            f"table value  {'REFUTED' if res.gr_refuted else 'NOT REFUTED'}: "
            f"|{fmt(res.gr_claimed)} - {fmt(res.reference)}| = {fmt(res.gap)} "
            f"(threshold {res.tol_refute:g})\n"
        )
    return text, EXIT_OK if res.passed else EXIT_FAIL


class _IOFailure(Exception):
    pass


# Parser ---------------------------------------------------------------------


def _default_tol(parser: argparse.ArgumentParser) -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOLERANCE
    try:
        return positive_float(raw)
    except argparse.ArgumentTypeError:
        parser.error(f"{TOL_ENV}={raw!r} is not a positive number")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glasser",
        description="Evaluate and audit representations of f(a, b).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=positive_float, default=None,
                        help=f"verdict tolerance (default {DEFAULT_TOLERANCE:g}, env {TOL_ENV})")
    common.add_argument("--quad-tol", type=positive_float, default=1e-12,
                        help="absolute quadrature tolerance (default 1e-12)")
    common.add_argument("--max-level", type=int, default=12,
                        help="maximum tanh-sinh level (default 12)")
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")

    point = argparse.ArgumentParser(add_help=False)
    point.add_argument("--a", type=parse_real, default=1.5, help="exponent a (> 1/2)")
    point.add_argument("--b", type=parse_real, default=SQRT3, help="b > 0; 'sqrt3' allowed")

    p = sub.add_parser("eval", parents=[common, point], help="evaluate representations")
    p.add_argument("--rep", choices=REP_IDS + ("all",), default="all")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common, point], help="audit all representations at one point")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("grid", parents=[common], help="audit a grid of (a, b) points")
    p.add_argument("--a-list", type=parse_list, default=list(DEFAULT_A_GRID))
    p.add_argument("--b-list", type=parse_list, default=list(DEFAULT_B_GRID))
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("gr-check", parents=[common], help="closed form vs tabulated value at (3/2, sqrt3)")
    p.add_argument("--tol-refute", type=positive_float, default=1e-3)
    p.set_defaults(func=cmd_gr_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol is None:
        args.tol = _default_tol(parser)
    if args.max_level < 3:
        parser.error("--max-level must be at least 3")
    try:
        text, code = args.func(args)
    except DomainError as exc:
        print(f"glasser: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except _IOFailure as exc:
        print(f"glasser: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
