"""Command-line surface over the bundled example problems.

Subcommands ``nr-example1``, ``mechanism``, ``spline``, ``diffusivity``
and ``duffing`` each evaluate one of the packaged fixtures (or, where a
``--csv`` flag exists, user data) and emit rows of
value / first derivative / second derivative.

Shared flags: ``--json`` for machine-readable output, ``--check`` to
compare against the embedded reference values, ``--precision`` for the
number of displayed digits.  Exit codes: 0 success, 1 validation error,
2 numerical failure (including a failed ``--check``).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import fixtures
from .core import Dual3, constant, sin, variable
from .errors import NumericalError, ValidationError
from .ode import duffing_problem, rk4dual
from .rootfind import RootConfig, mechanism_phi, nr_dual
from .spline import (
    SplineData,
    build_spline,
    diffusivity,
    eval_dual,
    find_derivative_root,
)


@dataclass(frozen=True)
class ResultRecord:
    """One output row: a labelled value with its two derivatives."""

    label: str
    value: float
    first: float
    second: float
    provenance: str

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "value": self.value,
            "first": self.first,
            "second": self.second,
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "ResultRecord":
        return cls(
            label=payload["label"],
            value=payload["value"],
            first=payload["first"],
            second=payload["second"],
            provenance=payload["provenance"],
        )


@dataclass(frozen=True)
class CheckResult:
    label: str
    field: str
    expected: float
    actual: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "field": self.field,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


def _record(label: str, d: Dual3, provenance: str) -> ResultRecord:
    return ResultRecord(label, d.f0, d.f1, d.f2, provenance)


def _check_rows(records: Sequence[ResultRecord], expected: dict,
                tol: float = fixtures.CHECK_ABS_TOL) -> List[CheckResult]:
    fields = ("value", "first", "second")
    out = []
    by_label = {r.label: r for r in records}
    for label, triple in expected.items():
        rec = by_label[label]
        for field_name, want in zip(fields, triple):
            got = getattr(rec, field_name)
            out.append(CheckResult(label, field_name, want, got,
                                   abs(got - want) <= tol))
    return out


def _relative_check(label: str, want: float, got: float,
                    rtol: float) -> CheckResult:
    return CheckResult(label, "value", want, got,
                       abs(got - want) <= rtol * abs(want))


# -- CSV ingestion -------------------------------------------------------

def read_xy_csv(path: str) -> SplineData:
    """Two numeric columns, comma or whitespace separated, optionally one
    header line.  Rows must already be sorted by strictly increasing x."""
    rows: List[Tuple[int, float, float]] = []
    try:
        handle = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    with handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            parts = line.replace(",", " ").split()
            if len(parts) != 2:
                raise ValidationError(
                    f"{path}:{lineno}: expected two columns, got {len(parts)}"
                )
            try:
                x, y = float(parts[0]), float(parts[1])
            except ValueError:
                if not rows and lineno == 1:
                    continue  # header line
                raise ValidationError(
                    f"{path}:{lineno}: cannot parse numbers from {line!r}"
                ) from None
            rows.append((lineno, x, y))
    if len(rows) < 2:
        raise ValidationError(f"{path}: need at least 2 data rows")
    for (_, x_prev, _), (lineno, x_cur, _) in zip(rows, rows[1:]):
        if x_cur <= x_prev:
            raise ValidationError(
                f"{path}:{lineno}: x values must be strictly increasing "
                "(sort the rows)"
            )
    return SplineData(np.array([r[1] for r in rows]),
                      np.array([r[2] for r in rows]))


# -- subcommands ---------------------------------------------------------

def _cmd_nr_example1(args) -> Tuple[List[ResultRecord], List[CheckResult]]:
    cfg = RootConfig(u0=fixtures.NR_EXAMPLE1_U0,
                     max_iters=fixtures.NR_EXAMPLE1_ITERS, tol=0.0)
    equation = fixtures.nr_example1_equation
    xd = variable(fixtures.NR_EXAMPLE1_X0)
    u = nr_dual(cfg, equation, xd)
    g1 = sin(u) + xd
    g2 = nr_dual(cfg, equation, sin(xd) + xd * xd)
    prov = "nr-example1"
    records = [_record("u", u, prov), _record("g1", g1, prov),
               _record("g2", g2, prov)]
    checks = _check_rows(records, fixtures.NR_EXAMPLE1_EXPECTED) \
        if args.check else []
    return records, checks


def _cmd_mechanism(args) -> Tuple[List[ResultRecord], List[CheckResult]]:
    params = fixtures.MECHANISM_PARAMS
    cfg = RootConfig(u0=fixtures.MECHANISM_PHI0, max_iters=100, tol=0.0)
    xd = variable(args.x0)
    prov = "mechanism"
    if args.fn == "identity":
        phi = mechanism_phi(params, xd, cfg)
        residual = params.loop_closure(constant(phi.f0),
                                       constant(args.x0)).f0
        records = [_record("phi(x0)", phi, prov),
                   ResultRecord("residual", residual, 0.0, 0.0, prov)]
        checks = []
        if args.check:
            checks = [CheckResult("residual", "value", 0.0, residual,
                                  abs(residual) <= 1e-9)]
        return records, checks
    phi = mechanism_phi(params, xd, cfg)
    f_of_phi = 2.0 * sin(phi) * sin(phi)
    phi_of_f = mechanism_phi(params, 2.0 * sin(xd) * sin(xd), cfg)
    records = [_record("f(phi(x0))", f_of_phi, prov),
               _record("phi(f(x0))", phi_of_f, prov)]
    checks = _check_rows(records, fixtures.MECHANISM_EXPECTED) \
        if args.check else []
    return records, checks


def _cmd_spline(args) -> Tuple[List[ResultRecord], List[CheckResult]]:
    data = read_xy_csv(args.csv) if args.csv else fixtures.ln_sample_data()
    model = build_spline(data)
    xd = variable(args.at)
    y = eval_dual(model, xd)
    f = xd * sin(y) * sin(y)
    g = eval_dual(model, xd * sin(xd) * sin(xd))
    prov = "spline" if args.csv else "spline-builtin"
    records = [_record("y", y, prov), _record("f", f, prov),
               _record("g", g, prov)]
    checks = _check_rows(records, fixtures.SPLINE_EXPECTED) \
        if args.check else []
    return records, checks


def _cmd_diffusivity(args) -> Tuple[List[ResultRecord], List[CheckResult]]:
    data = read_xy_csv(args.csv) if args.csv else fixtures.radiometry_fixture()
    model = build_spline(data)
    lo, hi = float(data.x[0]), float(data.x[-1])
    start = args.x0
    if not (lo <= start <= hi):
        # The documented default start (10) assumes data whose frequency
        # axis contains it; otherwise start from the strongest interior
        # sample.
        if len(data) > 2:
            start = float(data.x[int(np.argmax(data.y[1:-1])) + 1])
        else:
            start = 0.5 * (lo + hi)
    peak = find_derivative_root(model, start,
                                iters=fixtures.DIFFUSIVITY_ITERS)
    alpha = diffusivity(args.thickness, peak)
    at_peak = eval_dual(model, variable(peak))
    prov = "diffusivity" if args.csv else "diffusivity-builtin"
    records = [
        ResultRecord("f1", peak, at_peak.f1, at_peak.f2, prov),
        ResultRecord("alpha_s", alpha, 0.0, 0.0, prov),
    ]
    checks = []
    if args.check:
        checks = [
            _relative_check("f1", fixtures.radiometry_peak_frequency(),
                            peak, fixtures.DIFFUSIVITY_RTOL),
            _relative_check("alpha_s", fixtures.TARGET_DIFFUSIVITY,
                            alpha, fixtures.DIFFUSIVITY_RTOL),
        ]
    return records, checks


def _cmd_duffing(args) -> Tuple[List[ResultRecord], List[CheckResult]]:
    problem = duffing_problem(fixtures.DUFFING_STEPS)
    td = variable(args.t)
    f = rk4dual(problem, td)
    f_of_g = rk4dual(problem, sin(td))
    g_of_f = sin(rk4dual(problem, td))
    prov = "duffing"
    records = [_record("f(t)", f, prov), _record("f(g(t))", f_of_g, prov),
               _record("g(f(t))", g_of_f, prov)]
    checks = _check_rows(records, fixtures.DUFFING_EXPECTED) \
        if args.check else []
    return records, checks


# -- output --------------------------------------------------------------

def _emit(records: List[ResultRecord], checks: List[CheckResult],
          args) -> None:
    if args.json:
        payload = {
            "results": [r.to_dict() for r in records],
            "status": "ok" if all(c.passed for c in checks) else "check-failed",
        }
        if args.check:
            payload["checks"] = [c.to_dict() for c in checks]
        print(json.dumps(payload, indent=2))
        return
    digits = args.precision
    width = max(len(r.label) for r in records)
    for r in records:
        print(f"{r.label:<{width}}  {r.value:+.{digits}f}  "
              f"{r.first:+.{digits}f}  {r.second:+.{digits}f}")
    for c in checks:
        verdict = "PASS" if c.passed else "FAIL"
        print(f"check {c.label}.{c.field}: {c.actual:+.{digits}f} "
              f"vs {c.expected:+.{digits}f}  {verdict}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON at full precision")
    common.add_argument("--check", action="store_true",
                        help="compare against the embedded reference values")
    common.add_argument("--precision", type=int, default=4, metavar="DIGITS",
                        help="displayed digits in table output (default 4)")

    parser = argparse.ArgumentParser(
        prog="dualnum",
        description="Exact first/second derivatives through implicit "
                    "functions, splines and ODE solutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nr-example1", parents=[common],
                       help="implicit-function derivatives for the bundled "
                            "trigonometric equation")
    p.set_defaults(handler=_cmd_nr_example1)

    p = sub.add_parser("mechanism", parents=[common],
                       help="RRRCR output-angle derivatives")
    p.add_argument("--x0", type=float, default=fixtures.MECHANISM_X0,
                   help="input angle (default %(default)s)")
    p.add_argument("--fn", choices=("2sin2", "identity"), default="2sin2",
                   help="composition function: 2 sin^2 x or the identity")
    p.set_defaults(handler=_cmd_mechanism)

    p = sub.add_parser("spline", parents=[common],
                       help="spline value and composition derivatives")
    p.add_argument("--csv", metavar="PATH", default=None,
                   help="two-column (x, y) data; defaults to the bundled "
                        "log-curve samples")
    p.add_argument("--at", type=float, default=fixtures.SPLINE_AT,
                   help="evaluation point (default %(default)s)")
    p.set_defaults(handler=_cmd_spline)

    p = sub.add_parser("diffusivity", parents=[common],
                       help="thermal diffusivity from an amplitude-vs-"
                            "frequency curve")
    p.add_argument("--csv", metavar="PATH", default=None,
                   help="two-column (frequency, amplitude) data; defaults "
                        "to the bundled synthetic curve")
    p.add_argument("--thickness", type=float,
                   default=fixtures.SAMPLE_THICKNESS,
                   help="sample thickness in metres (default %(default)s)")
    p.add_argument("--x0", type=float, default=fixtures.DIFFUSIVITY_X0,
                   help="start frequency for the peak search; falls back "
                        "to the strongest sample when outside the data "
                        "range (default %(default)s)")
    p.set_defaults(handler=_cmd_diffusivity)

    p = sub.add_parser("duffing", parents=[common],
                       help="derivatives of compositions with the Duffing "
                            "solution (g = sin)")
    p.add_argument("--t", type=float, default=fixtures.DUFFING_T,
                   help="evaluation time (default %(default)s)")
    p.set_defaults(handler=_cmd_duffing)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; usage errors are validation.
        return 1 if exc.code == 2 else int(exc.code or 0)
    if not 1 <= args.precision <= 17:
        print("error: --precision must be between 1 and 17", file=sys.stderr)
        return 1
    try:
        records, checks = args.handler(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NumericalError, ZeroDivisionError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    _emit(records, checks, args)
    return 0 if all(c.passed for c in checks) else 2


if __name__ == "__main__":
    sys.exit(main())
