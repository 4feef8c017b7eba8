"""Command-line surface: identity verification, value tables, special-value
extraction, and matrix export.

Exit codes: 0 = pass, 1 = verification/extraction failure, 2 = usage error.
Output is deterministic: identical invocations produce byte-identical bytes
(fixed float formats, fixed row order).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import divmatrix, operators, registry, series, specfun
from .errors import OpzetaError
from .exactnum import bernoulli_number, euler_number, pipoly_eval
from .operators import Expression, apply_recip_gamma_op, parity_anomaly, taylor_flow

_EXACT_K = 12


@dataclass
class VerificationReport:
    identity: str
    mode: str
    tolerance: float
    max_abs_deviation: float
    pole_events: list[str] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)
    passed: bool = False
    expected_event: Optional[str] = None

    def finalize(self) -> "VerificationReport":
        events_ok = self.expected_event is None or self.expected_event in self.pole_events
        self.passed = self.max_abs_deviation <= self.tolerance and events_ok
        return self


def _linspace(a: float, b: float, steps: int) -> list[float]:
    if steps == 1:
        return [a]
    return [a + (b - a) * i / (steps - 1) for i in range(steps)]


def _row(identity: str, x, lhs, rhs, deviation: float, method: str) -> dict:
    return {"id": identity, "x": x, "lhs": lhs, "rhs": rhs, "deviation": deviation, "method": method}


def _clausen_m(trig: str, shift: int) -> int:
    return (shift + 1) // 2 if trig == "sin" else shift // 2


def _verify_exact(rec: registry.IdentityRecord, tol: float) -> VerificationReport:
    """Exact-equality verification in Q[pi]; deviation is 0.0 on equality."""
    rep = VerificationReport(rec.id, "exact", tol, math.inf, expected_event=rec.expected_event)
    if rec.op is None or rec.trig is None:
        raise ValueError(f"{rec.id}: exact mode needs an operator-on-trig left side")

    if rec.gamma_shift is not None:
        # route A: closed form of the series, then the exact 1/Gamma action
        m = _clausen_m(rec.trig, int(rec.op.shift))
        closed = specfun.clausen_closed_form(rec.trig, m)
        anomaly = parity_anomaly(closed, "odd" if rec.trig == "sin" else "even")
        route_a = apply_recip_gamma_op(rec.gamma_shift, Expression.from_poly(closed)).poly
        if anomaly is not None and int(rec.gamma_shift) + anomaly.degree <= 0:
            rep.pole_events.append("annihilated_constant")
        # route B: term-by-term flow first, 1/Gamma after
        flow = taylor_flow(rec.op, rec.trig, _EXACT_K)
        if flow.anomaly_missing:
            rep.pole_events.append("anomaly_missing")
        route_b = apply_recip_gamma_op(rec.gamma_shift, Expression.from_poly(flow.poly)).poly
        target = rec.rhs_poly
        equal = route_a == route_b == target
        rep.rows.append(_row(rec.id, None, repr(route_a), repr(target), 0.0 if equal else math.inf, "exact"))
        rep.rows.append(_row(rec.id, None, repr(route_b), repr(target), 0.0 if equal else math.inf, "exact"))
        rep.max_abs_deviation = 0.0 if equal else math.inf
        return rep.finalize()

    flow = taylor_flow(rec.op, rec.trig, _EXACT_K)
    if flow.anomaly_missing:
        rep.pole_events.append("anomaly_missing")
    if rec.anomaly_parity != "none":
        # flow + the parity-violating term must rebuild the closed form exactly
        target = rec.exact_rhs(max_degree=2 * _EXACT_K + 2)
        anomaly = parity_anomaly(target, rec.anomaly_parity)
        lhs_poly = flow.poly + anomaly if anomaly is not None else flow.poly
        equal = lhs_poly == target
    else:
        # singularity-removed identity: flow equals the regrouped Taylor series
        gen = rec.exact_rhs(max_degree=2 * _EXACT_K + 2)
        if gen is None:
            raise ValueError(f"{rec.id}: no exact right side available for exact mode")
        d = flow.poly.degree
        target = gen.truncate(d)
        equal = flow.poly == target and not flow.anomaly_missing
        lhs_poly = flow.poly
    rep.rows.append(_row(rec.id, None, repr(lhs_poly), repr(target), 0.0 if equal else math.inf, "exact"))
    rep.max_abs_deviation = 0.0 if equal else math.inf
    return rep.finalize()


def _verify_grid(rec: registry.IdentityRecord, grid: tuple[float, float, int], tol: float) -> VerificationReport:
    mode = rec.verify_mode
    rep = VerificationReport(rec.id, mode, tol, 0.0)
    xs = _linspace(*grid)
    closed = rec.closed_form()
    for x in xs:
        if mode == "sum":
            sv = series.partial_sum_accelerated(rec.series, x, tol * 1e-3)
            lhs = float(sv.value)
            method = sv.method
        elif mode == "abel":
            sv = series.abel_extrapolate(rec.series, x)
            lhs = float(sv.value)
            method = sv.method
        elif mode == "geometric":
            sv = series.geometric_extrapolate(x)
            lhs = sv.value
            method = sv.method
        else:
            raise ValueError(f"unknown verify mode {mode!r}")

        if mode == "geometric":
            rhs = series.geometric_abel(x)
            deviation = abs(lhs - rhs)
            if abs(rhs.real + 0.5) > 1e-8 or abs(lhs.real + 0.5) > 1e-8:
                deviation = math.inf
            lhs_out, rhs_out = repr(lhs), repr(rhs)
        else:
            if rec.rhs_poly is not None:
                rhs = pipoly_eval(rec.rhs_poly, x)
            else:
                rhs = closed(x)
            deviation = abs(lhs - rhs)
            lhs_out, rhs_out = lhs, rhs
        rep.rows.append(_row(rec.id, x, lhs_out, rhs_out, deviation, method))
        rep.max_abs_deviation = max(rep.max_abs_deviation, deviation)

    if rec.extra_check == "geometric_real_part":
        worst = max(abs(series.geometric_abel(x).real + 0.5) for x in xs)
        rep.rows.append(_row(rec.id, None, "Re(geometric)", "-1/2", worst, "closed_form"))
        if worst > 1e-8:
            rep.max_abs_deviation = math.inf
    return rep.finalize()


def _print_report(rep: VerificationReport, fmt: str, out) -> None:
    if fmt == "json":
        payload = {
            "id": rep.identity,
            "mode": rep.mode,
            "tolerance": rep.tolerance,
            "max_abs_deviation": rep.max_abs_deviation,
            "pass": rep.passed,
            "pole_events": rep.pole_events,
            "rows": rep.rows,
        }
        out.write(json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n")
        return
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["id", "x", "lhs", "rhs", "deviation", "method"])
        for r in rep.rows:
            writer.writerow([r["id"], r["x"], r["lhs"], r["rhs"], f"{r['deviation']:.6e}", r["method"]])
        return
    out.write(f"identity {rep.identity} [{rep.mode}] tol={rep.tolerance:g}\n")
    for r in rep.rows:
        x = "-" if r["x"] is None else f"{r['x']:.6f}"
        lhs = r["lhs"] if isinstance(r["lhs"], str) else f"{r['lhs']:+.12e}"
        rhs = r["rhs"] if isinstance(r["rhs"], str) else f"{r['rhs']:+.12e}"
        out.write(f"  x={x}  lhs={lhs}  rhs={rhs}  dev={r['deviation']:.3e}  [{r['method']}]\n")
    if rep.pole_events:
        out.write("  events: " + ", ".join(rep.pole_events) + "\n")
    out.write(f"  {'PASS' if rep.passed else 'FAIL'}: max deviation {rep.max_abs_deviation:.3e}\n")


def _cmd_verify(args, out) -> int:
    try:
        rec = registry.get_identity(args.id)
    except KeyError as exc:
        print(exc, file=sys.stderr)
        return 2
    grid = rec.default_grid if args.grid is None else args.grid
    a, b, steps = grid
    if steps < 1 or not (rec.domain.contains(a) and rec.domain.contains(b)):
        print(f"grid [{a}, {b}] outside the stated domain {rec.domain} of {rec.id}", file=sys.stderr)
        return 2
    tol = rec.default_tol if args.tol is None else args.tol
    try:
        if args.exact or rec.verify_mode == "exact":
            rep = _verify_exact(rec, tol)
        else:
            rep = _verify_grid(rec, grid, tol)
    except OpzetaError as exc:
        print(f"verification error: {exc}", file=sys.stderr)
        return 1
    _print_report(rep, args.format, out)
    return 0 if rep.passed else 1


def _exact_zeta_row(k: int):
    if k == 1:
        return None, "pole", None
    if k <= 0:
        q = Fraction(-1, 2) if k == 0 else specfun.zeta_neg_int(-k)
        return float(q), "exact", str(q)
    if k % 2 == 0:
        p = specfun.zeta_even_pi_form(k)
        return float(p.evaluate(math.pi)), "exact", repr(p)
    return None, None, None


def _exact_beta_row(k: int):
    if k <= 0:
        q = specfun.beta_nonpos_int(-k)
        return float(q), "exact", str(q)
    if k % 2 == 1:
        p = specfun.beta_odd_pi_form(k)
        return float(p.evaluate(math.pi)), "exact", repr(p)
    return None, None, None


def _cmd_values(args, out) -> int:
    rows = []
    for tok in args.args:
        try:
            v = float(tok)
        except ValueError:
            print(f"bad numeric argument {tok!r}", file=sys.stderr)
            return 2
        is_int = abs(v - round(v)) < 1e-12
        k = int(round(v))
        if args.kind in ("bernoulli", "euler"):
            if not is_int or k < 0:
                print(f"{args.kind} needs a nonnegative integer, got {tok!r}", file=sys.stderr)
                return 2
            exact = bernoulli_number(k) if args.kind == "bernoulli" else Fraction(euler_number(k))
            rows.append({"argument": tok, "value": float(exact), "exact": str(exact), "method": "exact", "abs_error": 0.0})
            continue
        if args.kind == "zeta":
            if is_int:
                val, method, exact = _exact_zeta_row(k)
                if method == "pole":
                    rows.append({"argument": tok, "value": None, "exact": "pole at s=1", "method": "pole", "abs_error": None})
                    continue
                if method == "exact":
                    rows.append({"argument": tok, "value": val, "exact": exact, "method": "exact", "abs_error": 0.0})
                    continue
            r = specfun.zeta_em(v)
            rows.append({"argument": tok, "value": r.value.real, "exact": "", "method": "euler_maclaurin", "abs_error": r.abs_error_estimate})
            continue
        # beta
        if is_int:
            val, method, exact = _exact_beta_row(k)
            if method == "exact":
                rows.append({"argument": tok, "value": val, "exact": exact, "method": "exact", "abs_error": 0.0})
                continue
        r = specfun.dirichlet_beta(v)
        rows.append({"argument": tok, "value": r.value.real, "exact": "", "method": "hurwitz_difference", "abs_error": r.abs_error_estimate})

    if args.format == "json":
        out.write(json.dumps({"kind": args.kind, "rows": rows}, indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["argument", "value", "exact", "method", "abs_error"])
        for r in rows:
            writer.writerow([r["argument"], r["value"], r["exact"], r["method"], r["abs_error"]])
    else:
        out.write(f"{args.kind} values\n")
        for r in rows:
            val = "-" if r["value"] is None else f"{r['value']:.12g}"
            err = "-" if r["abs_error"] is None else f"{r['abs_error']:.2e}"
            exact = f"  = {r['exact']}" if r["exact"] else ""
            out.write(f"  {r['argument']:>8}  {val:>22}{exact}  [{r['method']}, err<={err}]\n")
    return 0


def _cmd_extract(args, out) -> int:
    try:
        rec = registry.get_identity(args.id)
    except KeyError as exc:
        print(exc, file=sys.stderr)
        return 2
    if not rec.extract:
        print(f"identity {args.id!r} has no exact polynomial right side to match against", file=sys.stderr)
        return 2
    values = operators.extract_special_values(args.id, terms=args.terms)
    rows = [
        {"argument": v.argument, "value": str(v.value) if isinstance(v.value, Fraction) else repr(v.value), "matched": v.matched}
        for v in values
    ]
    if args.format == "json":
        out.write(json.dumps({"id": args.id, "rows": rows}, indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["argument", "value", "matched"])
        for r in rows:
            writer.writerow([r["argument"], r["value"], r["matched"]])
    else:
        kind = rec.op.kind if rec.op else "?"
        out.write(f"extraction from {args.id} (operator kind: {kind})\n")
        for r in rows:
            mark = "matched" if r["matched"] else "MISMATCH"
            out.write(f"  {kind}({r['argument']}) = {r['value']}  [{mark}]\n")
    return 0 if all(r["matched"] for r in rows) else 1


def _cmd_matrix(args, out) -> int:
    if args.size < 1:
        print("--size must be >= 1", file=sys.stderr)
        return 2
    if args.apply is not None and not 1 <= args.apply <= args.size:
        print("--apply index must lie in [1, size]", file=sys.stderr)
        return 2
    if args.check is not None and not 1 <= args.check <= args.size:
        print("--check index must lie in [1, size]", file=sys.stderr)
        return 2
    A = divmatrix.build_matrix(args.size)
    if args.apply is not None:
        v = [Fraction(0)] * args.size
        v[args.apply - 1] = Fraction(1)
        result = divmatrix.matrix_apply(A, v)
        for m, q in enumerate(result, start=1):
            out.write(f"{m} {q.numerator}/{q.denominator}\n")
        return 0
    if args.check is not None:
        report = divmatrix.consistency_check(args.check, args.size)
        ok = report.max_abs_deviation <= args.tol
        out.write(
            f"consistency n={args.check} size={args.size}: max deviation "
            f"{report.max_abs_deviation:.3e} ({'PASS' if ok else 'FAIL'} at tol {args.tol:g})\n"
        )
        return 0 if ok else 1
    for line in A.triplet_lines():
        out.write(line + "\n")
    return 0


def _cmd_list(args, out) -> int:
    reg = registry.load_registry()
    out.write(f"identity registry (version {registry.registry_version()})\n")
    for rec in reg.values():
        out.write(f"  {rec.id:<12} {rec.verify_mode:<9} {str(rec.domain):<16} {rec.summary}\n")
    return 0


def _grid_arg(text: str) -> tuple[float, float, int]:
    try:
        a, b, steps = text.split(":")
        return float(a), float(b), int(steps)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"grid must be a:b:steps, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="opzeta",
        description="Verify dilation-operator series identities, print special values, and export the divisibility matrix.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify one registry identity on a grid (or exactly)")
    v.add_argument("id")
    v.add_argument("--grid", type=_grid_arg, default=None, help="a:b:steps (default: registry profile)")
    v.add_argument("--tol", type=float, default=None)
    v.add_argument("--exact", action="store_true", help="exact comparison in Q[pi] where available")
    v.add_argument("--format", choices=("text", "json", "csv"), default="text")

    w = sub.add_parser("values", help="value table for zeta/beta/bernoulli/euler")
    w.add_argument("kind", choices=("zeta", "beta", "bernoulli", "euler"))
    w.add_argument("args", nargs="+")
    w.add_argument("--format", choices=("text", "json", "csv"), default="text")

    e = sub.add_parser("extract", help="solve special values by coefficient matching")
    e.add_argument("id")
    e.add_argument("--terms", type=int, default=6)
    e.add_argument("--format", choices=("text", "json", "csv"), default="text")

    m = sub.add_parser("matrix", help="divisibility matrix export / apply / consistency check")
    m.add_argument("--size", type=int, required=True)
    m.add_argument("--apply", type=int, default=None, metavar="N", help="apply to basis vector N")
    m.add_argument("--check", type=int, default=None, metavar="N", help="quadrature consistency check of column N")
    m.add_argument("--tol", type=float, default=1e-8)

    sub.add_parser("list", help="list registry identities")
    return p


_DISPATCH = {
    "verify": _cmd_verify,
    "values": _cmd_values,
    "extract": _cmd_extract,
    "matrix": _cmd_matrix,
    "list": _cmd_list,
}


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args, out)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except OpzetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
