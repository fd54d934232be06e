"""Command-line surface: point evaluation, grid/figure CSV emission,
identity-verification suites, and the full-line integral checks.

Exit codes: 0 success, 1 failed verification, 2 usage/domain error,
3 numerical non-convergence, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .core import NearTrigError
from .curves import FN_IDS, _evaluator, figure_curves, grid_curve, write_curve
from .gaussian import lorentz_power, lorentz_power_integral
from .ntf import nearly_cos
from .transforms import QuadratureSpec, integrate_improper
from .verify import SUITES, run_suite

_OSC_QUAD = QuadratureSpec(abs_tol=1e-8, rel_tol=1e-6, tail_map="oscillatory")


def _fn_params(args) -> dict:
    params = {}
    if args.fn != "fel_gain":
        if args.m is None:
            raise ValueError(f"{args.fn} requires --m")
        params["m"] = args.m
    if args.fn == "cos_m_deriv":
        params["k"] = args.k
    if args.fn == "os":
        if args.nu is None:
            raise ValueError("os requires --nu")
        params["nu"] = args.nu
    return params


def _cmd_eval(args) -> int:
    params = _fn_params(args)
    value = _evaluator(args.fn, params)(args.x)
    print(f"{value:.15g}")
    return 0


def _cmd_grid(args) -> int:
    params = _fn_params(args)
    curve = grid_curve(args.fn, params, getattr(args, "from"), args.to, args.n)
    try:
        write_curve(curve, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 4
    print(f"wrote {args.out} ({len(curve.grid)} rows)")
    return 0


def _cmd_figure(args) -> int:
    curves = figure_curves(args.figure)
    try:
        os.makedirs(args.outdir, exist_ok=True)
        paths = []
        for curve in curves:
            path = os.path.join(args.outdir, f"{curve.label}.csv")
            write_curve(curve, path)
            paths.append(path)
    except OSError as exc:
        print(f"error: cannot write figure CSVs: {exc}", file=sys.stderr)
        return 4
    for p in paths:
        print(f"wrote {p}")
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite)
    if args.json:
        payload = {
            "suite": report.suite,
            "checks": [
                {"name": c.name, "max_error": c.max_error,
                 "tolerance": c.tolerance, "pass": c.passed}
                for c in report.checks
            ],
            "overall_pass": report.overall_pass,
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for c in report.checks:
            mark = "PASS" if c.passed else "FAIL"
            print(f"{mark} {c.name}: max_error={c.max_error:.3e} tolerance={c.tolerance:g}")
        print(f"overall: {'PASS' if report.overall_pass else 'FAIL'}")
    return 0 if report.overall_pass else 1


def _cmd_integral(args) -> int:
    if args.fn == "cos":
        if args.m is None or not args.m > 0:
            raise ValueError("integral --fn cos requires --m > 0")
        value = integrate_improper(lambda x: nearly_cos(args.m, x), _OSC_QUAD)
        reference = args.m * math.pi
        print(f"integral = {value:.12g}")
        print(f"m*pi     = {reference:.12g}")
        print(f"rel diff = {abs(value - reference) / reference:.3e}")
    else:
        if args.m is None or args.nu is None:
            raise ValueError("integral --fn os requires --m and --nu")
        value = integrate_improper(lambda x: lorentz_power(args.m, args.nu, x), _OSC_QUAD)
        reference = lorentz_power_integral(args.m, args.nu)
        print(f"integral    = {value:.12g}")
        print(f"closed form = {reference:.12g}")
        print(f"rel diff    = {abs(value - reference) / reference:.3e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="neartrig",
        description="Evaluate, tabulate and verify the nearly-trigonometric function family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_fn_args(p, with_point: bool):
        p.add_argument("fn", choices=FN_IDS, help="function to evaluate")
        p.add_argument("--m", type=float, default=None, help="family order (m > -1)")
        p.add_argument("--k", type=int, default=1, help="derivative order (cos_m_deriv)")
        p.add_argument("--nu", type=float, default=None, help="Lorentzian power (os)")
        if with_point:
            p.add_argument("--x", type=float, required=True)

    p_eval = sub.add_parser("eval", help="print one value with 15 significant digits")
    add_fn_args(p_eval, with_point=True)
    p_eval.set_defaults(func=_cmd_eval)

    p_grid = sub.add_parser("grid", help="write a sampled curve as CSV")
    add_fn_args(p_grid, with_point=False)
    p_grid.add_argument("--from", dest="from", type=float, required=True)
    p_grid.add_argument("--to", type=float, required=True)
    p_grid.add_argument("--n", type=int, required=True)
    p_grid.add_argument("--out", required=True)
    p_grid.set_defaults(func=_cmd_grid)

    p_fig = sub.add_parser("figure", help="write the CSV curves of one reference figure")
    p_fig.add_argument("figure", type=int, choices=range(1, 7))
    p_fig.add_argument("--outdir", required=True)
    p_fig.set_defaults(func=_cmd_figure)

    p_ver = sub.add_parser("verify", help="run an identity-verification suite")
    p_ver.add_argument("suite", choices=SUITES)
    p_ver.add_argument("--json", action="store_true", help="emit a JSON report")
    p_ver.set_defaults(func=_cmd_verify)

    p_int = sub.add_parser("integral", help="full-line integral vs its closed form")
    p_int.add_argument("--fn", choices=("cos", "os"), required=True)
    p_int.add_argument("--m", type=float, default=None)
    p_int.add_argument("--nu", type=float, default=None)
    p_int.set_defaults(func=_cmd_integral)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NearTrigError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"I/O failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
