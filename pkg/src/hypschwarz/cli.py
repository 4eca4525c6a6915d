"""Command line interface.

Subcommands mirror the library surface: ``gp`` and ``astar`` evaluate the
sharp bound and its optimal shift over a radius or sweep, ``uh`` and ``grad``
print the closed-form quantities, the ``verify-*`` commands run the
certification routines, and ``check`` executes the full acceptance battery.

Exit codes: 0 on success, 1 on usage or domain errors, 2 when a verification
command detects a property violation.  Output is byte deterministic: floats
are rendered with repr-faithful precision and rows always end with a bare
newline.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from .errors import BracketError, CapUnderflowError, DomainError, NonConvergenceError
from .kernel import BallContext
from .objective import ObjectiveParams, big_f
from .quadrature import DEFAULT_ORDER
from .solver import g_1_closed, g_inf_closed, g_p, grad_constant, solve_a_star
from .verify import minimizing_sequence_p1, random_bound_check, verify_sharpness

_ENV_ORDER = "HYPSCHWARZ_ORDER"

#: Relative gap allowed by ``verify-sharpness`` before flagging a violation.
SHARPNESS_GAP_LIMIT = 1e-6
#: Looser limit for p = 1, where the cap sequence converges slowly.
SHARPNESS_GAP_LIMIT_P1 = 0.02
#: Final-gap and monotonicity limits for ``verify-capseq``.
CAPSEQ_GAP_LIMIT = 0.02
CAPSEQ_MONOTONE_SLACK = 1e-9


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; reserve 2 for violations."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _cell_float(key: str, value: float):
    value = float(value)
    if math.isinf(value):
        return (key, "inf" if value > 0 else "-inf", False)
    return (key, _fmt(value), True)


def _cell_int(key: str, value: int):
    return (key, str(int(value)), True)


def _cell_str(key: str, value: str):
    return (key, value, False)


def _render(fmt: str, header, rows) -> str:
    if fmt == "csv":
        lines = [",".join(header)]
        lines.extend(",".join(token for _, token, _ in row) for row in rows)
        return "\n".join(lines) + "\n"
    parts = []
    for row in rows:
        inner = ", ".join(
            f'"{key}": ' + (token if numeric else f'"{token}"') for key, token, numeric in row
        )
        parts.append("  {" + inner + "}")
    if not parts:
        return "[]\n"
    return "[\n" + ",\n".join(parts) + "\n]\n"


def _write(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def _default_order() -> int:
    raw = os.environ.get(_ENV_ORDER)
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{_ENV_ORDER} must be an integer, got {raw!r}")
    if value < 2:
        raise DomainError(f"{_ENV_ORDER} must be >= 2, got {value}")
    return value


def _resolve_order(args) -> int:
    if getattr(args, "order", None) is not None:
        if args.order < 2:
            raise DomainError(f"--order must be >= 2, got {args.order}")
        return args.order
    return _default_order()


def _resolve_radii(args, parser) -> list:
    sweep = (args.r_min, args.r_max, args.steps)
    if args.r is not None:
        if any(v is not None for v in sweep):
            parser.error("give either --r or the sweep flags, not both")
        return [args.r]
    if any(v is None for v in sweep):
        parser.error("need --r, or all of --r-min/--r-max/--steps")
    if args.steps < 1:
        parser.error("--steps must be >= 1")
    return [float(x) for x in np.linspace(args.r_min, args.r_max, args.steps)]


def _add_context_flags(sub) -> None:
    sub.add_argument("--n", type=int, required=True, help="ambient dimension, >= 3")
    sub.add_argument("--p", type=float, required=True, help='boundary norm exponent; "inf" accepted')


def _add_radius_flags(sub) -> None:
    sub.add_argument("--r", type=float, help="single radius in [0, 1)")
    sub.add_argument("--r-min", type=float, dest="r_min")
    sub.add_argument("--r-max", type=float, dest="r_max")
    sub.add_argument("--steps", type=int, help="sweep length when using --r-min/--r-max")


def _add_output_flags(sub) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--output", help="write to this file instead of stdout")


def _add_order_flag(sub) -> None:
    sub.add_argument(
        "--order", type=int, default=None,
        help=f"quadrature order (default: ${_ENV_ORDER} or {DEFAULT_ORDER})",
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="hypschwarz", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub = subs.add_parser("gp", help="sharp bound G_p(r) with its optimal shift")
    _add_context_flags(sub)
    _add_radius_flags(sub)
    _add_order_flag(sub)
    _add_output_flags(sub)

    sub = subs.add_parser("astar", help="optimal shift and stationarity residual")
    _add_context_flags(sub)
    _add_radius_flags(sub)
    _add_order_flag(sub)
    _add_output_flags(sub)

    sub = subs.add_parser("uh", help="closed-form sup-norm bound on the axis")
    sub.add_argument("--n", type=int, required=True, help="ambient dimension, >= 3")
    _add_radius_flags(sub)
    _add_output_flags(sub)

    sub = subs.add_parser("grad", help="sharp gradient constant at the origin")
    _add_context_flags(sub)
    _add_output_flags(sub)

    sub = subs.add_parser("verify-sharpness", help="attain the bound with extremal data")
    _add_context_flags(sub)
    _add_radius_flags(sub)
    _add_order_flag(sub)
    _add_output_flags(sub)

    sub = subs.add_parser("verify-bound", help="random boundary data against the bound")
    _add_context_flags(sub)
    _add_radius_flags(sub)
    _add_order_flag(sub)
    sub.add_argument("--count", type=int, default=1000)
    sub.add_argument("--seed", type=int, default=42)
    _add_output_flags(sub)

    sub = subs.add_parser("verify-capseq", help="p = 1 minimizing sequence against its limit")
    sub.add_argument("--n", type=int, required=True, help="ambient dimension, >= 3")
    sub.add_argument("--r", type=float, required=True, help="radius in (0, 1)")
    sub.add_argument("--i-max", type=int, default=64, dest="i_max")
    _add_output_flags(sub)

    subs.add_parser("check", help="run the full acceptance battery")
    return parser


def _run_gp(args, parser) -> int:
    order = _resolve_order(args)
    ctx = BallContext(args.n, args.p)
    rows = []
    for r in _resolve_radii(args, parser):
        res = g_p(ctx, r, order)
        rows.append([
            _cell_float("r", r),
            _cell_float("a_star", res.a_star),
            _cell_float("g_value", res.g_value),
            _cell_str("method", res.method),
            _cell_float("est_error", res.est_error),
        ])
    _write(_render(args.format, ["r", "a_star", "g_value", "method", "est_error"], rows), args.output)
    return 0


def _run_astar(args, parser) -> int:
    order = _resolve_order(args)
    ctx = BallContext(args.n, args.p)
    rows = []
    for r in _resolve_radii(args, parser):
        if ctx.p == 1.0:
            a_star, residual = g_1_closed(ctx.n, r)[0], 0.0
        elif ctx.p == math.inf:
            a_star, residual = g_inf_closed(ctx.n, r)[0], 0.0
        else:
            a_star = solve_a_star(ctx, r, order)
            residual = big_f(ObjectiveParams(ctx, r, order), a_star)
        rows.append([
            _cell_float("r", r),
            _cell_float("a_star", a_star),
            _cell_float("f_residual", residual),
        ])
    _write(_render(args.format, ["r", "a_star", "f_residual"], rows), args.output)
    return 0


def _run_uh(args, parser) -> int:
    rows = []
    for r in _resolve_radii(args, parser):
        rows.append([
            _cell_float("r", r),
            _cell_float("u_h", g_inf_closed(args.n, r)[1]),
        ])
    _write(_render(args.format, ["r", "u_h"], rows), args.output)
    return 0


def _run_grad(args) -> int:
    ctx = BallContext(args.n, args.p)
    rows = [[
        _cell_int("n", ctx.n),
        _cell_float("p", ctx.p),
        _cell_float("c_p", grad_constant(ctx)),
    ]]
    _write(_render(args.format, ["n", "p", "c_p"], rows), args.output)
    return 0


def _run_verify_sharpness(args, parser) -> int:
    order = _resolve_order(args)
    ctx = BallContext(args.n, args.p)
    limit = SHARPNESS_GAP_LIMIT_P1 if ctx.p == 1.0 else SHARPNESS_GAP_LIMIT
    rows = []
    code = 0
    for r in _resolve_radii(args, parser):
        report = verify_sharpness(ctx, r, order)
        if report.rel_gap > limit:
            code = 2
        rows.append([
            _cell_int("n", ctx.n),
            _cell_float("p", ctx.p),
            _cell_float("r", r),
            _cell_float("g_bound", report.g_bound),
            _cell_float("attained", report.attained),
            _cell_float("u_at_zero", report.u_at_zero),
            _cell_float("rel_gap", report.rel_gap),
        ])
    header = ["n", "p", "r", "g_bound", "attained", "u_at_zero", "rel_gap"]
    _write(_render(args.format, header, rows), args.output)
    return code


def _run_verify_bound(args, parser) -> int:
    order = _resolve_order(args)
    ctx = BallContext(args.n, args.p)
    rows = []
    code = 0
    for r in _resolve_radii(args, parser):
        report = random_bound_check(ctx, r, count=args.count, seed=args.seed, order=order)
        if report.violations:
            code = 2
        rows.append([
            _cell_int("n", ctx.n),
            _cell_float("p", ctx.p),
            _cell_float("r", r),
            _cell_int("count", report.count),
            _cell_int("seed", report.seed),
            _cell_int("violations", report.violations),
            _cell_float("max_ratio", report.max_ratio),
        ])
    header = ["n", "p", "r", "count", "seed", "violations", "max_ratio"]
    _write(_render(args.format, header, rows), args.output)
    return code


def _run_verify_capseq(args) -> int:
    if args.i_max < 2:
        raise DomainError(f"--i-max must be >= 2, got {args.i_max}")
    g1 = g_1_closed(args.n, args.r)[1]
    indices = []
    i = 2
    while i <= args.i_max:
        indices.append(i)
        i *= 2
    values = [minimizing_sequence_p1(args.n, args.r, i) for i in indices]
    rows = []
    for i, u_i in zip(indices, values):
        rows.append([
            _cell_int("i", i),
            _cell_float("u_i", u_i),
            _cell_float("g1_closed", g1),
            _cell_float("rel_gap", abs(g1 - u_i) / g1),
        ])
    monotone = all(
        later >= earlier - CAPSEQ_MONOTONE_SLACK * g1
        for earlier, later in zip(values, values[1:])
    )
    final_gap = abs(g1 - values[-1]) / g1
    _write(_render(args.format, ["i", "u_i", "g1_closed", "rel_gap"], rows), args.output)
    return 0 if monotone and final_gap <= CAPSEQ_GAP_LIMIT else 2


def _run_check() -> int:
    from .acceptance import run_all

    results = run_all()
    for result in results:
        sys.stdout.write(result.line() + "\n")
    return 0 if all(result.passed for result in results) else 2


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gp":
            return _run_gp(args, parser)
        if args.command == "astar":
            return _run_astar(args, parser)
        if args.command == "uh":
            return _run_uh(args, parser)
        if args.command == "grad":
            return _run_grad(args)
        if args.command == "verify-sharpness":
            return _run_verify_sharpness(args, parser)
        if args.command == "verify-bound":
            return _run_verify_bound(args, parser)
        if args.command == "verify-capseq":
            return _run_verify_capseq(args)
        return _run_check()
    except (DomainError, BracketError, NonConvergenceError, CapUnderflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
