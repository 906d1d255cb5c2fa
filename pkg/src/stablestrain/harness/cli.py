"""Command line entry point: ``stablestrain sweep`` and ``stablestrain axial``.

Exit codes: 0 on success, 1 on runtime failure, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from pathlib import Path

from ..precision import get_precision
from .axial import AxialConfig, NewtonReport, run_axial
from .models import MODEL_NAMES
from .plotting import plot_newton, plot_sweep
from .sweep import DEFAULT_DIRECTIONS, SweepConfig, run_sweep, write_per_direction_csv, write_rows

SEED_ENV = "STABLESTRAIN_SEED"


def _default_seed(parser: argparse.ArgumentParser) -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 1
    try:
        return int(raw)
    except ValueError:
        parser.error(f"{SEED_ENV}={raw!r} is not an integer")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablestrain",
        description="Relative-error sweeps and the axial Newton test for stable hyperelastic kernels.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="{sweep,axial}")

    sw = sub.add_parser(
        "sweep",
        help="relative error against extended precision over a log-spaced strain grid",
        description="Median relative error over random directions H/||H||, one CSV row per eps.",
    )
    sw.add_argument("--model", required=True, choices=MODEL_NAMES, help="quantity to measure")
    sw.add_argument("--configuration", default="initial", choices=("initial", "current"),
                    help="initial (S, E, material Hencky) or current (tau, e, spatial Hencky); default initial")
    sw.add_argument("--precision", default="double", choices=("single", "double"),
                    help="precision under test; default double")
    sw.add_argument("--eps-min", type=float, default=1e-8, help="smallest ||H||_F; default 1e-8")
    sw.add_argument("--eps-max", type=float, default=1e-1, help="largest ||H||_F; default 1e-1")
    sw.add_argument("--samples", type=int, default=50, help="grid points; default 50")
    sw.add_argument("--directions", type=int, default=DEFAULT_DIRECTIONS,
                    help=f"random directions per grid point, aggregated by median; default {DEFAULT_DIRECTIONS}")
    sw.add_argument("--seed", type=int, default=None, help=f"sampling seed; default ${SEED_ENV} or 1")
    sw.add_argument("--series-order", type=int, default=6,
                    help="log1pmx series terms used in the band |x/(2+x)| <= 0.05; default 6")
    sw.add_argument("-o", "--output", type=Path, default=None, help="CSV path; stdout when omitted")
    sw.add_argument("--svg", action="store_true", help="also write a log-log SVG next to --output")
    sw.add_argument("--per-direction", type=Path, default=None,
                    help="also write every direction's error (long format CSV)")

    ax = sub.add_parser(
        "axial",
        help="single-element axial stretch solved by Newton",
        description="Newton history and face reactions for a block under axial stretch.",
    )
    ax.add_argument("--youngs", type=float, default=2.8, help="Young's modulus; default 2.8")
    ax.add_argument("--poisson", type=float, default=0.4, help="Poisson ratio; default 0.4")
    ax.add_argument("--eps", dest="eps_axial", type=float, default=1e-12,
                    help="axial displacement of the x = 1 face; default 1e-12")
    ax.add_argument("--form", default="both", choices=("stable", "unstable", "both"),
                    help="stress form used in the residual; default both")
    ax.add_argument("--max-newton", type=int, default=10, help="Newton iteration cap; default 10")
    ax.add_argument("--quadrature", default="2x2x2", choices=("2x2x2",), help="volume quadrature")
    ax.add_argument("--elements", type=int, default=1, help="elements per side; default 1")
    ax.add_argument("-o", "--output", type=Path, default=None, help="CSV path; stdout when omitted")
    ax.add_argument("--svg", action="store_true", help="also write the residual history as SVG next to --output")
    return parser


def _emit(write, output: Path | None) -> None:
    if output is None:
        buf = io.StringIO()
        write(buf)
        sys.stdout.write(buf.getvalue())
    else:
        with output.open("w", newline="", encoding="utf-8") as fh:
            write(fh)


def _fmt(x) -> str:
    return repr(float(x))


def axial_table(reports: list[NewtonReport]) -> list[list[str]]:
    """Rows: one per Newton iteration, then the two face forces, their sum and the convergence flag."""
    rows = [["quantity"] + [r.form for r in reports]]
    depth = max(len(r.residual_norms) for r in reports)
    for k in range(depth):
        rows.append([f"iteration_{k}"] + [
            _fmt(r.residual_norms[k]) if k < len(r.residual_norms) else "" for r in reports
        ])
    rows.append(["force_x1"] + [_fmt(r.force_x1) for r in reports])
    rows.append(["force_x0"] + [_fmt(r.force_x0) for r in reports])
    rows.append(["difference"] + [_fmt(r.force_imbalance) for r in reports])
    rows.append(["converged"] + [str(r.converged).lower() for r in reports])
    return rows


def _sweep(args, parser) -> int:
    if args.svg and args.output is None:
        parser.error("--svg requires --output")
    seed = args.seed if args.seed is not None else _default_seed(parser)
    try:
        cfg = SweepConfig(
            model=args.model,
            configuration=args.configuration,
            precision=args.precision,
            eps_min=args.eps_min,
            eps_max=args.eps_max,
            samples=args.samples,
            directions=args.directions,
            seed=seed,
            series_order=args.series_order,
        )
    except ValueError as exc:
        parser.error(str(exc))
    result = run_sweep(cfg)
    _emit(lambda fh: write_rows(result, fh), args.output)
    if args.svg:
        plot_sweep(result, args.output.with_suffix(".svg"), get_precision(cfg.precision).eps)
    if args.per_direction is not None:
        write_per_direction_csv(result, args.per_direction)
    return 0


def _axial(args, parser) -> int:
    if args.svg and args.output is None:
        parser.error("--svg requires --output")
    forms = ("stable", "unstable") if args.form == "both" else (args.form,)
    try:
        configs = [
            AxialConfig(
                youngs=args.youngs,
                poisson=args.poisson,
                eps_axial=args.eps_axial,
                form=f,
                max_newton=args.max_newton,
                quadrature=args.quadrature,
                elements=args.elements,
            )
            for f in forms
        ]
    except ValueError as exc:
        parser.error(str(exc))
    reports = [run_axial(c) for c in configs]
    rows = axial_table(reports)
    _emit(lambda fh: csv.writer(fh, lineterminator="\n").writerows(rows), args.output)
    if args.svg:
        plot_newton(reports, args.output.with_suffix(".svg"))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = _sweep if args.command == "sweep" else _axial
    try:
        return handler(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (OSError, ArithmeticError, RuntimeError, ValueError) as exc:
        print(f"stablestrain: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
