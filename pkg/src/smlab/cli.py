"""smlab CLI — spherical means experiments from the command line."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from smlab.errors import ConvergenceError, DomainError, FitRejectedError
from smlab.models.config import Preset, RunConfig
from smlab.output.exporter import format_complex, format_float


console = Console()
log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_TOLERANCE = 3
EXIT_ORACLE = 4
EXIT_INTERRUPT = 130

ORACLE_REL_TOL = 1e-6
ORACLE_RADII = [0.0, 0.5, 1.5]


def _bounded_int(lo: int, hi: int):
    """Return an argparse type function that enforces lo <= value <= hi."""
    def _parse(value: str) -> int:
        iv = int(value)
        if iv < lo or iv > hi:
            raise argparse.ArgumentTypeError(f"must be between {lo} and {hi}, got {value}")
        return iv
    _parse.__name__ = f"int[{lo}..{hi}]"
    return _parse


def _add_means_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=_bounded_int(2, 64), default=None, help="Dimension n (default 2)")
    parser.add_argument("--alpha-re", type=float, default=None, help="Re alpha (default 0)")
    parser.add_argument("--alpha-im", type=float, default=None, help="Im alpha (default 0)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smlab",
        description="smlab — generalized spherical means, Bessel asymptotics and L^p scaling",
        epilog="Environment: SML_SEED is reserved; no command uses randomness, so it is currently ignored.",
    )
    parser.add_argument("--config", type=Path, default=None, help="JSON run config; flags override it")
    parser.add_argument("--out", type=Path, default=None, help="Output file (CSV for tables, JSON for reports)")
    parser.add_argument("--tolerance", type=float, default=None, help="Allowed |slope - predicted| (default 0.05)")
    parser.add_argument("--threads", type=_bounded_int(1, 256), default=None, help="Worker threads for sweeps")
    parser.add_argument("--preset", type=str, default=None, choices=[p.value for p in Preset if p is not Preset.CUSTOM])
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", help="Available commands")

    # -- bessel --
    bessel = sub.add_parser("bessel", help="J_beta(r) for complex order beta")
    bessel.add_argument("--order-re", type=float, default=0.0)
    bessel.add_argument("--order-im", type=float, default=0.0)
    bessel.add_argument("--r", type=float, required=True, help="Argument r >= 0")
    bessel.add_argument("--route", type=str, default="auto", choices=["auto", "series", "asymptotic", "both"])

    # -- theta --
    theta = sub.add_parser("theta", help="Fourier transform of the unit sphere measure at |xi| = s")
    theta.add_argument("--n", type=_bounded_int(2, 64), default=None)
    theta.add_argument("--s", type=float, required=True)

    # -- multiplier --
    multiplier = sub.add_parser("multiplier", help="Multiplier m^alpha(s)")
    _add_means_args(multiplier)
    multiplier.add_argument("--s", type=float, required=True)

    # -- testfn --
    testfn = sub.add_parser("testfn", help="Test function f_lambda at a radius, or its profile")
    _add_means_args(testfn)
    testfn.add_argument("--lam", type=float, required=True, help="Frequency scale lambda >= 4")
    group = testfn.add_mutually_exclusive_group()
    group.add_argument("--radius", type=float, default=None)
    group.add_argument("--profile", action="store_true", help="Sample the graded profile (written to --out)")
    testfn.add_argument("--p", type=float, default=None, help="Exponent used to size the profile (default 2)")

    # -- mean --
    mean = sub.add_parser("mean", help="A_t^alpha f_lambda(x) at |x| = radius")
    _add_means_args(mean)
    mean.add_argument("--lam", type=float, required=True)
    mean.add_argument("--t", type=float, nargs="+", default=None, help="One or more dilations (default 1)")
    mean.add_argument("--radius", type=float, default=None, help="|x| (default 0)")

    # -- scaling --
    scaling = sub.add_parser("scaling", help="Fit the growth exponent of a quantity in lambda")
    _add_means_args(scaling)
    scaling.add_argument("--quantity", type=str, default=None,
                         choices=["TESTFN_LP_NORM", "MEAN_AT_ORIGIN", "MEAN_TUNED_FAR", "MEAN_LP_NEAR_ORIGIN"])
    scaling.add_argument("--p", type=float, default=None)
    scaling.add_argument("--lambdas", type=float, nargs="+", default=None)
    scaling.add_argument("--t", type=float, default=None, help="Dilation for MEAN_TUNED_FAR (default |x| + 1)")
    scaling.add_argument("--radius", type=float, default=None, help="|x| for MEAN_TUNED_FAR (default 2)")
    scaling.add_argument("--c0", type=float, default=None, help="Ball radius factor for MEAN_LP_NEAR_ORIGIN")
    scaling.add_argument("--necessity", action="store_true", help="Run the three sweeps and report implied bounds")

    # -- regions --
    regions = sub.add_parser("regions", help="Known sufficient / necessary ranges over a p grid")
    regions.add_argument("--n", type=_bounded_int(2, 64), default=None)
    regions.add_argument("--p-min", type=float, default=None)
    regions.add_argument("--p-max", type=float, default=None)
    regions.add_argument("--p-step", type=float, default=None)
    regions.add_argument("--alpha-re", type=float, default=None, help="Also classify this Re alpha at every p")

    # -- oracle-check --
    oracle = sub.add_parser("oracle-check", help="Multiplier route vs ball integral on a Gaussian")
    _add_means_args(oracle)
    oracle.add_argument("--t", type=float, default=None)
    oracle.add_argument("--radius", type=float, default=None)

    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
    )


def _load_config(args: argparse.Namespace, **fields: Any) -> RunConfig:
    """Config file (if any), then preset, then non-None flags."""
    overrides = {k: v for k, v in fields.items() if v is not None}
    for key in ("out", "tolerance", "threads", "preset"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    if args.config is not None:
        return RunConfig.from_file(args.config, **overrides)
    preset = overrides.pop("preset", Preset.DESK.value)
    return RunConfig.from_preset(preset, **overrides)


def _echo(value: str) -> None:
    console.print(value, highlight=False, soft_wrap=True)


def cmd_bessel(args: argparse.Namespace) -> int:
    """Print J_beta(r) by the requested route."""
    from smlab.special.bessel import BesselRoute, bessel_j

    beta = complex(args.order_re, args.order_im)
    if args.route != "both":
        _echo(format_complex(bessel_j(beta, args.r, BesselRoute(args.route))))
        return EXIT_OK

    series = bessel_j(beta, args.r, BesselRoute.SERIES)
    asymptotic = bessel_j(beta, args.r, BesselRoute.ASYMPTOTIC)
    _echo(f"series     {format_complex(series)}")
    _echo(f"asymptotic {format_complex(asymptotic)}")
    _echo(f"difference {format_float(abs(series - asymptotic))}")
    return EXIT_OK


def cmd_theta(args: argparse.Namespace) -> int:
    from smlab.fourier.radial import sphere_fourier

    config = _load_config(args, n=args.n)
    _echo(format_complex(sphere_fourier(config.n, args.s)))
    return EXIT_OK


def cmd_multiplier(args: argparse.Namespace) -> int:
    from smlab.fourier.radial import multiplier_m

    config = _load_config(args, n=args.n, alpha_re=args.alpha_re, alpha_im=args.alpha_im)
    _echo(format_complex(multiplier_m(config.means, args.s)))
    return EXIT_OK


def cmd_testfn(args: argparse.Namespace) -> int:
    """f_lambda at one radius, or the whole profile as CSV."""
    from smlab.models.specs import TestFunctionSpec
    from smlab.output.exporter import profile_to_csv
    from smlab.testfn.f_lambda import f_lambda, f_lambda_profile

    config = _load_config(args, n=args.n, alpha_re=args.alpha_re, alpha_im=args.alpha_im,
                          p=args.p, radius=args.radius)
    tf = TestFunctionSpec(config.means, args.lam)

    if not args.profile:
        radius = config.radius if config.radius is not None else 0.0
        _echo(format_complex(f_lambda(tf, radius, config.quad)))
        return EXIT_OK

    profile = f_lambda_profile(
        tf, config.quad, config.p or 2.0,
        threads=config.threads, show_progress=console.is_terminal,
    )
    output_path = config.out or Path("profile.csv")
    profile_to_csv(profile, output_path)
    console.print(f"{profile.grid.size} samples, peak |f| at |x| = {profile.argmax_radius():.6g}")
    console.print(f"Profile exported to [bold]{output_path}[/bold]")
    return EXIT_OK


def cmd_mean(args: argparse.Namespace) -> int:
    """A_t f_lambda(x) for one or more t; CSV when --out is given."""
    from smlab.means.maximal import scan_means
    from smlab.models.specs import TestFunctionSpec
    from smlab.output.exporter import evaluations_to_csv

    config = _load_config(args, n=args.n, alpha_re=args.alpha_re, alpha_im=args.alpha_im,
                          radius=args.radius)
    tf = TestFunctionSpec(config.means, args.lam)
    radius = config.radius if config.radius is not None else 0.0
    t_grid = args.t or [config.t if config.t is not None else 1.0]

    evaluations = scan_means(config.means, tf, radius, t_grid, config.quad, threads=config.threads)
    for ev in evaluations:
        _echo(f"t={format_float(ev.t)} {format_complex(ev.value)}")
    if len(evaluations) > 1:
        best = max(evaluations, key=lambda e: abs(e.value))
        _echo(f"max |A_t f| = {format_float(abs(best.value))} at t={format_float(best.t)}")
    if config.out is not None:
        evaluations_to_csv(evaluations, config.out)
        console.print(f"Evaluations exported to [bold]{config.out}[/bold]")
    return EXIT_OK


def cmd_scaling(args: argparse.Namespace) -> int:
    """Sweep lambda, fit the slope and compare with the predicted exponent."""
    from smlab.lab.necessity import necessity_report
    from smlab.lab.scaling import DEFAULT_FAR_RADIUS, run_scaling
    from smlab.output import exporter

    config = _load_config(
        args, n=args.n, alpha_re=args.alpha_re, alpha_im=args.alpha_im, quantity=args.quantity,
        p=args.p, lambdas=args.lambdas, t=args.t, radius=args.radius, c0=args.c0,
    )
    sweep = {
        "radius": config.radius if config.radius is not None else DEFAULT_FAR_RADIUS,
        "t": config.t,
        "c0": config.c0,
        "threads": config.threads,
        "show_progress": console.is_terminal,
    }

    if args.necessity:
        if config.p is None:
            raise DomainError("the necessity report needs an exponent p")
        report = necessity_report(config.means, config.p, config.lambdas, config.quad, **sweep)
        output_path = config.out or Path("necessity.json")
        exporter.report_to_json(report, output_path)
        console.print(Panel(
            Text(
                f"implied Re alpha >= {report.implied_origin_bound:.4f} (exact {report.exact_origin_bound:.4f})\n"
                f"implied Re alpha >= {report.implied_far_bound:.4f} (exact {report.exact_far_bound:.4f})\n"
                f"{report.status}"
            ),
            title=f"Necessity n={config.n} alpha={config.means.alpha} p={config.p:g}",
            border_style="blue",
        ))
        console.print(f"Report exported to [bold]{output_path}[/bold]")
        return EXIT_OK

    if config.quantity.needs_p and config.p is None:
        raise DomainError(f"{config.quantity.value} needs an exponent p")

    fit = run_scaling(config.quantity, config.means, config.p, config.lambdas, config.quad, **sweep)
    output_path = config.out or Path("scaling.json")
    if output_path.suffix == ".csv":
        exporter.fit_to_csv(fit, output_path)
    else:
        exporter.fit_to_json(fit, output_path)

    _echo(f"slope {fit.slope:.6f}  predicted {fit.predicted:.6f}  delta {fit.delta:+.6f}  r^2 {fit.r_squared:.6f}")
    console.print(f"Fit exported to [bold]{output_path}[/bold]")
    if abs(fit.delta) > config.tolerance:
        console.print(f"[red]|delta| {abs(fit.delta):.4f} exceeds tolerance {config.tolerance:g}[/red]")
        return EXIT_TOLERANCE
    return EXIT_OK


def cmd_regions(args: argparse.Namespace) -> int:
    """Write the exponent atlas over a p grid as CSV."""
    from smlab.output.exporter import regions_to_csv
    from smlab.regions.atlas import ExponentAtlas, p_grid

    config = _load_config(args, n=args.n, p_min=args.p_min, p_max=args.p_max, p_step=args.p_step)
    atlas = ExponentAtlas.load()
    grid = p_grid(config.p_min, config.p_max, config.p_step)
    rows = atlas.boundary_table(config.n, grid)

    output_path = config.out or Path("regions.csv")
    regions_to_csv(rows, output_path)

    table = Table(title=f"Exponent regions, n={config.n}")
    for column in ("p", "necessary", "sufficient", "condition", "gap"):
        table.add_column(column, justify="right" if column != "condition" else "left")
    if args.alpha_re is not None:
        table.add_column(f"Re alpha={args.alpha_re:g}")
    for row in rows:
        cells = [
            f"{row.p:g}",
            "-" if row.necessary_threshold is None else f"{row.necessary_threshold:.4f}",
            f"{row.sufficient_threshold:.4f}",
            row.sufficient_condition,
            "-" if row.gap is None else f"{row.gap:.4f}",
        ]
        if args.alpha_re is not None:
            cells.append(atlas.classify(config.n, row.p, args.alpha_re).verdict.value)
        table.add_row(*cells)
    console.print(table)
    console.print(f"Regions exported to [bold]{output_path}[/bold]")
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    """Compare the multiplier route with the ball integral on the Gaussian."""
    from smlab.means.direct_oracle import mean_direct_oracle
    from smlab.means.multiplier_route import gaussian, mean_gaussian_multiplier_route

    config = _load_config(args, n=args.n, alpha_re=args.alpha_re, alpha_im=args.alpha_im,
                          t=args.t, radius=args.radius)
    spec = config.means
    if spec.re_alpha <= 0:
        raise DomainError(f"the oracle check requires Re alpha > 0, got {spec.re_alpha:g}")
    t = config.t if config.t is not None else 1.0
    radii = [config.radius] if config.radius is not None else ORACLE_RADII

    table = Table(title=f"Oracle check n={spec.n} alpha={spec.alpha} t={t:g}")
    for column in ("|x|", "multiplier route", "ball integral", "rel. error"):
        table.add_column(column, justify="right")

    passed = True
    for radius in radii:
        route = mean_gaussian_multiplier_route(spec, t, radius, config.quad)
        try:
            direct = mean_direct_oracle(spec, t, gaussian, radius)
        except ConvergenceError as exc:
            console.print(f"[red]|x|={radius:g}: {escape(str(exc))}[/red]")
            passed = False
            continue
        error = abs(route - direct) / max(abs(direct), 1e-300)
        passed &= error < ORACLE_REL_TOL
        table.add_row(f"{radius:g}", format_complex(route), format_complex(direct), f"{error:.2e}")
    console.print(table)

    if passed:
        console.print("[green]PASS[/green]")
        return EXIT_OK
    console.print(f"[red]FAIL: relative error >= {ORACLE_REL_TOL:g}[/red]")
    return EXIT_ORACLE


def main() -> None:
    """CLI entry point."""
    parser = _build_parser()
    args = parser.parse_args()

    if args.command is None:
        parser.print_help()
        sys.exit(EXIT_OK)

    _configure_logging(args.verbose)

    commands = {
        "bessel": cmd_bessel,
        "theta": cmd_theta,
        "multiplier": cmd_multiplier,
        "testfn": cmd_testfn,
        "mean": cmd_mean,
        "scaling": cmd_scaling,
        "regions": cmd_regions,
        "oracle-check": cmd_oracle_check,
    }

    cmd_func = commands.get(args.command)
    if not cmd_func:
        parser.print_help()
        sys.exit(EXIT_ERROR)

    try:
        code = cmd_func(args)
    except KeyboardInterrupt:
        console.print("\n[yellow]Interrupted.[/yellow]")
        sys.exit(EXIT_INTERRUPT)
    except FitRejectedError as exc:
        console.print(f"[red]Fit rejected: {escape(str(exc))}[/red]")
        sys.exit(EXIT_TOLERANCE)
    except ValidationError as exc:
        console.print(f"[red]Invalid configuration: {escape(str(exc))}[/red]")
        sys.exit(EXIT_USAGE)
    except DomainError as exc:
        console.print(f"[red]Domain error: {escape(str(exc))}[/red]")
        sys.exit(EXIT_USAGE)
    except ConvergenceError as exc:
        console.print(f"[red]Did not converge: {escape(str(exc))}[/red]")
        sys.exit(EXIT_TOLERANCE if args.command == "scaling" else EXIT_ERROR)
    except Exception as exc:
        log.debug("unhandled error", exc_info=True)
        console.print(f"[red]Error: {escape(str(exc))}[/red]")
        sys.exit(EXIT_ERROR)
    sys.exit(code)


if __name__ == "__main__":
    main()
