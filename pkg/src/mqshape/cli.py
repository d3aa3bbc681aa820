"""Command-line surface.

Subcommands: constants, points, fit, mn-curve, optimal-c, verify-bound,
sweep.  Tabular commands emit CSV (comment lines carry the version and the
resolved config; the header row is fixed per subcommand); document commands
emit JSON.  Identical flags always produce byte-identical output.

Exit codes: 0 success, 2 domain/validation error, 3 unsupported (n, beta)
case, 4 conditioning failure.
"""

import argparse
import csv
import math
import sys

from . import __version__
from .bounds import admissible_l, derived_constants
from .errors import ConditioningError, DomainError, UnsupportedCaseError
from .fmt import csv_lines, dumps, dumps_compact
from .interp import MultiquadricInterpolator
from .shape import MNProblem, mn_curve, optimal_c
from .simplex import evenly_spaced_points, scale_to_diameter, unit_corner_simplex
from .svgplot import log_log_curve_svg
from .verify import run_sweep, run_verify

__all__ = ["main", "entry_point"]


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _csv_document(command, config, header, rows, case=None):
    lines = [f"# mqshape {__version__} {command}", f"# config {dumps_compact(config)}"]
    if case is not None:
        lines.append(f"# case {case}")
    return "\n".join(lines) + "\n" + csv_lines(header, rows)


def _json_document(command, config, payload, case=None):
    doc = {"artifact": "mqshape", "version": __version__, "command": command, "config": config}
    if case is not None:
        doc["case"] = case
    doc.update(payload)
    return dumps(doc)


def _emit_table(args, command, config, header, rows, case=None):
    if getattr(args, "format", "csv") == "json":
        payload = {"header": list(header), "rows": [list(r) for r in rows]}
        _write(args.out, _json_document(command, config, payload, case=case))
    else:
        _write(args.out, _csv_document(command, config, header, rows, case=case))


def _resolve_l(args):
    """Lattice degree from --l, or derived from --delta via the constants."""
    if getattr(args, "l", None) is not None:
        if args.l < 1:
            raise DomainError(f"--l must be a positive integer, got {args.l}")
        return int(args.l)
    if getattr(args, "delta", None) is not None:
        constants = derived_constants(args.n, args.beta, args.b0)
        return admissible_l(constants, args.delta)
    raise DomainError("fix the lattice degree with --l, or give --delta to derive it")


def cmd_constants(args):
    constants = derived_constants(args.n, args.beta, args.b0)
    config = {"n": args.n, "beta": args.beta, "b0": args.b0}
    payload = {
        "rho": float(constants.rho),
        "delta0_const": float(constants.delta0_const),
        "s": constants.s,
        "branch": constants.branch,
        "C": constants.C,
        "delta_max": constants.delta_max,
        "lambda_prime": constants.lambda_prime,
    }
    _write(args.out, _json_document("constants", config, payload))
    return 0


def cmd_points(args):
    simplex = unit_corner_simplex(args.n)
    if args.diameter is not None:
        simplex = scale_to_diameter(simplex, args.diameter)
    nodes = evenly_spaced_points(simplex, args.l)
    config = {"n": args.n, "l": args.l, "diameter": args.diameter}
    header = (
        ["index"]
        + [f"x{i}" for i in range(1, args.n + 1)]
        + [f"k{i}" for i in range(1, args.n + 2)]
    )
    rows = [
        [i] + [float(v) for v in nodes.points[i]] + [int(k) for k in nodes.indices[i]]
        for i in range(len(nodes))
    ]
    _emit_table(args, "points", config, header, rows)
    return 0


def _read_fit_data(path):
    try:
        handle = open(path, "r", encoding="utf-8", newline="")
    except OSError as exc:
        raise DomainError(f"cannot read data file: {exc}") from exc
    with handle:
        reader = csv.reader(row for row in handle if not row.startswith("#"))
        try:
            header = next(reader)
        except StopIteration:
            raise DomainError(f"{path}: empty data file") from None
        header = [h.strip() for h in header]
        n = len(header) - 1
        expected = [f"x{i}" for i in range(1, n + 1)] + ["y"]
        if n < 1 or header != expected:
            raise DomainError(
                f"{path}: expected header x1,...,xn,y, got {','.join(header)}"
            )
        points, values = [], []
        for row in reader:
            if not row:
                continue
            if len(row) != n + 1:
                raise DomainError(f"{path}: row with {len(row)} cells, expected {n + 1}")
            try:
                points.append([float(v) for v in row[:n]])
                values.append(float(row[n]))
            except ValueError as exc:
                raise DomainError(f"{path}: non-numeric cell in row {len(values) + 1}: {exc}") from None
    if not points:
        raise DomainError(f"{path}: no data rows")
    return points, values


def cmd_fit(args):
    points, values = _read_fit_data(args.data)
    interpolant = MultiquadricInterpolator(beta=args.beta, c=args.c).fit(points, values)
    config = {"beta": args.beta, "c": args.c, "n": len(points[0]), "rows": len(points)}
    payload = {
        "beta": args.beta,
        "c": args.c,
        "m": interpolant.kernel_.m,
        "centers": [[float(v) for v in row] for row in interpolant.centers_],
        "coeffs": [float(v) for v in interpolant.coef_],
        "poly_coeffs": [float(v) for v in interpolant.poly_coef_],
        "cond_estimate": interpolant.cond_estimate_,
    }
    _write(args.out, _json_document("fit", config, payload))
    return 0


def _curve_config(args, l):
    return {
        "n": args.n,
        "beta": args.beta,
        "sigma": args.sigma,
        "b0": args.b0,
        "delta": args.delta,
        "l": l,
        "c_min": args.c_min,
        "c_max": args.c_max,
    }


def cmd_mn_curve(args):
    l = _resolve_l(args)
    problem = MNProblem.from_params(args.n, args.beta, args.sigma, l)
    samples = mn_curve(problem, args.c_min, args.c_max, num=args.points)
    config = _curve_config(args, l)
    config["points"] = args.points
    _emit_table(args, "mn-curve", config, ["c", "mn_value"], samples, case=problem.case)
    if args.svg:
        best = min(samples, key=lambda cv: cv[1])
        svg = log_log_curve_svg(
            samples,
            marker=best,
            title=f"MN curve ({problem.case}, n={args.n}, beta={args.beta:g}, "
            f"sigma={args.sigma:g}, l={l})",
        )
        _write(args.svg, svg)
    return 0


def cmd_optimal_c(args):
    l = _resolve_l(args)
    problem = MNProblem.from_params(args.n, args.beta, args.sigma, l)
    result = optimal_c(problem, args.c_min, args.c_max)
    config = _curve_config(args, l)
    config["s_mn"] = args.s_mn
    payload = {
        "optimal_c": result.optimal_c,
        "mn_at_optimum": result.mn_at_optimum,
        "boundary_optimum": result.boundary_optimum,
        "branch_note": result.branch_note,
        "diagnostics": result.diagnostics,
    }
    _write(args.out, _json_document("optimal-c", config, payload, case=result.case))
    return 0


def _c_values(args):
    if args.c is not None:
        if args.c_min is not None or args.c_max is not None:
            raise DomainError("give either --c or a --c-min/--c-max range, not both")
        return [args.c]
    if args.c_min is None or args.c_max is None:
        raise DomainError("give --c, or both --c-min and --c-max")
    if not 0.0 < args.c_min < args.c_max:
        raise DomainError(f"invalid c range [{args.c_min!r}, {args.c_max!r}]")
    step = (math.log(args.c_max) - math.log(args.c_min)) / (args.points - 1)
    return [math.exp(math.log(args.c_min) + i * step) for i in range(args.points)]


def cmd_verify_bound(args):
    config = {
        "n": args.n,
        "beta": args.beta,
        "b0": args.b0,
        "sigma": args.sigma,
        "delta": args.delta,
        "s_mn": args.s_mn,
        "sigma0": args.sigma0,
        "testfn": args.testfn,
        "c": args.c,
        "c_min": args.c_min,
        "c_max": args.c_max,
    }
    report = run_verify(
        args.n,
        args.beta,
        args.b0,
        args.sigma,
        args.delta,
        _c_values(args),
        s_mn=args.s_mn,
        sigma0=args.sigma0,
        testfn=args.testfn,
    )
    case = report.pop("case")
    if args.c is not None:
        # Single run: flatten the per-c fields to the top level.
        runs = report.pop("runs")
        report.update(runs[0])
    _write(args.out, _json_document("verify-bound", config, report, case=case))
    return 0


def cmd_sweep(args):
    if not 0.0 < args.c_min < args.c_max:
        raise DomainError(f"invalid c range [{args.c_min!r}, {args.c_max!r}]")
    problem, schedule, rows = run_sweep(
        args.n,
        args.beta,
        args.b0,
        args.sigma,
        args.delta,
        args.c_min,
        args.c_max,
        args.points,
        s_mn=args.s_mn,
        sigma0=args.sigma0,
        testfn=args.testfn,
    )
    config = {
        "n": args.n,
        "beta": args.beta,
        "b0": args.b0,
        "sigma": args.sigma,
        "delta": args.delta,
        "l": schedule.l,
        "r": schedule.r,
        "c_min": args.c_min,
        "c_max": args.c_max,
        "points": args.points,
        "s_mn": args.s_mn,
        "sigma0": args.sigma0,
        "testfn": args.testfn,
    }
    header = ["c", "empirical_max_error", "bound_rhs", "mn_value"]
    _emit_table(args, "sweep", config, header, rows, case=problem.case)
    return 0


def _add(parser, *flags, **kwargs):
    parser.add_argument(*flags, **kwargs)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mqshape",
        description=(
            "Select the multiquadric shape parameter c by minimizing the MN "
            "error-bound objective, and verify the bound by interpolating "
            "band-limited functions on simplex lattices."
        ),
    )
    parser.add_argument("--version", action="version", version=f"mqshape {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common_out(p):
        _add(p, "--out", default="-", help="output path ('-' for stdout)")

    p = sub.add_parser("constants", help="error-bound constants for (n, beta, b0)")
    _add(p, "--n", type=int, required=True)
    _add(p, "--beta", type=float, required=True)
    _add(p, "--b0", type=float, default=1.0)
    common_out(p)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("points", help="evenly spaced lattice of degree l on a simplex")
    _add(p, "--n", type=int, required=True)
    _add(p, "--l", type=int, required=True)
    _add(p, "--diameter", type=float, default=None, help="scale the corner simplex to this diameter")
    _add(p, "--format", choices=("csv", "json"), default="csv")
    common_out(p)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("fit", help="fit the kernel interpolant to a node/value CSV")
    _add(p, "--beta", type=float, required=True)
    _add(p, "--c", type=float, required=True)
    _add(p, "--data", required=True, help="CSV with header x1,...,xn,y")
    common_out(p)
    p.set_defaults(func=cmd_fit)

    def mn_flags(p):
        _add(p, "--n", type=int, required=True)
        _add(p, "--beta", type=float, required=True)
        _add(p, "--sigma", type=float, default=1.0, help="band radius of the data class")
        _add(p, "--b0", type=float, default=1.0)
        _add(p, "--delta", type=float, default=None, help="derive l from this delta")
        _add(p, "--l", type=int, default=None, help="lattice degree (overrides --delta)")
        _add(p, "--c-min", dest="c_min", type=float, default=None)
        _add(p, "--c-max", dest="c_max", type=float, default=None)

    p = sub.add_parser("mn-curve", help="sample the MN objective on a log grid")
    mn_flags(p)
    _add(p, "--points", type=int, default=400)
    _add(p, "--format", choices=("csv", "json"), default="csv")
    _add(p, "--svg", default=None, help="also write a log-log SVG plot here")
    common_out(p)
    p.set_defaults(func=cmd_mn_curve)

    p = sub.add_parser("optimal-c", help="global minimizer of the MN objective")
    mn_flags(p)
    _add(p, "--s-mn", dest="s_mn", type=float, default=1.0)
    common_out(p)
    p.set_defaults(func=cmd_optimal_c)

    def pipeline_flags(p):
        _add(p, "--n", type=int, required=True)
        _add(p, "--beta", type=float, required=True)
        _add(p, "--b0", type=float, default=1.0)
        _add(p, "--sigma", type=float, default=1.0, help="band radius of the test class")
        _add(p, "--delta", type=float, required=True)
        _add(p, "--s-mn", dest="s_mn", type=float, default=1.0)
        _add(p, "--sigma0", type=float, default=None, help="per-axis half-width of the sinc test function")
        _add(p, "--testfn", choices=("sinc",), default="sinc")

    p = sub.add_parser("verify-bound", help="interpolate a band-limited function and check the bound")
    pipeline_flags(p)
    _add(p, "--c", type=float, default=None)
    _add(p, "--c-min", dest="c_min", type=float, default=None)
    _add(p, "--c-max", dest="c_max", type=float, default=None)
    _add(p, "--points", type=int, default=20, help="grid size when a c range is given")
    common_out(p)
    p.set_defaults(func=cmd_verify_bound)

    p = sub.add_parser("sweep", help="empirical error vs bound vs MN over a shared c grid")
    pipeline_flags(p)
    _add(p, "--c-min", dest="c_min", type=float, required=True)
    _add(p, "--c-max", dest="c_max", type=float, required=True)
    _add(p, "--points", type=int, default=50)
    _add(p, "--format", choices=("csv", "json"), default="csv")
    common_out(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None):
    """Run the CLI; returns the process exit code instead of raising."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 0 for --help, 2 for bad usage
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"mqshape: error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedCaseError as exc:
        print(f"mqshape: unsupported case: {exc}", file=sys.stderr)
        return 3
    except ConditioningError as exc:
        print(f"mqshape: conditioning failure: {exc}", file=sys.stderr)
        return 4


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
