"""End-to-end bound verification: fit a band-limited function and compare.

The pipeline builds the full hypothesis set of the error bound -- constants
from (n, beta, b0), a simplex scaled into the admissible diameter window, the
smallest admissible lattice degree for the requested delta -- then interpolates
a band-limited test function at the lattice nodes, measures the worst error on
a dense evaluation lattice and reports it against the bound right-hand side.

A conditioning failure at some c marks that run inconclusive instead of
failing: it is a statement about floating-point solvability, not about the
bound.
"""

import math

import numpy as np

from .bandlim import SincBandLimited, for_band_radius
from .bounds import derived_constants, error_bound_rhs, schedule_for_delta
from .errors import ConditioningError, DomainError
from .interp import fit_interpolant, max_error_on_grid
from .shape import MNProblem, mn_value
from .simplex import evenly_spaced_points, scale_to_diameter, unit_corner_simplex

__all__ = ["resolve_testfn", "run_verify", "run_sweep", "EVAL_DEGREE_FACTOR"]

# The evaluation lattice is this many times denser (in degree) than the nodes.
EVAL_DEGREE_FACTOR = 4


def resolve_testfn(n, sigma, sigma0=None, testfn="sinc"):
    """Build the requested test function inside the band of radius sigma."""
    if testfn != "sinc":
        raise DomainError(f"unknown test function {testfn!r}; available: sinc")
    if sigma0 is None:
        return for_band_radius(n, sigma)
    f = SincBandLimited(n=n, sigma0=float(sigma0))
    if f.band_radius > sigma * (1.0 + 1e-12):
        raise DomainError(
            f"sigma0={sigma0:g} puts the band radius {f.band_radius:g} outside sigma={sigma:g}"
        )
    return f


def _setup(n, beta, b0, sigma, delta, sigma0, testfn):
    constants = derived_constants(n, beta, b0)
    schedule = schedule_for_delta(constants, delta)
    simplex = scale_to_diameter(unit_corner_simplex(n), schedule.r)
    nodes = evenly_spaced_points(simplex, schedule.l)
    grid = evenly_spaced_points(simplex, EVAL_DEGREE_FACTOR * schedule.l)
    f = resolve_testfn(n, sigma, sigma0=sigma0, testfn=testfn)
    return constants, schedule, nodes, grid, f


def _one_run(n, beta, sigma, delta, c, constants, schedule, nodes, grid, f, s_mn):
    rhs = error_bound_rhs(
        n, beta, c, sigma, delta, schedule.l, constants, f.l2_norm(), s_mn=s_mn
    )
    values = f(nodes.points)
    try:
        interpolant = fit_interpolant(beta, c, nodes, values)
    except ConditioningError as exc:
        return {
            "c": float(c),
            "empirical_max_error": None,
            "bound_rhs": rhs,
            "ratio": None,
            "holds": None,
            "cond_estimate": None,
            "node_residual": None,
            "inconclusive": True,
            "note": str(exc),
        }
    empirical = max_error_on_grid(interpolant, f, grid.points)
    # the residual lets a holds=false be told apart from a broken solve
    residual = float(np.max(np.abs(interpolant.predict(nodes.points) - values)))
    return {
        "c": float(c),
        "empirical_max_error": empirical,
        "bound_rhs": rhs,
        "ratio": empirical / rhs if rhs > 0.0 else None,
        "holds": bool(empirical <= rhs),
        "cond_estimate": interpolant.cond_estimate_,
        "node_residual": residual,
        "inconclusive": False,
    }


def run_verify(n, beta, b0, sigma, delta, c_values, s_mn=1.0, sigma0=None, testfn="sinc"):
    """Verify the bound for each c; returns a JSON-ready report dict."""
    constants, schedule, nodes, grid, f = _setup(n, beta, b0, sigma, delta, sigma0, testfn)
    problem = MNProblem.from_params(n, beta, sigma, schedule.l)  # fails fast on the gap
    runs = [
        _one_run(n, beta, sigma, delta, c, constants, schedule, nodes, grid, f, s_mn)
        for c in c_values
    ]
    return {
        "case": problem.case,
        "constants": {
            "rho": float(constants.rho),
            "delta0_const": float(constants.delta0_const),
            "s": constants.s,
            "branch": constants.branch,
            "C": constants.C,
            "delta_max": constants.delta_max,
            "lambda_prime": constants.lambda_prime,
        },
        "schedule": {
            "delta": schedule.delta,
            "l": schedule.l,
            "r": schedule.r,
            "node_count": len(nodes),
            "eval_degree": EVAL_DEGREE_FACTOR * schedule.l,
        },
        "testfn": {
            "name": testfn,
            "sigma0": f.sigma0,
            "band_radius": f.band_radius,
            "l2_norm": f.l2_norm(),
        },
        "runs": runs,
    }


def run_sweep(n, beta, b0, sigma, delta, c_lo, c_hi, num, s_mn=1.0, sigma0=None, testfn="sinc"):
    """Per-c rows (c, empirical_max_error, bound_rhs, mn_value) on a log grid.

    Rows share one grid so the predicted-optimal and empirically best c can
    be compared column against column in a single file.
    """
    if not (0.0 < c_lo < c_hi):
        raise DomainError(f"invalid sweep interval [{c_lo!r}, {c_hi!r}]")
    if num < 2:
        raise DomainError(f"need at least 2 sweep points, got {num!r}")
    constants, schedule, nodes, grid, f = _setup(n, beta, b0, sigma, delta, sigma0, testfn)
    problem = MNProblem.from_params(n, beta, sigma, schedule.l)
    step = (math.log(c_hi) - math.log(c_lo)) / (num - 1)
    c_grid = [math.exp(math.log(c_lo) + i * step) for i in range(num)]
    rows = []
    for c in c_grid:
        run = _one_run(n, beta, sigma, delta, c, constants, schedule, nodes, grid, f, s_mn)
        empirical = run["empirical_max_error"]
        rows.append(
            (
                c,
                float("nan") if empirical is None else empirical,
                run["bound_rhs"],
                mn_value(problem, c),
            )
        )
    return problem, schedule, rows
