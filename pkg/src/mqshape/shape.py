"""The MN objective and its global minimization over c in (0, inf).

MN(c) is the c-dependent factor of the interpolation error bound for
band-limited data; its minimizer is the recommended shape parameter.  The
supported parameter regions split into four cases:

* Case1a: beta > 0 with 1 + beta - n - 4l >= 0.  MN is increasing, so the
  best c is as small as the sweep allows.
* Case1b: beta > 0 with 1 + beta - n - 4l < 0.  MN(c) = exp(c*sigma/2) * c^p
  diverges at both ends and has the unique stationary point c* = -2p/sigma.
* Case2: beta < 0 with n + beta >= 1 or n + beta = -1.  Same MN form as
  Case1b; the exponent is always negative here.
* Case3: beta = -1, n = 1.  MN is piecewise: a decreasing power for
  c <= 1/sigma and a power times a bracket mixing K0(1), sqrt(c*sigma) and
  exp(c*sigma) beyond it, with an upward jump at c = 1/sigma.

Remaining beta < 0 combinations are not covered by the underlying norm
bounds and raise UnsupportedCaseError.
"""

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext

import numpy as np

from .errors import DomainError, MQShapeError, UnsupportedCaseError
from .special import bessel_k0

__all__ = [
    "CASE_1A",
    "CASE_1B",
    "CASE_2",
    "CASE_3",
    "classify",
    "MNProblem",
    "MNResult",
    "mn_value",
    "log_mn_value",
    "closed_form_cstar",
    "optimal_c",
    "mn_curve",
    "default_sweep",
    "golden_section_min",
]

CASE_1A = "Case1a"
CASE_1B = "Case1b"
CASE_2 = "Case2"
CASE_3 = "Case3"

_REGION_TOL = 1e-12

# Fixed constants of the Case-3 bracket.
_K0_AT_1 = bessel_k0(1.0)
_TWO_SQRT3 = 2.0 * math.sqrt(3.0)

# Absolute tolerance on log(c) for bracketed minimization.
_GOLDEN_TOL = 1e-10

_S_MN_NOTE = (
    "the beta > 0 bound carries a structural constant (s_mn, default 1) that "
    "scales it uniformly in c; optimal_c is unaffected but absolute bound "
    "values are up to that constant"
)


def _is_bessel_case(n, beta):
    return n == 1 and abs(beta + 1.0) <= _REGION_TOL


def classify(n, beta, l):
    """Case tag for (n, beta, l); raises UnsupportedCaseError in the gap."""
    n = int(n)
    beta = float(beta)
    l = int(l)
    if n < 1 or l < 1:
        raise DomainError(f"need n >= 1 and l >= 1, got n={n}, l={l}")
    if beta > 0.0:
        return CASE_1A if 1.0 + beta - n - 4.0 * l >= 0.0 else CASE_1B
    if _is_bessel_case(n, beta):
        return CASE_3
    total = n + beta
    if total >= 1.0 or abs(total + 1.0) <= _REGION_TOL:
        return CASE_2
    raise UnsupportedCaseError(
        f"beta={beta:g}, n={n} is outside the supported region: negative beta "
        f"needs n+beta >= 1 or n+beta = -1, or (beta, n) = (-1, 1)"
    )


@dataclass(frozen=True)
class MNProblem:
    """A classified MN objective: case tag, parameters and the c-exponent p."""

    case: str
    n: int
    beta: float
    sigma: float
    l: int
    p: float

    @classmethod
    def from_params(cls, n, beta, sigma, l):
        if not sigma > 0.0:
            raise DomainError(f"band radius sigma must be positive, got {sigma!r}")
        case = classify(n, beta, l)
        if case == CASE_3:
            p = beta / 2.0 - l
        else:
            p = (1.0 + beta - n - 4.0 * l) / 4.0
        return cls(case=case, n=int(n), beta=float(beta), sigma=float(sigma), l=int(l), p=p)


def log_mn_value(problem, c):
    """log MN(c); evaluated additively so large c*sigma cannot overflow."""
    c = float(c)
    if not c > 0.0:
        raise DomainError(f"shape parameter c must be positive, got {c!r}")
    if problem.case != CASE_3:
        return c * problem.sigma / 2.0 + problem.p * math.log(c)
    if c <= 1.0 / problem.sigma:
        return -0.5 * math.log(_K0_AT_1) + problem.p * math.log(c)
    t = c * problem.sigma
    log_a = -math.log(_K0_AT_1)
    log_b = math.log(_TWO_SQRT3) + 0.5 * math.log(t) + t
    hi, lo = (log_a, log_b) if log_a >= log_b else (log_b, log_a)
    bracket = hi + math.log1p(math.exp(lo - hi))
    return problem.p * math.log(c) + 0.5 * bracket


def mn_value(problem, c):
    """MN(c) for the classified problem; c must be positive.

    Saturates to inf when the value exceeds the double range (huge c*sigma);
    minimization always works on log_mn_value, so this only affects reporting.
    """
    log_value = log_mn_value(problem, c)
    if log_value >= 709.0:
        return math.inf
    return math.exp(log_value)


def closed_form_cstar(n, beta, l, sigma):
    """Stationary point (n + 4l - beta - 1) / (2*sigma) of exp(c*sigma/2)*c^p.

    Only defined when the exponent p is negative (Case1b and Case2), where
    MN diverges at both ends of (0, inf) and the stationary point is the
    unique global minimizer.
    """
    case = classify(n, beta, l)
    if case not in (CASE_1B, CASE_2):
        raise DomainError(f"closed-form minimizer requires Case1b or Case2, got {case}")
    if not sigma > 0.0:
        raise DomainError(f"band radius sigma must be positive, got {sigma!r}")
    return (n + 4.0 * l - beta - 1.0) / (2.0 * sigma)


def golden_section_min(fn, lo, hi, tol=_GOLDEN_TOL):
    """Golden-section search for the minimum of a unimodal fn on [lo, hi].

    Returns (x, fn(x), iterations).  tol is absolute on the argument.
    """
    if not lo < hi:
        raise DomainError(f"invalid bracket [{lo!r}, {hi!r}]")
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    inv_phi2 = (3.0 - math.sqrt(5.0)) / 2.0
    a, b = lo, hi
    h = b - a
    c = a + inv_phi2 * h
    d = a + inv_phi * h
    yc = fn(c)
    yd = fn(d)
    steps = max(0, int(math.ceil(math.log(tol / h) / math.log(inv_phi)))) if h > tol else 0
    for _ in range(steps):
        if yc < yd:
            b, d, yd = d, c, yc
            h *= inv_phi
            c = a + inv_phi2 * h
            yc = fn(c)
        else:
            a, c, yc = c, d, yd
            h *= inv_phi
            d = a + inv_phi * h
            yd = fn(d)
    x = c if yc < yd else d
    return x, min(yc, yd), steps


@dataclass(frozen=True)
class MNResult:
    """Located minimizer of MN with solver diagnostics."""

    case: str
    optimal_c: float
    mn_at_optimum: float
    boundary_optimum: bool
    branch_note: str
    diagnostics: dict = field(default_factory=dict)


def default_sweep(sigma):
    """Default c search window [1e-3, 1e3] scaled by 1/sigma."""
    return 1e-3 / sigma, 1e3 / sigma


def _golden_log_c(problem, c_lo, c_hi):
    fn = lambda u: log_mn_value(problem, math.exp(u))
    u, _, iters = golden_section_min(fn, math.log(c_lo), math.log(c_hi))
    c = math.exp(u)
    return c, mn_value(problem, c), iters


def _smooth_log_mn(problem):
    """log MN(e^u) for Case1b/2 evaluated in 40-digit decimal arithmetic.

    Near a quadratic minimum a value-comparison search cannot resolve the
    argmin below sqrt(value noise); double precision floors that at ~1e-8
    relative, right at the cross-check tolerance.  Extended precision pushes
    the floor far below the bracket tolerance.
    """
    sigma_half = Decimal(problem.sigma) / 2
    p = Decimal(problem.p)

    def fn(u):
        with localcontext() as ctx:
            ctx.prec = 40
            du = Decimal(u)
            return sigma_half * du.exp() + p * du

    return fn


def optimal_c(problem, c_lo=None, c_hi=None):
    """Global minimizer of MN over the sweep interval.

    Case1a returns the sweep lower limit with boundary_optimum set (MN is
    nondecreasing).  Case1b/Case2 return the closed-form stationary point,
    cross-checked against a golden-section search.  Case3 compares the
    left-piece minimum at c = 1/sigma with the golden-section minimum of the
    right piece and reports which piece hosts the winner.
    """
    lo_default, hi_default = default_sweep(problem.sigma)
    c_lo = lo_default if c_lo is None else float(c_lo)
    c_hi = hi_default if c_hi is None else float(c_hi)
    if not (0.0 < c_lo < c_hi):
        raise DomainError(f"invalid sweep interval [{c_lo!r}, {c_hi!r}]")
    diagnostics = {"bracket": [c_lo, c_hi], "iterations": 0}

    if problem.case == CASE_1A:
        if problem.beta > 0.0:
            diagnostics["s_mn_note"] = _S_MN_NOTE
        return MNResult(
            case=problem.case,
            optimal_c=c_lo,
            mn_at_optimum=mn_value(problem, c_lo),
            boundary_optimum=True,
            branch_note="MN is nondecreasing; take c as small as the sweep allows",
            diagnostics=diagnostics,
        )

    if problem.case in (CASE_1B, CASE_2):
        cstar = closed_form_cstar(problem.n, problem.beta, problem.l, problem.sigma)
        if not (c_lo <= cstar <= c_hi):
            raise DomainError(
                f"sweep [{c_lo:g}, {c_hi:g}] does not contain the stationary point c*={cstar:g}"
            )
        u, _, iters = golden_section_min(
            _smooth_log_mn(problem), math.log(cstar / 10.0), math.log(cstar * 10.0)
        )
        numeric_c = math.exp(u)
        rel_diff = abs(numeric_c - cstar) / cstar
        if rel_diff > 1e-8:
            raise MQShapeError(
                f"golden-section cross-check disagrees with the closed form: "
                f"{numeric_c!r} vs {cstar!r}"
            )
        diagnostics.update({"iterations": iters, "cross_check_c": numeric_c, "cross_check_rel_diff": rel_diff})
        if problem.beta > 0.0:
            diagnostics["s_mn_note"] = _S_MN_NOTE
        return MNResult(
            case=problem.case,
            optimal_c=cstar,
            mn_at_optimum=mn_value(problem, cstar),
            boundary_optimum=False,
            branch_note="unique stationary point of exp(c*sigma/2)*c^p",
            diagnostics=diagnostics,
        )

    # Case3: compare the left-piece minimum (the piece decreases towards
    # c = 1/sigma) with the interior minimum of the right piece.
    cut = 1.0 / problem.sigma
    candidates = []
    if c_lo <= cut:
        left_c = min(cut, c_hi)
        candidates.append(("left piece", left_c, mn_value(problem, left_c)))
    if c_hi > cut:
        right_lo = max(c_lo, cut * (1.0 + 1e-12))
        right_c, right_val, iters = _golden_log_c(problem, right_lo, c_hi)
        diagnostics["iterations"] = iters
        candidates.append(("right piece", right_c, right_val))
    branch, best_c, best_val = min(candidates, key=lambda item: item[2])
    diagnostics["candidates"] = {
        name: {"c": c, "mn": val} for name, c, val in candidates
    }
    if branch == "right piece" and abs(best_c - c_hi) / c_hi <= 1e-6:
        diagnostics["warning"] = (
            "minimizer sits at the sweep upper limit; the bracket may truncate the true minimum"
        )
    return MNResult(
        case=problem.case,
        optimal_c=best_c,
        mn_at_optimum=best_val,
        boundary_optimum=False,
        branch_note=f"minimum hosted on the {branch}"
        + (" (at the piece boundary c = 1/sigma)" if branch == "left piece" else ""),
        diagnostics=diagnostics,
    )


def mn_curve(problem, c_lo=None, c_hi=None, num=400):
    """Deterministic log-spaced samples of MN for CSV/SVG emission.

    For Case3 the grid always contains both one-sided samples at the piece
    boundary c = 1/sigma so the jump is visible in the output.
    """
    lo_default, hi_default = default_sweep(problem.sigma)
    c_lo = lo_default if c_lo is None else float(c_lo)
    c_hi = hi_default if c_hi is None else float(c_hi)
    if not (0.0 < c_lo < c_hi):
        raise DomainError(f"invalid sweep interval [{c_lo!r}, {c_hi!r}]")
    if num < 2:
        raise DomainError(f"need at least 2 samples, got {num!r}")
    grid = list(np.logspace(math.log10(c_lo), math.log10(c_hi), int(num)))
    if problem.case == CASE_3:
        cut = 1.0 / problem.sigma
        if c_lo <= cut < c_hi:
            grid.append(cut)
            grid.append(float(np.nextafter(cut, np.inf)))
    grid = sorted(set(grid))
    return [(c, mn_value(problem, c)) for c in grid]
