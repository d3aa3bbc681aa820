"""Error-bound constants and the explicit bound right-hand sides.

For a kernel (n, beta) the pair (rho, Delta0) is a branch-dependent rational
constant; from it and a user scale b0 follow C = max(2/(3*b0), 8*rho), the
admissible-delta ceiling delta_max = 1/(3C) and the convergence factor
lambda' = (2/3)^(1/(3C)).  For any delta in (0, delta_max) the bound applies
on a simplex of diameter r in [1/(3C), 2/(3C)] with an evenly spaced lattice
whose degree l lies in [1/(3C*delta), 2/(3C*delta)]; the bound then decays
like sqrt(delta) * lambda'^(1/delta) as delta shrinks.

rho and Delta0 are computed in exact rational arithmetic (they are products
and ratios of small integers); everything derived from b0 is floating point.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UnsupportedCaseError
from .kernel import cpd_order
from .shape import CASE_3, MNProblem, mn_value
from .special import bessel_k0, gamma

__all__ = [
    "RhoDelta",
    "BoundConstants",
    "ScheduleItem",
    "rho_delta0",
    "derived_constants",
    "admissible_l",
    "schedule_for_delta",
    "unit_ball_volume",
    "native_norm_bound",
    "error_bound_rhs",
]

_K0_AT_1 = bessel_k0(1.0)
_TWO_SQRT3 = 2.0 * math.sqrt(3.0)
_REGION_TOL = 1e-12


def _descending_product(top, count):
    """Product top * (top-1) * ... with exactly `count` factors; empty = 1."""
    out = 1
    for k in range(count):
        out *= top - k
    return out


@dataclass(frozen=True)
class RhoDelta:
    """Branch-resolved (rho, Delta0) with the intermediate integer s."""

    rho: Fraction
    delta0: Fraction
    s: int
    branch: str


def rho_delta0(n, beta):
    """The rational constants (rho, Delta0) for a kernel dimension/exponent.

    Branches:
      a-i : beta < n-3, beta < 0
      a-ii: beta < n-3, beta > 0
      b   : n-3 <= beta < n-1      (rho = Delta0 = 1)
      c   : beta >= n-1
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")
    beta = float(beta)
    cpd_order(beta)  # rejects even nonnegative integers
    if beta < n - 3:
        s = math.ceil((n - beta - 3) / 2.0)
        if beta < 0:
            rho = Fraction(3 + s, 3)
            delta0 = Fraction(_descending_product(2 + s, s)) / rho ** 2
            return RhoDelta(rho=rho, delta0=delta0, s=s, branch="a-i")
        m = math.ceil(beta / 2.0)
        rho = 1 + Fraction(s, 2 * m + 3)
        delta0 = Fraction(_descending_product(2 * m + 2 + s, s)) / rho ** (2 * m + 2)
        return RhoDelta(rho=rho, delta0=delta0, s=s, branch="a-ii")
    if beta < n - 1:
        return RhoDelta(rho=Fraction(1), delta0=Fraction(1), s=0, branch="b")
    s = -math.ceil((n - beta - 3) / 2.0)
    m = math.ceil(beta / 2.0)
    delta0 = Fraction(1, _descending_product(2 * m + 2, s))
    return RhoDelta(rho=Fraction(1), delta0=delta0, s=s, branch="c")


@dataclass(frozen=True)
class BoundConstants:
    """Everything the bound needs besides delta, l and c."""

    n: int
    beta: float
    b0: float
    rho: Fraction
    delta0_const: Fraction
    s: int
    branch: str
    C: float
    delta_max: float
    lambda_prime: float


def derived_constants(n, beta, b0):
    """C = max(2/(3*b0), 8*rho), delta_max = 1/(3C), lambda' = (2/3)^(1/(3C))."""
    if not b0 > 0.0:
        raise DomainError(f"b0 must be positive, got {b0!r}")
    rd = rho_delta0(n, beta)
    big_c = max(2.0 / (3.0 * b0), 8.0 * float(rd.rho))
    delta_max = 1.0 / (3.0 * big_c)
    lambda_prime = (2.0 / 3.0) ** (1.0 / (3.0 * big_c))
    return BoundConstants(
        n=int(n),
        beta=float(beta),
        b0=float(b0),
        rho=rd.rho,
        delta0_const=rd.delta0,
        s=rd.s,
        branch=rd.branch,
        C=big_c,
        delta_max=delta_max,
        lambda_prime=lambda_prime,
    )


def admissible_l(constants, delta):
    """Smallest integer lattice degree in [1/(3C*delta), 2/(3C*delta)].

    The interval has length 1/(3C*delta) > 1 for every delta below
    delta_max, so it always contains an integer.
    """
    if not 0.0 < delta < constants.delta_max:
        raise DomainError(
            f"delta must lie in (0, {constants.delta_max:g}), got {delta!r}"
        )
    lo = 1.0 / (3.0 * constants.C * delta)
    hi = 2.0 / (3.0 * constants.C * delta)
    l = math.ceil(lo)
    if l > hi:  # float pathology guard; cannot happen in exact arithmetic
        raise DomainError(f"no integer in the degree interval [{lo!r}, {hi!r}]")
    return l


@dataclass(frozen=True)
class ScheduleItem:
    """A concrete (delta, l, r) satisfying the bound hypotheses."""

    delta: float
    l: int
    r: float


def schedule_for_delta(constants, delta, r=None):
    """Pick the smallest admissible lattice degree and a simplex diameter.

    r defaults to the largest admissible diameter 2/(3C); an explicit r is
    validated against [1/(3C), 2/(3C)].
    """
    l = admissible_l(constants, delta)
    r_lo = 1.0 / (3.0 * constants.C)
    r_hi = 2.0 / (3.0 * constants.C)
    if r is None:
        r = r_hi
    elif not r_lo <= r <= r_hi:
        raise DomainError(
            f"simplex diameter must lie in [{r_lo:g}, {r_hi:g}], got {r!r}"
        )
    return ScheduleItem(delta=float(delta), l=l, r=float(r))


def unit_ball_volume(n):
    """Volume pi^(n/2) / Gamma(n/2 + 1) of the unit ball in R^n."""
    n = int(n)
    if n < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")
    return math.pi ** (n / 2.0) / gamma(n / 2.0 + 1.0)


def _negative_beta_regime(n, beta):
    """'bessel' for (beta, n) = (-1, 1), 'general' when n+beta >= 1 or = -1."""
    if n == 1 and abs(beta + 1.0) <= _REGION_TOL:
        return "bessel"
    total = n + beta
    if total >= 1.0 or abs(total + 1.0) <= _REGION_TOL:
        return "general"
    raise UnsupportedCaseError(
        f"no native-norm bound is available for beta={beta:g}, n={n}: negative "
        f"beta needs n+beta >= 1 or n+beta = -1, or (beta, n) = (-1, 1)"
    )


def native_norm_bound(n, beta, c, sigma, l2_norm, s_mn=1.0):
    """Upper bound on the native-space seminorm of a band-limited function.

    `sigma` is the band radius of the function (its spectrum vanishes outside
    the ball of that radius) and `l2_norm` its L2 norm; the same sigma is
    used everywhere in the bound.  For beta > 0 the bound carries the
    structural constant s_mn (see error_bound_rhs).  For the (beta, n) =
    (-1, 1) regime the two-piece bracket applies: the extra term is active
    only when 1/c < sigma.
    """
    n = int(n)
    c = float(c)
    sigma = float(sigma)
    if not c > 0.0:
        raise DomainError(f"shape parameter c must be positive, got {c!r}")
    if not sigma > 0.0:
        raise DomainError(f"band radius sigma must be positive, got {sigma!r}")
    if l2_norm < 0.0:
        raise DomainError(f"l2_norm must be nonnegative, got {l2_norm!r}")
    if not s_mn > 0.0:
        raise DomainError(f"s_mn must be positive, got {s_mn!r}")
    m = cpd_order(beta)
    if beta > 0.0:
        return (
            math.sqrt(math.factorial(m) * s_mn)
            * 2.0 ** (-n - (1.0 + beta) / 4.0)
            * math.pi ** (-n - 0.25)
            * sigma ** ((1.0 + beta + n) / 4.0)
            * math.exp(c * sigma / 2.0)
            * c ** ((1.0 - beta - n) / 4.0)
            * l2_norm
        )
    if _negative_beta_regime(n, beta) == "bessel":
        bracket = 1.0 / _K0_AT_1
        if 1.0 / c < sigma:
            bracket += _TWO_SQRT3 * math.sqrt(c * sigma) * math.exp(c * sigma)
        return (2.0 * math.pi) ** (-n) * 2.0 ** (-0.25) * math.sqrt(bracket) * l2_norm
    return (
        2.0 ** (-n - (1.0 + beta) / 4.0)
        * math.pi ** (-n - 0.25)
        * sigma ** ((1.0 + beta + n) / 4.0)
        * math.exp(c * sigma / 2.0)
        * c ** ((1.0 - n - beta) / 4.0)
        * l2_norm
    )


def error_bound_rhs(n, beta, c, sigma, delta, l, constants, l2_norm, s_mn=1.0):
    """Full right-hand side of the interpolation error bound.

    The value factors as a c-independent prefactor times MN(c) times the
    function's L2 norm, so its minimizer in c is exactly the MN minimizer.
    delta must lie below the constants' delta_max.
    """
    if not 0.0 < delta < constants.delta_max:
        raise DomainError(
            f"delta must lie in (0, {constants.delta_max:g}), got {delta!r}"
        )
    if l2_norm < 0.0:
        raise DomainError(f"l2_norm must be nonnegative, got {l2_norm!r}")
    if not s_mn > 0.0:
        raise DomainError(f"s_mn must be positive, got {s_mn!r}")
    problem = MNProblem.from_params(n, beta, sigma, l)
    n = int(n)
    common = (
        math.sqrt(n * unit_ball_volume(n))
        * math.sqrt(float(constants.delta0_const))
        * math.sqrt(3.0 * constants.C)
        * math.sqrt(delta)
        * constants.lambda_prime ** (1.0 / delta)
    )
    if problem.case == CASE_3:
        prefactor = 2.0 ** (-2.0 + (-3.0 * n + beta) / 4.0) * math.pi ** ((-3.0 * n - 1.0) / 4.0)
    elif beta > 0.0:
        m = cpd_order(beta)
        prefactor = (
            2.0 ** (-2.0 - 0.75 * n)
            * math.pi ** ((-2.0 - 3.0 * n) / 4.0)
            * math.sqrt(math.factorial(m) * s_mn)
            * sigma ** ((1.0 + beta + n) / 4.0)
        )
    else:
        prefactor = (
            2.0 ** (-2.0 - 0.75 * n)
            * math.pi ** ((-3.0 * n - 2.0) / 4.0)
            * sigma ** ((1.0 + beta + n) / 4.0)
        )
    return prefactor * common * mn_value(problem, c) * l2_norm
