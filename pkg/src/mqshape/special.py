"""Special-function evaluations used by the kernel and the MN objective.

All routines are total and deterministic, with explicit domain errors.
"""

import math

from scipy.special import k0 as _scipy_k0

from .errors import DomainError

__all__ = ["gamma", "bessel_k0", "binomial"]


def gamma(x):
    """Gamma function for real non-pole arguments.

    Negative non-integer arguments are supported (needed for the kernel
    prefactor Gamma(-beta/2) with beta > 0).
    """
    x = float(x)
    if x <= 0.0 and x == math.floor(x):
        raise DomainError(f"gamma is undefined at the pole x={x:g}")
    try:
        return math.gamma(x)
    except ValueError as exc:  # pragma: no cover - pole check above is exhaustive
        raise DomainError(f"gamma is undefined at x={x:g}") from exc


def bessel_k0(x):
    """Modified Bessel function of the second kind, order zero.

    Equals the integral of exp(-x*cosh(t)) over t in [0, inf); strictly
    decreasing and positive on (0, inf), with a logarithmic blow-up at 0+.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"bessel_k0 requires x > 0, got x={x:g}")
    return float(_scipy_k0(x))


def binomial(a, b):
    """Exact binomial coefficient for nonnegative integers b <= a."""
    if a != int(a) or b != int(b):
        raise DomainError(f"binomial requires integers, got ({a!r}, {b!r})")
    a, b = int(a), int(b)
    if a < 0 or b < 0:
        raise DomainError(f"binomial requires nonnegative arguments, got ({a}, {b})")
    if b > a:
        raise DomainError(f"binomial requires b <= a, got ({a}, {b})")
    return math.comb(a, b)
