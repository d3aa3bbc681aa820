"""The (inverse) multiquadric radial kernel and its conditional order.

The kernel is h(x) = Gamma(-beta/2) * (c^2 + ||x||^2)^(beta/2) with shape
parameter c > 0 and exponent beta excluded from {0, 2, 4, ...}.  It is
conditionally positive definite of order m = max(0, ceil(beta/2)), which
fixes the polynomial degree m-1 that must augment the interpolation system.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .special import gamma

__all__ = ["Kernel", "cpd_order"]

_EVEN_TOL = 1e-12


def _is_even_nonneg_integer(beta):
    if beta < -_EVEN_TOL:
        return False
    half = beta / 2.0
    return abs(half - round(half)) <= _EVEN_TOL


def cpd_order(beta):
    """Conditional positive-definiteness order max(0, ceil(beta/2))."""
    beta = float(beta)
    if _is_even_nonneg_integer(beta):
        raise DomainError(
            f"beta={beta:g} is an even nonnegative integer; the kernel exponent must avoid {{0, 2, 4, ...}}"
        )
    return max(0, math.ceil(beta / 2.0))


@dataclass(frozen=True)
class Kernel:
    """Validated kernel parameters with the precomputed Gamma prefactor.

    The prefactor is computed once so evaluation inside solve/sweep loops is
    a single power and multiply.
    """

    beta: float
    c: float
    m: int = field(init=False)
    gamma_factor: float = field(init=False)

    def __post_init__(self):
        beta = float(self.beta)
        c = float(self.c)
        m = cpd_order(beta)
        if not c > 0.0:
            raise DomainError(f"shape parameter c must be positive, got {c!r}")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "gamma_factor", gamma(-beta / 2.0))

    def radial(self, sq_dist):
        """Kernel profile as a function of squared distance (vectorized)."""
        sq = np.asarray(sq_dist, dtype=float)
        return self.gamma_factor * (self.c ** 2 + sq) ** (self.beta / 2.0)

    def evaluate(self, x):
        """Kernel value at a displacement vector x (scalar allowed in 1-d)."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        return float(self.radial(np.dot(x, x)))

    def pairwise(self, points, centers):
        """Matrix of kernel values h(points_i - centers_j)."""
        p = np.asarray(points, dtype=float)
        q = np.asarray(centers, dtype=float)
        sq = ((p[:, None, :] - q[None, :, :]) ** 2).sum(axis=-1)
        return self.radial(sq)
