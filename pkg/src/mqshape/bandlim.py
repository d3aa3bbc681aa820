"""Concrete band-limited test functions with closed-form L2 norms.

The tensor-sinc family f(x) = prod_i sin(sigma0*x_i) / (pi*x_i) has a
spectrum equal to the indicator of the box [-sigma0, sigma0]^n, hence lies
in the band-limited class of radius sigma0*sqrt(n) (the ball enclosing the
box), and ||f||_L2 = (sigma0/pi)^(n/2) exactly.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = ["SincBandLimited", "for_band_radius"]

# Below this |sigma0*x| the sin(t)/t factor switches to its 2-term series;
# the truncation error is ~t^4/120 < 1e-12 relative.
_SERIES_CUTOFF = 1e-4


@dataclass(frozen=True)
class SincBandLimited:
    """Tensor product of scaled sinc factors sin(sigma0*x_i)/(pi*x_i)."""

    n: int
    sigma0: float

    def __post_init__(self):
        if self.n != int(self.n) or int(self.n) < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.n!r}")
        if not self.sigma0 > 0.0:
            raise DomainError(f"sigma0 must be positive, got {self.sigma0!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "sigma0", float(self.sigma0))

    @property
    def band_radius(self):
        """Radius of the smallest ball containing the frequency box."""
        return self.sigma0 * math.sqrt(self.n)

    def l2_norm(self):
        """Exact L2 norm (sigma0/pi)^(n/2)."""
        return (self.sigma0 / math.pi) ** (self.n / 2.0)

    def __call__(self, x):
        pts = np.asarray(x, dtype=float)
        scalar_in = pts.ndim == 0 or (pts.ndim == 1 and self.n > 1)
        if pts.ndim == 0:
            pts = pts.reshape(1, 1)
        elif pts.ndim == 1:
            # A bare vector is one point in R^n, or a batch of points in R^1.
            pts = pts.reshape(1, -1) if self.n > 1 else pts.reshape(-1, 1)
        if pts.shape[-1] != self.n:
            raise DomainError(f"points must have {self.n} coordinates, got shape {pts.shape}")
        t = self.sigma0 * pts
        ratio = np.empty_like(t)
        small = np.abs(t) < _SERIES_CUTOFF
        ts = t[small]
        ratio[small] = 1.0 - ts * ts / 6.0
        tb = t[~small]
        ratio[~small] = np.sin(tb) / tb
        values = ((self.sigma0 / math.pi) * ratio).prod(axis=-1)
        return float(values[0]) if scalar_in else values


def for_band_radius(n, sigma):
    """The widest tensor-sinc member whose band radius does not exceed sigma."""
    if not sigma > 0.0:
        raise DomainError(f"band radius sigma must be positive, got {sigma!r}")
    return SincBandLimited(n=n, sigma0=sigma / math.sqrt(n))
