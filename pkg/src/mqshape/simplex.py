"""n-simplex geometry and evenly spaced lattice nodes.

A degree-l lattice on a simplex consists of the points whose barycentric
coordinates are (k_1/l, ..., k_{n+1}/l) with nonnegative integers k_i summing
to l.  These are the interpolation centers used throughout the package.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .special import binomial

__all__ = [
    "Simplex",
    "NodeSet",
    "unit_corner_simplex",
    "barycentric_to_cartesian",
    "diameter",
    "scale_to_diameter",
    "evenly_spaced_points",
    "compositions_colex",
]

# Relative tolerance for the affine-independence determinant check.
_DEGENERACY_RTOL = 1e-12


def compositions_colex(total, parts):
    """Yield all tuples of `parts` nonnegative integers summing to `total`.

    Ordering is ascending colexicographic (the last coordinate is the most
    significant), which is the canonical node order everywhere in this
    package: it makes system matrices and CSV output reproducible.
    """
    if parts < 1:
        raise DomainError(f"need at least one part, got {parts}")
    if parts == 1:
        yield (total,)
        return
    for last in range(total + 1):
        for head in compositions_colex(total - last, parts - 1):
            yield head + (last,)


@dataclass(frozen=True)
class Simplex:
    """An n-simplex given by n+1 affinely independent vertices in R^n."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[0] != v.shape[1] + 1 or v.shape[1] < 1:
            raise DomainError(
                f"simplex needs n+1 vertices in R^n, got array of shape {v.shape}"
            )
        edges = v[1:] - v[0]
        scale = float(np.max(np.linalg.norm(edges, axis=1)))
        if scale == 0.0 or abs(np.linalg.det(edges)) <= _DEGENERACY_RTOL * scale ** self.dim:
            raise DomainError("vertices are affinely dependent (degenerate simplex)")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    @property
    def dim(self):
        return self.vertices.shape[1]


@dataclass(frozen=True)
class NodeSet:
    """The degree-l lattice of a simplex, in canonical (colex) order."""

    simplex: Simplex
    degree: int
    indices: np.ndarray = field(repr=False)
    points: np.ndarray = field(repr=False)

    def __post_init__(self):
        for name in ("indices", "points"):
            arr = np.asarray(getattr(self, name))
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __len__(self):
        return self.points.shape[0]


def unit_corner_simplex(n):
    """The simplex with vertices {0, e_1, ..., e_n}."""
    if n != int(n) or int(n) < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")
    n = int(n)
    return Simplex(np.vstack([np.zeros((1, n)), np.eye(n)]))


def barycentric_to_cartesian(simplex, coords):
    """Map barycentric coordinates (must sum to 1) to a cartesian point."""
    b = np.asarray(coords, dtype=float)
    n = simplex.dim
    if b.shape != (n + 1,):
        raise DomainError(f"expected {n + 1} barycentric coordinates, got shape {b.shape}")
    if abs(b.sum() - 1.0) > 1e-12:
        raise DomainError(f"barycentric coordinates must sum to 1, got {b.sum()!r}")
    return b @ simplex.vertices


def diameter(simplex):
    """Largest pairwise vertex distance (attained at vertices for a simplex)."""
    v = simplex.vertices
    diff = v[:, None, :] - v[None, :, :]
    return float(np.sqrt((diff ** 2).sum(axis=-1)).max())


def scale_to_diameter(simplex, r):
    """Similarity transform about vertex 0 so the diameter becomes r."""
    if not r > 0.0:
        raise DomainError(f"target diameter must be positive, got {r!r}")
    v = simplex.vertices
    factor = float(r) / diameter(simplex)
    return Simplex(v[0] + factor * (v - v[0]))


def evenly_spaced_points(simplex, l):
    """All lattice nodes of degree l, in colexicographic multi-index order.

    The node count is binomial(n+l, n).  Degree 0 (a single point) is
    rejected: it is not an interpolation set.
    """
    if l != int(l) or int(l) < 1:
        raise DomainError(f"lattice degree must be a positive integer, got {l!r}")
    l = int(l)
    n = simplex.dim
    indices = np.array(list(compositions_colex(l, n + 1)), dtype=int)
    points = (indices / float(l)) @ simplex.vertices
    assert indices.shape[0] == binomial(n + l, n)
    return NodeSet(simplex=simplex, degree=l, indices=indices, points=points)
