"""Shape-parameter selection for (inverse) multiquadric RBF interpolation.

The package builds the MN error-bound objective for band-limited data,
minimizes it over c in (0, inf) to recommend a shape parameter, and verifies
the underlying bound by interpolating band-limited test functions on evenly
spaced simplex lattices.
"""

__version__ = "0.1.0"

from .bandlim import SincBandLimited, for_band_radius
from .bounds import (
    BoundConstants,
    ScheduleItem,
    admissible_l,
    derived_constants,
    error_bound_rhs,
    native_norm_bound,
    rho_delta0,
    schedule_for_delta,
    unit_ball_volume,
)
from .errors import (
    ConditioningError,
    DomainError,
    MQShapeError,
    UnisolvencyError,
    UnsupportedCaseError,
)
from .interp import (
    MultiquadricInterpolator,
    PolyBasis,
    fit_interpolant,
    max_error_on_grid,
)
from .kernel import Kernel, cpd_order
from .shape import (
    MNProblem,
    MNResult,
    classify,
    closed_form_cstar,
    default_sweep,
    mn_curve,
    mn_value,
    optimal_c,
)
from .simplex import (
    NodeSet,
    Simplex,
    barycentric_to_cartesian,
    diameter,
    evenly_spaced_points,
    scale_to_diameter,
    unit_corner_simplex,
)
from .special import bessel_k0, binomial, gamma
from .verify import run_sweep, run_verify

__all__ = [
    "__version__",
    "SincBandLimited",
    "for_band_radius",
    "BoundConstants",
    "ScheduleItem",
    "admissible_l",
    "derived_constants",
    "error_bound_rhs",
    "native_norm_bound",
    "rho_delta0",
    "schedule_for_delta",
    "unit_ball_volume",
    "ConditioningError",
    "DomainError",
    "MQShapeError",
    "UnisolvencyError",
    "UnsupportedCaseError",
    "MultiquadricInterpolator",
    "PolyBasis",
    "fit_interpolant",
    "max_error_on_grid",
    "Kernel",
    "cpd_order",
    "MNProblem",
    "MNResult",
    "classify",
    "closed_form_cstar",
    "default_sweep",
    "mn_curve",
    "mn_value",
    "optimal_c",
    "NodeSet",
    "Simplex",
    "barycentric_to_cartesian",
    "diameter",
    "evenly_spaced_points",
    "scale_to_diameter",
    "unit_corner_simplex",
    "bessel_k0",
    "binomial",
    "gamma",
    "run_sweep",
    "run_verify",
]
