"""Exception hierarchy shared by the library and the CLI.

The CLI maps these onto process exit codes: DomainError -> 2,
UnsupportedCaseError -> 3, ConditioningError -> 4.
"""


class MQShapeError(Exception):
    """Base class for all mqshape errors."""


class DomainError(MQShapeError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class UnisolvencyError(DomainError):
    """The node set cannot determine the required polynomial space."""


class UnsupportedCaseError(MQShapeError):
    """The (n, beta) combination falls outside the supported error-bound cases."""


class ConditioningError(MQShapeError):
    """The interpolation system is numerically singular at the requested shape parameter."""
