"""Polynomial-augmented kernel interpolation as a scikit-learn estimator.

Fitting solves the symmetric saddle-point system

    [ A   P ] [ coef      ]   [ y ]
    [ P^T 0 ] [ poly_coef ] = [ 0 ]

where A_ij = h(x_i - x_j) and P contains the monomials of total degree at
most m-1 evaluated at the nodes (empty when m = 0).  The system is solved by
dense LU with partial pivoting; a 1-norm condition estimate is reported with
every fit and numerically singular systems are refused rather than solved
silently.
"""

import warnings

import numpy as np
from scipy.linalg import LinAlgWarning, get_lapack_funcs, lu_factor, lu_solve
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .errors import ConditioningError, UnisolvencyError
from .kernel import Kernel, cpd_order
from .simplex import compositions_colex

__all__ = [
    "PolyBasis",
    "MultiquadricInterpolator",
    "fit_interpolant",
    "max_error_on_grid",
    "PIVOT_RTOL",
]

# A pivot below this fraction of ||M||_1 marks the system numerically singular.
PIVOT_RTOL = 1e-13


class PolyBasis:
    """Monomial basis of total degree <= degree in n variables.

    Exponent multi-indices are held in graded colexicographic order so the
    augmented system is reproducible.  degree = -1 denotes the empty basis
    (kernels of conditional order 0 need no polynomial part).
    """

    def __init__(self, n, degree):
        self.n = int(n)
        self.degree = int(degree)
        exps = []
        for total in range(0, self.degree + 1):
            exps.extend(compositions_colex(total, self.n))
        self.exponents = np.array(exps, dtype=int).reshape(len(exps), self.n)

    @property
    def q(self):
        """Dimension of the polynomial space (0 for the empty basis)."""
        return self.exponents.shape[0]

    def design_matrix(self, points):
        """Monomial values at each point, one basis column per monomial."""
        pts = np.asarray(points, dtype=float)
        out = np.ones((pts.shape[0], self.q))
        for j, exp in enumerate(self.exponents):
            for axis, power in enumerate(exp):
                if power:
                    out[:, j] *= pts[:, axis] ** power
        return out


class MultiquadricInterpolator(RegressorMixin, BaseEstimator):
    """Interpolator built on the (inverse) multiquadric kernel.

    Parameters
    ----------
    beta : float, default=-1.0
        Kernel exponent; must not be an even nonnegative integer.
        Negative values give inverse multiquadrics (conditional order 0),
        positive values give multiquadrics requiring polynomial augmentation.
    c : float, default=1.0
        Shape parameter, must be positive.

    Attributes
    ----------
    kernel_ : Kernel
        Validated kernel with the precomputed Gamma prefactor.
    centers_ : ndarray of shape (n_samples, n_features)
        The interpolation nodes seen during fit.
    coef_ : ndarray of shape (n_samples,)
        Kernel coefficients.
    poly_coef_ : ndarray of shape (q,)
        Coefficients of the polynomial part (empty when the conditional
        order is 0).
    poly_basis_ : PolyBasis
        Monomial basis of the polynomial part.
    cond_estimate_ : float
        1-norm condition estimate of the saddle-point matrix.
    n_features_in_ : int
        Number of features seen during fit.

    Notes
    -----
    When the kernel has conditional order m >= 1 the nodes must determine
    polynomials of degree m-1 (an evenly spaced simplex lattice of degree
    l >= m-1 always does); otherwise fit raises UnisolvencyError.
    """

    def __init__(self, beta=-1.0, c=1.0):
        self.beta = beta
        self.c = c

    def fit(self, X, y):
        """Solve the augmented interpolation system for the given data.

        Parameters
        ----------
        X : array-like of shape (n_samples, n_features)
            Interpolation nodes.
        y : array-like of shape (n_samples,)
            Values to interpolate.

        Returns
        -------
        self : object
            Fitted interpolator.
        """
        X, y = check_X_y(X, y, y_numeric=True, dtype=np.float64)
        kernel = Kernel(self.beta, self.c)
        basis = PolyBasis(X.shape[1], kernel.m - 1)
        n_nodes = X.shape[0]
        q = basis.q

        size = n_nodes + q
        system = np.zeros((size, size))
        system[:n_nodes, :n_nodes] = kernel.pairwise(X, X)
        if q:
            design = basis.design_matrix(X)
            if np.linalg.matrix_rank(design) < q:
                raise UnisolvencyError(
                    f"{n_nodes} nodes do not determine polynomials of degree "
                    f"{basis.degree} in {X.shape[1]} variables"
                )
            system[:n_nodes, n_nodes:] = design
            system[n_nodes:, :n_nodes] = design.T
        rhs = np.concatenate([y, np.zeros(q)])

        with warnings.catch_warnings():
            # an exactly singular factorization is caught by the pivot check below
            warnings.simplefilter("ignore", LinAlgWarning)
            lu, piv = lu_factor(system)
        anorm = np.linalg.norm(system, 1)
        if np.abs(np.diag(lu)).min() < PIVOT_RTOL * anorm:
            raise ConditioningError(
                f"interpolation system is numerically singular at c={kernel.c:g} "
                f"(pivot below {PIVOT_RTOL:g} * ||A||)"
            )
        gecon = get_lapack_funcs("gecon", (system,))
        rcond, info = gecon(lu, anorm, norm="1")
        solution = lu_solve((lu, piv), rhs)

        self.kernel_ = kernel
        self.centers_ = X
        self.n_features_in_ = X.shape[1]
        self.coef_ = solution[:n_nodes]
        self.poly_coef_ = solution[n_nodes:]
        self.poly_basis_ = basis
        self.cond_estimate_ = float(1.0 / rcond) if rcond > 0.0 else float("inf")
        return self

    def predict(self, X):
        """Evaluate the interpolant at the given points.

        Parameters
        ----------
        X : array-like of shape (n_samples, n_features)

        Returns
        -------
        ndarray of shape (n_samples,)
        """
        check_is_fitted(self, "coef_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(
                f"X has {X.shape[1]} features, expected {self.n_features_in_}"
            )
        values = self.kernel_.pairwise(X, self.centers_) @ self.coef_
        if self.poly_basis_.q:
            values = values + self.poly_basis_.design_matrix(X) @ self.poly_coef_
        return values

    def __call__(self, X):
        return self.predict(X)


def fit_interpolant(beta, c, nodes, values):
    """Fit on a lattice NodeSet, checking unisolvency from the lattice degree.

    A degree-l lattice determines polynomials of degree l, so the augmented
    system is uniquely solvable whenever l >= m-1.
    """
    m = cpd_order(beta)
    if nodes.degree < m - 1:
        raise UnisolvencyError(
            f"lattice degree {nodes.degree} cannot determine polynomials of "
            f"degree {m - 1} required by beta={beta:g}"
        )
    return MultiquadricInterpolator(beta=beta, c=c).fit(nodes.points, values)


def max_error_on_grid(interpolant, target, points):
    """Largest absolute deviation |target - interpolant| over the points."""
    pts = np.asarray(points, dtype=float)
    return float(np.max(np.abs(np.asarray(target(pts), dtype=float) - interpolant.predict(pts))))
