"""Complete elliptic integral of the first kind by series, AGM and Gaussian quadrature."""

from .cei1 import (
    Cei1Request,
    Diagnostics,
    Method,
    elliptic_k,
    evaluate,
    k_agm,
    k_from_m,
    k_gc,
    k_gl,
    k_series,
)
from .errors import (
    DimensionMismatch,
    DomainError,
    EllipkError,
    InvalidInput,
    InvalidInterval,
    InvalidOrder,
    NonConvergence,
    ZeroSlope,
)
from .fixed_point import agm, euclid_dist, solve_fixed_point
from .ortho_poly import Family, eval_recurrence, eval_recurrence_derivative, legendre, legendre_derivative
from .quadrature import (
    ErrorBoundKernel,
    estimate_n_gc,
    gauss_chebyshev_rule,
    gauss_legendre_rule,
    integrate_gc,
    integrate_gl,
)
from .root_finding import NewtonProblem, legendre_roots, solve_root
from .series import SeriesSpec, sum_series

__version__ = "0.1.0"
