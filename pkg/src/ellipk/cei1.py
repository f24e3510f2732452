"""Complete elliptic integral of the first kind, K(k), by four methods.

``K(k) = int_0^{pi/2} du / sqrt(1 - k^2 sin^2 u)`` for modulus ``0 <= k < 1``.
Commercial libraries usually take the parameter ``m = k^2`` instead;
:func:`k_from_m` accepts that convention.

All solvers work internally on ``m``. The ``k_*`` functions form
``m = k*k`` once, so ``k_from_m(k*k, method)`` and the matching ``k_*``
function return bit-identical results.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, NonConvergence
from .fixed_point import agm
from .quadrature import DEFAULT_ORDER, Kernel, integrate_gc, integrate_gl
from .series import SeriesSpec, sum_series

DEFAULT_EPS = 1e-9
HALF_PI = 0.5 * math.pi

#: Upper end of the modulus range on which the Gauss-Chebyshev kernel is
#: documented as accurate. k_gc accepts any k < 1.
GC_ACCURATE_K = math.sqrt(2.0) / 2.0


class Method(enum.Enum):
    SERIES = "series"
    AGM = "agm"
    GAUSS_CHEBYSHEV = "gc"
    GAUSS_LEGENDRE = "gl"


@dataclass(frozen=True)
class Diagnostics:
    """How much work a solver did: ``count`` series terms, AGM updates or quadrature nodes."""

    method: Method
    count: int
    unit: str
    eps: Optional[float] = None
    n: Optional[int] = None


def _check_modulus(k: float) -> None:
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus k must satisfy 0 <= k < 1, got {k!r}")


def _check_parameter(m: float) -> None:
    if not 0.0 <= m < 1.0:
        raise DomainError(f"parameter m must satisfy 0 <= m < 1, got {m!r}")


def _ker_gc_m(t: float, m: float) -> float:
    s = 1.0 - m * t * t
    if not s > 0.0:
        raise DomainError(f"Gauss-Chebyshev kernel singular at t={t!r}, k^2={m!r}")
    return 0.5 / math.sqrt(s)


def _ker_gl_m(u: float, m: float) -> float:
    sn = math.sin(u)
    s = 1.0 - m * sn * sn
    if not s > 0.0:
        raise DomainError(f"Gauss-Legendre kernel singular at u={u!r}, k^2={m!r}")
    return 1.0 / math.sqrt(s)


def ker_gc(t: float, k: float) -> float:
    """``0.5 / sqrt(1 - k^2 t^2)``: K(k) is the Chebyshev-weighted integral of this over [-1, 1]."""
    return _ker_gc_m(t, k * k)


def ker_gl(t: float, k: float) -> float:
    """``1 / sqrt(1 - k^2 sin^2 t)``: the defining integrand of K(k) on [0, pi/2]."""
    return _ker_gl_m(t, k * k)


KERNEL_GC = Kernel(ker_gc, k_domain=(0.0, 1.0))
KERNEL_GL = Kernel(ker_gl, k_domain=(0.0, 1.0))
_KERNEL_GC_M = Kernel(_ker_gc_m, k_domain=(0.0, 1.0))
_KERNEL_GL_M = Kernel(_ker_gl_m, k_domain=(0.0, 1.0))


class _RunningCoefficient:
    """Series coefficients ``[(2j-1)!!/(2j)!!]^2`` served in O(1) for consecutive j.

    Multiplies the same factors ``1 - 0.5/t`` in the same order as
    :func:`ellipk.series.cei1_coefficient`, so values are bit-identical.
    """

    def __init__(self):
        self._j = 0
        self._prod = 1.0

    def __call__(self, j: int) -> float:
        if j < self._j:
            self._j, self._prod = 0, 1.0
        while self._j < j:
            self._j += 1
            self._prod *= 1.0 - 0.5 / self._j
        return self._prod * self._prod


def _series_m(m, eps, max_terms):
    spec = SeriesSpec(_RunningCoefficient(), m, eps, max_terms)
    try:
        total, terms = sum_series(spec, full_output=True)
    except NonConvergence as exc:
        raise NonConvergence(
            f"{exc}; the series converges like k^(2j) and stalls as k -> 1, "
            "use the AGM method there"
        ) from exc
    return HALF_PI * total, Diagnostics(Method.SERIES, terms, "terms", eps=eps)


def _agm_m(m, eps):
    mean, iterations = agm(1.0, math.sqrt(1.0 - m), eps, full_output=True)
    return HALF_PI / mean, Diagnostics(Method.AGM, iterations, "iterations", eps=eps)


def _gc_m(m, n):
    value = integrate_gc(_KERNEL_GC_M, m, n, a=1.0)
    return value, Diagnostics(Method.GAUSS_CHEBYSHEV, n, "nodes", n=n)


def _gl_m(m, n):
    value = integrate_gl(_KERNEL_GL_M, m, n, a=0.0, b=HALF_PI)
    return value, Diagnostics(Method.GAUSS_LEGENDRE, n, "nodes", n=n)


def _finish(result, full_output):
    return result if full_output else result[0]


def k_series(k: float, eps: float = DEFAULT_EPS, *, max_terms: int = 10**7,
             full_output: bool = False):
    """K(k) as ``pi/2 * sum_j c_j k^(2j)``, summed to relative tolerance ``eps``.

    The series is in ``x = k^2``, not ``k``. Convergence is geometric with
    ratio ``k^2`` and becomes impractically slow near ``k = 1``; the
    ``max_terms`` cap then raises :class:`NonConvergence`.
    """
    _check_modulus(k)
    return _finish(_series_m(k * k, eps, max_terms), full_output)


def k_agm(k: float, eps: float = DEFAULT_EPS, *, full_output: bool = False):
    """K(k) as ``(pi/2) / AGM(1, sqrt(1 - k^2))``."""
    _check_modulus(k)
    return _finish(_agm_m(k * k, eps), full_output)


def k_gc(k: float, n: int = DEFAULT_ORDER, *, full_output: bool = False):
    """K(k) by ``n``-node Gauss-Chebyshev quadrature of :func:`ker_gc`.

    Accepted for all ``0 <= k < 1``; accuracy is only claimed for
    ``k < sqrt(2)/2`` and degrades as the kernel's singularity at
    ``t = 1/k`` approaches the interval.
    """
    _check_modulus(k)
    return _finish(_gc_m(k * k, n), full_output)


def k_gl(k: float, n: int = DEFAULT_ORDER, *, full_output: bool = False):
    """K(k) by ``n``-node Gauss-Legendre quadrature of :func:`ker_gl` on [0, pi/2]."""
    _check_modulus(k)
    return _finish(_gl_m(k * k, n), full_output)


def k_from_m(m: float, method: Method | str = Method.AGM, eps: float = DEFAULT_EPS,
             n: int = DEFAULT_ORDER, *, max_terms: int = 10**7, full_output: bool = False):
    """K in the parameter convention, ``K_cs(m) = K(sqrt(m))``."""
    _check_parameter(m)
    method = Method(method)
    if method is Method.SERIES:
        result = _series_m(m, eps, max_terms)
    elif method is Method.AGM:
        result = _agm_m(m, eps)
    elif method is Method.GAUSS_CHEBYSHEV:
        result = _gc_m(m, n)
    else:
        result = _gl_m(m, n)
    return _finish(result, full_output)


@dataclass(frozen=True)
class Cei1Request:
    """One evaluation of K(k). ``eps`` is used by series/AGM, ``n`` by the quadratures."""

    k: float
    method: Method = Method.AGM
    eps: float = DEFAULT_EPS
    n: int = DEFAULT_ORDER

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        _check_modulus(self.k)
        if not self.eps > 0:
            raise DomainError(f"eps must be positive, got {self.eps!r}")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n!r}")


def evaluate(request: Cei1Request, full_output: bool = False):
    """Run the solver selected by ``request``."""
    return k_from_m(request.k * request.k, request.method, request.eps, request.n,
                    full_output=full_output)


def elliptic_k(k: float, method: Method | str = Method.AGM, eps: float = DEFAULT_EPS,
               n: int = DEFAULT_ORDER, full_output: bool = False):
    """Convenience front door: ``K(k)`` by the named method."""
    return evaluate(Cei1Request(k, Method(method), eps, n), full_output)
