"""Newton iteration for polynomial roots, and the Legendre node set."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import DomainError, InvalidOrder, NonConvergence, ZeroSlope
from .fixed_point import FixedPointProblem, euclid_dist, solve_fixed_point
from .ortho_poly import legendre, legendre_derivative

SLOPE_GUARD = 1e-10


@dataclass(frozen=True)
class NewtonProblem:
    """Root of ``f`` near ``x0``.

    ``f`` and ``df`` are called as ``f(x, order)`` when ``order`` is given
    (the polynomial degree, for orthogonal-polynomial evaluators) and as
    ``f(x)`` otherwise.
    """

    f: Callable[..., float]
    df: Callable[..., float]
    x0: float
    order: Optional[int] = None
    eps: float = 1e-9
    max_iter: int = 100
    slope_guard: float = SLOPE_GUARD

    def __post_init__(self):
        if not self.eps > 0:
            raise ValueError(f"eps must be positive, got {self.eps!r}")
        if not self.slope_guard > 0:
            raise ValueError(f"slope_guard must be positive, got {self.slope_guard!r}")

    def _call(self, g, x):
        return g(x) if self.order is None else g(x, self.order)


def newton_update(p: NewtonProblem, x: float) -> float:
    slope = p._call(p.df, x)
    if abs(slope) < p.slope_guard:
        raise ZeroSlope(f"|f'({x!r})| = {abs(slope):g} below guard {p.slope_guard:g}")
    return x - p._call(p.f, x) / slope


def solve_root(p: NewtonProblem, full_output: bool = False):
    """Run Newton's method until successive iterates differ by less than ``eps``.

    The iteration is a one-dimensional fixed-point problem for the Newton map,
    stopped on the 1-d Euclidean distance between iterates.
    """
    fp = FixedPointProblem(
        update=lambda s: (newton_update(p, s[0]),),
        x0=(float(p.x0),),
        eps=p.eps,
        dist=euclid_dist,
        max_iter=p.max_iter,
    )
    (root,), iterations = solve_fixed_point(fp, full_output=True)
    return (root, iterations) if full_output else root


def legendre_seed(i: int, n: int) -> float:
    """Initial guess for the ``i``-th root (``i = 0..n-1``) of P_n, in descending order."""
    return math.cos(math.pi * (i + 0.75) / (n + 0.25))


def legendre_roots(n: int, eps: float = 1e-9) -> list[float]:
    """The ``n`` roots of P_n in ascending order.

    Each root is polished by Newton's method from :func:`legendre_seed`.
    The seeds bracket distinct roots; if two solves ever land on the same
    root this raises instead of silently returning a short or repeated set.
    """
    if n < 1:
        raise InvalidOrder(f"Legendre roots need n >= 1, got {n}")
    roots = []
    for i in range(n):
        p = NewtonProblem(legendre, legendre_derivative, legendre_seed(i, n), order=n, eps=eps)
        try:
            roots.append(solve_root(p))
        except (NonConvergence, ZeroSlope) as exc:
            raise type(exc)(f"root {i} of P_{n}: {exc}") from exc
    roots.sort()
    for lo, hi in zip(roots, roots[1:]):
        if not hi - lo > 1e-6:
            raise NonConvergence(f"Newton solves for P_{n} converged to a repeated root near {lo!r}")
    if roots[0] <= -1.0 or roots[-1] >= 1.0:
        raise DomainError(f"P_{n} root outside (-1, 1): {roots[0]!r}, {roots[-1]!r}")
    return roots
