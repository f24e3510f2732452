"""Generic fixed-point iteration and the arithmetic-geometric mean built on it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence

from .errors import DimensionMismatch, DomainError, NonConvergence

Vector = Sequence[float]


def euclid_dist(x: Vector, y: Vector, n: Optional[int] = None) -> float:
    """Euclidean distance between two vectors of equal length ``n``."""
    if len(x) != len(y) or (n is not None and len(x) != n):
        raise DimensionMismatch(f"lengths {len(x)} and {len(y)} (expected {n})")
    return math.dist(x, y)


class AgmState(NamedTuple):
    u: float  # arithmetic-mean track
    v: float  # geometric-mean track


def agm_update(s: Vector) -> AgmState:
    u, v = s
    if u < 0 or v < 0:
        raise DomainError(f"AGM iterate must be non-negative, got ({u!r}, {v!r})")
    return AgmState(0.5 * (u + v), math.sqrt(u * v))


@dataclass(frozen=True)
class FixedPointProblem:
    """Iterate ``x <- update(x)`` from ``x0`` until ``dist(x_j, x_{j+1}) < eps``.

    ``dist`` is called as ``dist(x, y, dim)`` and defaults to
    :func:`euclid_dist`.
    """

    update: Callable[[Vector], Vector]
    x0: Vector
    eps: float = 1e-9
    dist: Callable[[Vector, Vector, int], float] = euclid_dist
    max_iter: int = 200

    def __post_init__(self):
        if not self.eps > 0:
            raise ValueError(f"eps must be positive, got {self.eps!r}")

    @property
    def dim(self) -> int:
        return len(self.x0)


def solve_fixed_point(p: FixedPointProblem, full_output: bool = False):
    """Return the first iterate ``x[j+1]`` with ``dist(x[j], x[j+1]) < eps``.

    With ``full_output`` the number of updates applied is returned as well.
    """
    guess = p.x0
    improve = p.update(guess)
    iterations = 1
    while p.dist(guess, improve, p.dim) >= p.eps:
        if iterations >= p.max_iter:
            raise NonConvergence(
                f"fixed-point iteration not converged after {p.max_iter} updates "
                f"(last step {p.dist(guess, improve, p.dim):g})"
            )
        guess = improve
        improve = p.update(guess)
        iterations += 1
    return (improve, iterations) if full_output else improve


def agm(a: float, b: float, eps: float = 1e-9, full_output: bool = False):
    """Arithmetic-geometric mean of two non-negative numbers.

    Runs :func:`solve_fixed_point` on :func:`agm_update` from ``(a, b)`` and
    returns the arithmetic-mean component. ``agm(0, b) == 0``.
    """
    if not (a >= 0 and b >= 0):
        raise DomainError(f"agm requires non-negative arguments, got ({a!r}, {b!r})")
    if a == 0 or b == 0:
        # the geometric track is 0 from the first step, so the limit is exactly 0
        return (0.0, 0) if full_output else 0.0
    x, iterations = solve_fixed_point(
        FixedPointProblem(agm_update, AgmState(float(a), float(b)), eps), full_output=True
    )
    return (x.u, iterations) if full_output else x.u
