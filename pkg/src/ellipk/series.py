"""Summation of convergent power series with a relative stopping rule."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import NonConvergence

#: Guard added to |sum| in the negligibility test so a vanishing partial sum
#: does not divide by zero. Fixed, not configurable.
NEGLIGIBLE_GUARD = 1e-10


def cei1_coefficient(j: int) -> float:
    """Coefficient ``[(2j-1)!! / (2j)!!]**2`` of the K(k) series in ``k**2``.

    The double-factorial ratio is built as the running product of
    ``1 - 0.5/t`` for ``t = 1..j``, so no factorial is ever formed.
    """
    if j == 0:
        return 1.0
    prod = 1.0
    for t in range(1, j + 1):
        prod *= 1.0 - 0.5 / t
    return prod * prod


def is_negligible(term: float, sum_: float, eps: float) -> bool:
    return abs(term) / (abs(sum_) + NEGLIGIBLE_GUARD) < eps


@dataclass(frozen=True)
class SeriesSpec:
    """A power series ``sum_j coef(j) * x**j`` to be summed to relative tolerance ``eps``."""

    coef: Callable[[int], float]
    x: float
    eps: float = 1e-9
    max_terms: int = 10**7

    def __post_init__(self):
        if not self.eps > 0:
            raise ValueError(f"eps must be positive, got {self.eps!r}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms!r}")


def iter_partial_sums(
    coef: Callable[[int], float], x: float
) -> Iterator[tuple[int, float, float, float]]:
    """Yield ``(j, c_j, term_j, S_{j+1})`` for j = 0, 1, 2, ...

    ``x**j`` is carried as a running power rather than recomputed each term.
    """
    total = 0.0
    power = 1.0
    j = 0
    while True:
        c = coef(j)
        term = c * power
        total += term
        yield j, c, term, total
        power *= x
        j += 1


def sum_series(spec: SeriesSpec, full_output: bool = False):
    """Sum ``spec`` until a term is negligible relative to the running sum.

    Coefficients that are exactly zero (the odd terms of ``cos``, the even
    terms of ``sin``) carry no information about convergence and are not
    tested; a term that vanishes because ``x == 0`` is.

    Returns the sum, or ``(sum, terms_used)`` when ``full_output`` is true.

    Raises
    ------
    NonConvergence
        If ``spec.max_terms`` terms are consumed without the stopping rule
        firing.
    """
    for j, c, term, total in iter_partial_sums(spec.coef, spec.x):
        if c != 0.0 and is_negligible(term, total, spec.eps):
            return (total, j + 1) if full_output else total
        if j + 1 >= spec.max_terms:
            break
    raise NonConvergence(
        f"series at x={spec.x!r} did not reach relative tolerance {spec.eps:g} "
        f"within {spec.max_terms} terms"
    )
