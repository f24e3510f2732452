"""Orthogonal polynomials from the three-term recurrence.

Every family here satisfies::

    Y_0(x) = c0
    Y_1(x) = c1*x + c2
    Y_n(x) = (A(n)*x + B(n)) * Y_{n-1}(x) - C(n) * Y_{n-2}(x),   n >= 2

and the derivative follows by differentiating the recurrence term by term.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable


@dataclass(frozen=True)
class OrthoRecurrence:
    c0: float
    c1: float
    c2: float
    A: Callable[[int], float]
    B: Callable[[int], float]
    C: Callable[[int], float]


LEGENDRE = OrthoRecurrence(
    c0=1.0, c1=1.0, c2=0.0,
    A=lambda n: 2.0 - 1.0 / n,
    B=lambda n: 0.0,
    C=lambda n: 1.0 - 1.0 / n,
)

# First kind, T_n(x) = cos(n arccos x). T_1 = x, hence c1 = 1.
CHEBYSHEV = OrthoRecurrence(
    c0=1.0, c1=1.0, c2=0.0,
    A=lambda n: 2.0,
    B=lambda n: 0.0,
    C=lambda n: 1.0,
)

LAGUERRE = OrthoRecurrence(
    c0=1.0, c1=-1.0, c2=1.0,
    A=lambda n: -1.0 / n,
    B=lambda n: 2.0 - 1.0 / n,
    C=lambda n: 1.0 - 1.0 / n,
)

# Physicists' normalisation, H_1 = 2x.
HERMITE = OrthoRecurrence(
    c0=1.0, c1=2.0, c2=0.0,
    A=lambda n: 2.0,
    B=lambda n: 0.0,
    C=lambda n: 2.0 * (n - 1),
)


class Family(enum.Enum):
    LEGENDRE = "legendre"
    CHEBYSHEV = "chebyshev"
    LAGUERRE = "laguerre"
    HERMITE = "hermite"

    @property
    def recurrence(self) -> OrthoRecurrence:
        return _RECURRENCES[self]


_RECURRENCES = {
    Family.LEGENDRE: LEGENDRE,
    Family.CHEBYSHEV: CHEBYSHEV,
    Family.LAGUERRE: LAGUERRE,
    Family.HERMITE: HERMITE,
}


def eval_recurrence(x: float, n: int, rec: OrthoRecurrence) -> float:
    """Value of Y_n(x), by forward recurrence with two rolling registers."""
    y0 = rec.c0
    y1 = rec.c1 * x + rec.c2
    if n == 0:
        return y0
    for k in range(2, n + 1):
        y0, y1 = y1, (rec.A(k) * x + rec.B(k)) * y1 - rec.C(k) * y0
    return y1


def eval_recurrence_derivative(x: float, n: int, rec: OrthoRecurrence) -> float:
    """Value of Y'_n(x), co-iterating values and derivatives.

    Uses Y'_k = A(k) Y_{k-1} + (A(k) x + B(k)) Y'_{k-1} - C(k) Y'_{k-2}
    with Y'_0 = 0 and Y'_1 = c1.
    """
    if n == 0:
        return 0.0
    y0 = rec.c0
    y1 = rec.c1 * x + rec.c2
    d0 = 0.0
    d1 = rec.c1
    for k in range(2, n + 1):
        a = rec.A(k)
        lin = a * x + rec.B(k)
        c = rec.C(k)
        y0, y1, d0, d1 = y1, lin * y1 - c * y0, d1, a * y1 + lin * d1 - c * d0
    return d1


def legendre(x: float, n: int) -> float:
    return eval_recurrence(x, n, LEGENDRE)


def legendre_derivative(x: float, n: int) -> float:
    return eval_recurrence_derivative(x, n, LEGENDRE)
