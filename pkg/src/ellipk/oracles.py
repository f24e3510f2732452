"""Independent reference values for verifying the numerical modules.

Nothing in here imports the series, fixed-point, root-finding or quadrature
code, so an oracle can never agree with a solver by sharing its bugs.
"""

from __future__ import annotations

import decimal
import enum
import math
from typing import Callable, Sequence

from .errors import DomainError, InvalidInput


def bessel_j0(x: float) -> float:
    """Bessel function J_0 from its power series, for ``|x| <= 50``.

    ``J_0(x) = sum_j (-1)^j (x/2)^(2j) / (j!)^2``. The terms reach ~1e20
    before cancelling at ``|x| = 50``, so the sum is carried in 60-digit
    decimal arithmetic. Summation stops past the largest term, once a term
    drops below 1e-14 of the running sum (or below 1e-30, near zeros of J_0).
    """
    if abs(x) > 50:
        raise DomainError(f"bessel_j0 oracle is only valid for |x| <= 50, got {x!r}")
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        rel, tiny = decimal.Decimal("1e-14"), decimal.Decimal("1e-30")
        q = (decimal.Decimal(x) / 2) ** 2
        term = decimal.Decimal(1)
        total = term
        j = 0
        while True:
            j += 1
            term = -term * q / (j * j)
            total += term
            if j > abs(x) / 2 and (abs(term) <= rel * abs(total) or abs(term) < tiny):
                return float(total)


def product_polynomial(gammas: Sequence[float]) -> tuple[Callable[[float], float], Callable[[float], float]]:
    """``f(x) = prod_i (x - gamma_i)`` and its derivative, for root-finder tests."""
    gammas = [float(g) for g in gammas]
    if not gammas or any(b <= a for a, b in zip(gammas, gammas[1:])):
        raise InvalidInput(f"gammas must be non-empty and strictly increasing: {gammas!r}")

    def f(x: float) -> float:
        return math.prod(x - g for g in gammas)

    def df(x: float) -> float:
        return math.fsum(
            math.prod(x - g for j, g in enumerate(gammas) if j != i) for i in range(len(gammas))
        )

    return f, df


class OracleCase(enum.Enum):
    GC_CONSTANT = "gc_constant"  # int_{-a}^{a} dx / sqrt(1 - x^2)          = 2 arcsin a
    GC_COS = "gc_cos"            # int_{-1}^{1} cos(kx) / sqrt(1 - x^2) dx  = pi J_0(k)
    GL_COS = "gl_cos"            # int_a^b cos(x + k) dx                    = sin(k+b) - sin(k+a)
    GL_SQUARE = "gl_square"      # int_a^b (x + k)^2 / 3 dx                 = ((k+b)^3 - (k+a)^3) / 9
    GL_EXP = "gl_exp"            # int_a^b e^(kx) dx                        = (e^(kb) - e^(ka)) / k


def closed_form_integral(case: OracleCase | str, *, k: float = 0.0, a: float = 0.0,
                         b: float = 0.0) -> float:
    """Exact value of one of the tabulated test integrals."""
    case = OracleCase(case)
    if case is OracleCase.GC_CONSTANT:
        if not 0 < a <= 1:
            raise DomainError(f"need 0 < a <= 1, got {a!r}")
        return 2.0 * math.asin(a)
    if case is OracleCase.GC_COS:
        return math.pi * bessel_j0(k)
    if not a < b:
        raise DomainError(f"need a < b, got a={a!r}, b={b!r}")
    if case is OracleCase.GL_COS:
        return math.sin(k + b) - math.sin(k + a)
    if case is OracleCase.GL_SQUARE:
        return ((k + b) ** 3 - (k + a) ** 3) / 9.0
    # (e^(kb) - e^(ka)) / k written via expm1 so small k does not cancel;
    # k = 0 is the limit b - a.
    if k == 0:
        return b - a
    return math.exp(k * a) * math.expm1(k * (b - a)) / k


def tabulated_square_value(k: float, a: float, b: float) -> float:
    """The cubic-row value exactly as printed, ``(k+b)^3 - (k+a)^3`` (9x the true integral)."""
    return (k + b) ** 3 - (k + a) ** 3
