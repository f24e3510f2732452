"""Exception types raised across the package."""


class EllipkError(Exception):
    """Base class for all errors raised by ellipk."""


class DomainError(EllipkError, ValueError):
    """An argument lies outside the domain where the computation is defined."""


class NonConvergence(EllipkError, ArithmeticError):
    """An iterative procedure hit its iteration or term cap."""


class DimensionMismatch(EllipkError, ValueError):
    pass


class ZeroSlope(EllipkError, ArithmeticError):
    """Newton step attempted where the derivative is (numerically) zero."""


class InvalidOrder(EllipkError, ValueError):
    pass


class InvalidInterval(EllipkError, ValueError):
    pass


class InvalidInput(EllipkError, ValueError):
    pass
