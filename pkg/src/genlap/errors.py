"""Exception hierarchy shared by every module."""


class GenlapError(Exception):
    """Base class for all errors raised by genlap."""


class DomainError(GenlapError, ValueError):
    """An argument lies outside the domain of the function or parameter space."""


class RangeError(GenlapError, ArithmeticError):
    """The result is not representable (infinite limit, pole, zero survival)."""


class ConvergenceError(GenlapError, ArithmeticError):
    """An iterative or quadrature routine failed to reach its tolerance."""


class DegenerateFitError(GenlapError, ValueError):
    """Every candidate in a weighted fit has zero likelihood."""
