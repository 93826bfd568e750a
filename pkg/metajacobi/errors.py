class ParameterError(ValueError):
    """Raised when (alpha, beta), a gauge or a quadrature spec violates its construction guard."""


class NumericError(ArithmeticError):
    pass


class PoleError(NumericError):
    pass


class DegenerateParameterError(NumericError):
    """A Pochhammer denominator vanishes while the matching numerator does not."""


class DomainError(NumericError):
    """The argument lies outside the convergence or validity region of the requested evaluation."""


class ConvergenceError(NumericError):
    pass


class DegreeCapError(NumericError):
    pass
