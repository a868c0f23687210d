"""Exception hierarchy shared by all lcmgamma modules."""


class LcmGammaError(Exception):
    """Base class for every error raised by this package."""


class DomainError(LcmGammaError, ValueError):
    """An argument lies outside the domain of the requested function."""


class QuadratureError(LcmGammaError, ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class SolverError(LcmGammaError, ArithmeticError):
    """A one-dimensional optimizer could not bracket or isolate a maximum."""


class UnsupportedInnerFunction(LcmGammaError, ValueError):
    """Composition requested with an inner function outside the catalog."""


class NonFiniteEvaluation(LcmGammaError, ArithmeticError):
    """A provider returned inf or nan at a grid point."""

    def __init__(self, x, order, value):
        super().__init__(f"non-finite value {value!r} for order {order} at x={x!r}")
        self.x = x
        self.order = order
        self.value = value
