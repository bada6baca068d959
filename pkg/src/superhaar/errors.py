"""Exception types shared across the package."""


class SuperhaarError(Exception):
    pass


class DivisionByZero(SuperhaarError, ZeroDivisionError):
    pass


class DomainError(SuperhaarError, ValueError):
    pass


class PoleError(SuperhaarError, ArithmeticError):
    pass


class ParseError(SuperhaarError, ValueError):
    pass


class StepBudgetExceeded(SuperhaarError, RuntimeError):
    pass


class OrderingViolation(SuperhaarError, ValueError):
    pass


class AxiomCheckFailed(SuperhaarError, AssertionError):
    pass


class NotAnIntegral(SuperhaarError, ValueError):
    pass


class GroupLikeCheckFailed(AxiomCheckFailed):
    pass


class NotSubcomodule(SuperhaarError, ValueError):
    pass


class NotSplit(SuperhaarError):
    """Raised when the Phi-map construction cannot produce a complement."""

    def __init__(self, message, phi=None):
        super().__init__(message)
        self.phi = phi


class UnsupportedRank(SuperhaarError, ValueError):
    pass


class NormalizationUnpinned(SuperhaarError):
    pass


class NotInK(SuperhaarError, ValueError):
    pass


class DualityCheckFailed(SuperhaarError, AssertionError):
    pass


class IndexOutOfRange(SuperhaarError, IndexError):
    pass


class NotCompletelyReducible(SuperhaarError):
    pass


class InvarianceNotVerified(SuperhaarError):
    pass


class UnknownSuite(SuperhaarError, ValueError):
    pass
