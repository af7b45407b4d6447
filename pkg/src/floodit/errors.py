"""Exception types shared across the package."""


class FlooditError(Exception):
    """Base class for all package errors."""


class DisconnectedGraph(FlooditError):
    pass


class DanglingVertexRef(FlooditError):
    pass


class NonDenseColours(FlooditError):
    pass


class InvalidParams(FlooditError):
    pass


class IncompatibleSpec(FlooditError):
    pass


class TooManyColours(FlooditError):
    pass


class NotAPath(FlooditError):
    pass


class NotACycle(FlooditError):
    pass


class NotAPathColouring(FlooditError):
    pass


class NotATransversal(FlooditError):
    pass


class PreconditionViolated(FlooditError):
    pass


class UnknownClaim(FlooditError):
    pass


class ParseError(FlooditError):
    pass


class BudgetExceeded(FlooditError):
    """Raised when an exact search runs out of its state budget.

    Carries the best replay-validated upper bound found so far (may be None
    when not even a greedy certificate was computed).
    """

    def __init__(self, message, upper_bound=None, certificate=None, explored=0):
        super().__init__(message)
        self.upper_bound = upper_bound
        self.certificate = certificate
        self.explored = explored
