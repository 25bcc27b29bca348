class PolytopeError(Exception):
    """Base class for every failure raised by the polytope engine."""


class InvalidSymbol(PolytopeError, ValueError):
    pass


class InvalidParameter(PolytopeError, ValueError):
    pass


class UnknownPolytope(PolytopeError):
    pass


class CapExceeded(PolytopeError):
    pass


class NotRegular(PolytopeError):
    pass


class AlgebraError(PolytopeError):
    pass


class ValidationFailed(PolytopeError):
    """A face lattice broke one of its structural invariants.

    ``violations`` holds the messages reported by ``lattice.validate``.
    """

    def __init__(self, message, violations=()):
        self.violations = list(violations)
        if self.violations:
            message = f"{message}: {'; '.join(self.violations[:5])}"
        super().__init__(message)
