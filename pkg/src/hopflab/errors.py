"""Exception types shared across the package."""


class HopfLabError(Exception):
    pass


class ParseError(HopfLabError):
    def __init__(self, msg, line=None, col=None):
        if line is not None:
            msg = f"{msg} (line {line}, column {col})"
        super().__init__(msg)
        self.line = line
        self.col = col


class FieldMismatch(HopfLabError, TypeError):
    pass


class ShapeError(HopfLabError, ValueError):
    pass


class NotInvertible(HopfLabError, ArithmeticError):
    pass


class AntipodeNotInvertible(NotInvertible):
    pass


class MismatchedAlgebras(HopfLabError, ValueError):
    pass


class NotACocycle(HopfLabError, ValueError):
    pass


class NotLazy(HopfLabError, ValueError):
    pass


class NotColinear(HopfLabError, ValueError):
    pass


class NotAnRForm(HopfLabError, ValueError):
    pass


class IncompleteWitnessSet(HopfLabError, ValueError):
    pass


class CharTwo(HopfLabError, ValueError):
    pass


class InvalidDatum(HopfLabError, ValueError):
    pass


class IncompatibleTriplet(HopfLabError, ValueError):
    pass


class NotMatched(HopfLabError, ValueError):
    pass


class NotLazyAlgebraMap(HopfLabError, ValueError):
    pass


class NontrivialActions(HopfLabError, ValueError):
    pass


class NotAHopfMap(HopfLabError, ValueError):
    pass


class NotInvariant(HopfLabError, ValueError):
    pass


class NotSymmetric(HopfLabError, ValueError):
    pass


class NoGeneratorData(HopfLabError, ValueError):
    pass


class SearchSpaceTooLarge(HopfLabError, RuntimeError):
    def __init__(self, msg, residual_dim=None):
        super().__init__(msg)
        self.residual_dim = residual_dim


class AxiomFailure(HopfLabError, ValueError):
    pass
