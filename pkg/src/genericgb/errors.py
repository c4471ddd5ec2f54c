"""Exception hierarchy shared by all modules."""


class AlgebraError(Exception):
    pass


class DomainMismatch(AlgebraError):
    pass


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class ExhaustedDomain(AlgebraError):
    pass


class ArityMismatch(AlgebraError, ValueError):
    pass


class NotDivisible(AlgebraError):
    pass


class ZeroPolynomial(AlgebraError, ValueError):
    pass


class ZeroDivisor(AlgebraError, ValueError):
    """A divisor list contains the zero polynomial."""


class EmptyGeneratorSet(AlgebraError, ValueError):
    pass


class NotArtinian(AlgebraError):
    pass


class WrongArity(AlgebraError, ValueError):
    """An operation that only makes sense in two variables got another count."""


class DegreeOrder(AlgebraError, ValueError):
    pass


class Degenerate(AlgebraError):
    """Input coefficients hit a non-generic locus (a pivot or support term vanished)."""


class IndexOutOfRange(AlgebraError, IndexError):
    pass


class LengthMismatch(AlgebraError, ValueError):
    pass


class Mismatch(AlgebraError):
    """Two independent pipelines disagreed; ``diff`` says where first."""

    def __init__(self, message, diff=None):
        super().__init__(message)
        self.diff = diff or {}


class ParseError(AlgebraError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
