"""Exception types shared across the package."""


class SemigroupError(Exception):
    """Base class for domain errors (bad input, violated preconditions)."""


class ValidationError(SemigroupError):
    """The table is not associative; carries the first failing triple."""

    def __init__(self, i, j, k, left=None, right=None):
        self.triple = (i, j, k)
        self.left = left
        self.right = right
        msg = f"associativity fails at ({i},{j},{k})"
        if left is not None:
            msg += f": ({i}*{j})*{k} = {left} but {i}*({j}*{k}) = {right}"
        super().__init__(msg)


class RangeError(SemigroupError):
    pass


class ParseError(SemigroupError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class NoZeroError(SemigroupError):
    pass


class PreconditionError(SemigroupError):
    pass


class FormulaInapplicable(SemigroupError):
    """The closed-form witness was computed but does not satisfy the requested conditions."""

    def __init__(self, message, g=None, h=None):
        self.g = g
        self.h = h
        super().__init__(message)


class NotAGroup(SemigroupError):
    pass


class BadSandwich(SemigroupError):
    pass


class SizeLimit(SemigroupError):
    pass


class DimensionMismatch(SemigroupError):
    pass


class NotFullInjection(SemigroupError):
    pass


class NotEpiElement(SemigroupError):
    pass


class InternalError(AssertionError):
    """A runtime self-check failed; this is a bug, not bad input."""
