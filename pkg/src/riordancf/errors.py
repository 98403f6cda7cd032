"""Exception hierarchy.

Three families, which the CLI maps to exit codes: parse failures (2),
violated preconditions (3) and failed verifications (4).
"""


class RiordanError(Exception):
    """Base class for every error raised by this package."""


class ParseError(RiordanError, ValueError):
    """Malformed textual input (expressions, CF specs, JSON)."""

    def __init__(self, message, offset=None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class ExprSyntaxError(ParseError):
    pass


class PreconditionError(RiordanError, ValueError):
    """An operation was called on arguments outside its domain."""


class DivisionByNonUnit(PreconditionError):
    pass


class NonzeroConstantInner(PreconditionError):
    pass


class NotReversible(PreconditionError):
    pass


class BadConstantTerm(PreconditionError):
    pass


class InvalidG(PreconditionError):
    pass


class InvalidF(PreconditionError):
    pass


class InsufficientOrder(PreconditionError):
    pass


class ZeroConstant(PreconditionError):
    pass


class WrongKind(PreconditionError):
    pass


class SingularDiagonal(PreconditionError):
    pass


class NotTridiagonal(PreconditionError):
    pass


class BadSuperdiagonal(PreconditionError):
    pass


class UnsupportedParameters(PreconditionError):
    pass


class TooLarge(PreconditionError):
    pass


class UnknownName(PreconditionError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class EvalError(PreconditionError):
    """An expression parsed but could not be evaluated as a series."""


class VerificationError(RiordanError):
    pass


class NotRiordan(VerificationError):
    pass
