"""Exception types raised by the library."""


class IOLexError(Exception):
    pass


class MonotonicityViolation(IOLexError, ValueError):
    pass


class WindowInconsistent(IOLexError, ValueError):
    pass


class DimensionMismatch(IOLexError, ValueError):
    pass


class IndexOutOfRange(IOLexError, ValueError):
    pass


class EqualInputs(IOLexError, ValueError):
    pass


class NotEligible(IOLexError, ValueError):
    pass


class NotIdempotent(IOLexError, ValueError):
    pass


class HoleMismatch(IOLexError, ValueError):
    pass


class NotACoveringPair(IOLexError, ValueError):
    pass


class LiteralSyntaxError(IOLexError, ValueError):
    def __init__(self, message, pos=None):
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)
        self.pos = pos
