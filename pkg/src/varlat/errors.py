"""Exception hierarchy shared by all modules."""


class VarlatError(Exception):
    """Base class for every error raised by varlat."""


class ParseError(VarlatError, ValueError):
    """Malformed identity or descriptor text; ``position`` is a 0-based offset."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}" + (f": {text!r}" if text else ""))


class MissingImage(VarlatError, KeyError):
    pass


class CapExceeded(VarlatError):
    pass


class NoZeroElement(VarlatError):
    pass


class NotAssociative(VarlatError):
    pass


class InvalidIndex(VarlatError, ValueError):
    pass


class NotPeriodic(VarlatError):
    pass


class NonCanonical(VarlatError):
    pass


class Unsupported(VarlatError):
    pass


class NotALattice(VarlatError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
