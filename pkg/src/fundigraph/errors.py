from __future__ import annotations


class FunDigraphError(Exception):
    """Base class for errors raised by this package."""


class MalformedInputError(FunDigraphError, ValueError):
    pass


class NotInF1Error(FunDigraphError, ValueError):
    """The digraph is not connected with a fixed point."""


class SizeLimitError(FunDigraphError, ValueError):
    pass


class NoWitnessError(FunDigraphError, ValueError):
    """Raised for C1 and the empty digraph, which have no non-primality witness."""


class WitnessInvalidError(FunDigraphError):
    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        self.detail = detail
        super().__init__(f"{clause}: {detail}" if detail else clause)


class ParseError(FunDigraphError, ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")
