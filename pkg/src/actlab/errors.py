"""Exception hierarchy shared by every actlab module."""

from __future__ import annotations


class ActlabError(Exception):
    """Base class for all errors raised by actlab."""


class ValidationError(ActlabError):
    """A table does not describe a monoid or an act."""


class NonAssociative(ValidationError):
    def __init__(self, x: str, y: str, z: str):
        super().__init__(f"({x}*{y})*{z} != {x}*({y}*{z})")
        self.witness = (x, y, z)


class BadIdentity(ValidationError):
    def __init__(self, x: str):
        super().__init__(f"identity law fails at {x}")
        self.witness = x


class IndexOutOfRange(ValidationError):
    pass


class NotUnitary(ValidationError):
    def __init__(self, x: str):
        super().__init__(f"{x}*1 != {x}")
        self.witness = x


class NotCompatible(ValidationError):
    def __init__(self, x: str, s: str, t: str):
        super().__init__(f"{x}*({s}{t}) != ({x}*{s})*{t}")
        self.witness = (x, s, t)


class SizeGuardExceeded(ActlabError):
    """A bounded search or construction would exceed its declared guard."""


class EmptyFamily(ActlabError):
    pass


class MixedMonoids(ActlabError):
    pass


class EnvelopeNotFound(ActlabError):
    """No injective essential extension was found inside an injective act.

    This cannot happen for a correct implementation.
    """


class UnknownClaim(ActlabError):
    pass


class TextSyntaxError(ActlabError):
    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class UnknownMonoidReference(ActlabError):
    pass
