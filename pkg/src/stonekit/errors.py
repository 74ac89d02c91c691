"""Exception hierarchy shared by every stonekit module."""

from __future__ import annotations


class StonekitError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(StonekitError):
    """Operands are outside an operation's domain (mismatched universes,
    mismatched rings, non-idempotent where an idempotent is required, ...)."""


class CapacityError(StonekitError):
    """An exhaustive operation would exceed the enumeration guard."""


class UnsupportedRingError(StonekitError):
    """No structural rule applies and the ring is too large for brute force."""


class CompatibilityError(StonekitError):
    """A section family handed to the gluing check disagrees on an overlap."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class InternalCheckError(StonekitError):
    """A verification that can only fail through an implementation bug failed."""


class DslError(StonekitError):
    """An error in DSL input, carrying the offending source span."""

    def __init__(self, message: str, start: int, end: int, hint: str | None = None):
        super().__init__(message)
        self.start = start
        self.end = end
        self.hint = hint

    def describe(self) -> str:
        text = f"{self.args[0]} (at {self.start}..{self.end})"
        if self.hint:
            text += f"\n  hint: {self.hint}"
        return text


class LexError(DslError):
    pass


class ParseError(DslError):
    pass


class EvalError(DslError):
    pass
