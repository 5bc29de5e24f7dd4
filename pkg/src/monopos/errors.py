"""Exception hierarchy shared by every module."""

from __future__ import annotations


class MonoposError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MonoposError, ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)


class ValidationError(MonoposError, ValueError):
    """Input decodes, but does not describe a simple graph."""


class DomainError(MonoposError, ValueError):
    """Argument outside the domain of an operation (bad vertex, bad parameter)."""


class PreconditionError(MonoposError, ValueError):
    pass


class DisconnectedError(PreconditionError):
    pass


class CapacityError(MonoposError, ValueError):
    pass


class BudgetExceeded(MonoposError, RuntimeError):
    """A search hit its node budget before it could decide the question."""

    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"search budget of {limit} nodes exceeded")


class InternalConsistencyError(MonoposError, AssertionError):
    """A computed object contradicts a proven structural statement.

    Raising this means either a bug here or a counterexample to the theory,
    so it is never swallowed.
    """
