"""Node budgets for the exponential searches."""

from __future__ import annotations

import os

from .errors import BudgetExceeded

ENV_VAR = "MONOPOS_BUDGET"


class Budget:
    """Counts search nodes and raises :class:`BudgetExceeded` past ``limit``.

    ``limit=None`` means unlimited.  A single Budget may be threaded through
    several searches so that they share one allowance.
    """

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        if limit is not None and limit < 0:
            raise ValueError("budget must be non-negative")
        self.limit = limit
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(self.limit)

    def __repr__(self) -> str:
        return f"Budget(limit={self.limit}, used={self.used})"


def as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)


def default_limit() -> int | None:
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return None
    return int(raw)
