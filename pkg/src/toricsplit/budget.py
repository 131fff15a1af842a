"""A shared work counter for the expensive searches."""

from __future__ import annotations

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """Raised when a search spends more work units than it was allowed."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"{what}: budget of {limit} work units exhausted")
        self.what = what
        self.limit = limit


class Budget:
    """Counts nodes/elements across Graver completion, fibers and cover search.

    One instance can be threaded through several calls; they all draw on
    the same allowance.  ``Budget(None)`` never runs out.
    """

    def __init__(self, limit: int | None = DEFAULT_BUDGET):
        self.limit = limit
        self.spent = 0

    def spend(self, what: str, units: int = 1) -> None:
        self.spent += units
        if self.limit is not None and self.spent > self.limit:
            raise BudgetExceeded(what, self.limit)

    @property
    def remaining(self) -> int | None:
        if self.limit is None:
            return None
        return max(self.limit - self.spent, 0)

    def __repr__(self):
        return f"Budget(limit={self.limit}, spent={self.spent})"


def ensure(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget) if budget is not None else Budget(None)
