"""Exception types shared across the package."""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Raised when a graph file or edge list cannot be parsed or is not simple."""


class DisconnectedGraphError(ValueError):
    """Raised when an operation that needs a connected graph receives a disconnected one."""


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would visit more candidates than allowed.

    Attributes:
        count: number of candidates the enumeration would have visited.
        budget: the limit that was in force.
    """

    def __init__(self, what: str, count: int, budget: int):
        self.what = what
        self.count = count
        self.budget = budget
        super().__init__(f"{what}: {count} candidates exceeds budget {budget}")
