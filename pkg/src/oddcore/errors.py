"""Exception types shared by every module."""

from __future__ import annotations


class InputError(ValueError):
    """Raised when arguments violate an operation's preconditions."""


class BudgetExceeded(RuntimeError):
    """Raised when an exact search runs out of its node budget.

    ``lower`` and ``upper`` bracket the answer when the operation can say
    something about it (chromatic number, d2, gamma2); otherwise they are None.
    """

    def __init__(self, message: str, nodes: int = 0,
                 lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.nodes = nodes
        self.lower = lower
        self.upper = upper
