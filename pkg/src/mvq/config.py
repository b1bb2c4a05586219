"""Search budgets shared by the enumeration routines."""

import os
from dataclasses import dataclass


class BudgetExceeded(RuntimeError):
    """Raised when a search would exceed its configured size cap."""

    def __init__(self, what, size, limit):
        super().__init__(f"{what}: {size} exceeds budget {limit}")
        self.what = what
        self.size = size
        self.limit = limit


@dataclass(frozen=True)
class Budgets:
    carrier: int = 64
    assignments: int = 10**7
    criticals: int = 20

    def __post_init__(self):
        for name in ("carrier", "assignments", "criticals"):
            if getattr(self, name) <= 0:
                raise ValueError(f"budget {name} must be positive")

    @classmethod
    def from_env(cls, environ=None):
        environ = os.environ if environ is None else environ
        kw = {}
        if "MVQ_BUDGET_CARRIER" in environ:
            kw["carrier"] = int(environ["MVQ_BUDGET_CARRIER"])
        if "MVQ_BUDGET_ASSIGN" in environ:
            kw["assignments"] = int(environ["MVQ_BUDGET_ASSIGN"])
        return cls(**kw)


DEFAULT = Budgets()
