"""Exception types shared across the search and enumeration modules."""


class BudgetExceededError(RuntimeError):
    """A search ran out of its node-expansion budget before finishing."""


class CapExceededError(RuntimeError):
    """An enumeration would produce more items than the caller's cap."""
