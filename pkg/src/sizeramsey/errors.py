"""Exception types shared across the package."""


class InstanceTooLargeError(Exception):
    """A computation would exceed its configured size guard."""


class SearchBudgetExceededError(Exception):
    """An exhaustive search would exceed its colouring budget."""
