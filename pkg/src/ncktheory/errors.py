"""Exception types shared across the package."""


class SchemaError(ValueError):
    """Input data does not parse against the expected JSON layout."""

    def __init__(self, message, location=""):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class BudgetExceededError(RuntimeError):
    """A computation would exceed its configured size budget."""


class ExponentBudgetError(BudgetExceededError):
    """A Laurent exponent left the configured range."""
