class GraphParseError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, message: str, lineno: int | None = None):
        super().__init__(message)
        self.lineno = lineno


class CapExceededError(ValueError):
    """A brute-force routine refused an instance above its hard size cap."""


class BudgetExceededError(RuntimeError):
    """An enumeration ran out of its node budget; ``partial`` holds the count so far."""

    def __init__(self, message: str, partial: int):
        super().__init__(message)
        self.partial = partial
