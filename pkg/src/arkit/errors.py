"""Exception types shared across the toolkit."""


class FormatError(ValueError):
    """Malformed ``.cg`` / ``g 1`` document."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "") + ": "
        super().__init__(where + message)


class InstanceTooLarge(ValueError):
    """An exhaustive oracle was asked for an instance beyond its size cap."""


class RegimeError(ValueError):
    """Parameters fall outside the range where a formula or construction applies."""


class BudgetExceeded(Exception):
    """A search ran out of its time budget before reaching a conclusive answer.

    ``best`` holds the best certificate found so far, if any.  It is a lower
    bound only and must never be reported as the exact answer.
    """

    def __init__(self, message: str = "search budget exceeded", best=None):
        super().__init__(message)
        self.best = best
