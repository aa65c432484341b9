"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ResourceLimitError(RuntimeError):
    """A configured size bound (group order, search budget) was exceeded."""


class InconclusiveError(RuntimeError):
    """A sampling-based computation could not reach a verdict."""


class ParseError(ValueError):
    """Malformed polynomial or permutation text.

    Carries the 0-based offset of the offending character in ``position``.
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class FixtureError(ValueError):
    """A fixture file failed validation; ``location`` names the bad field."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)
