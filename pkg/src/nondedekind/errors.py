"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NoStandardPartError(DomainError):
    """Raised when asking for the standard part of an unbounded element."""


class ParseError(ValueError):
    """Malformed textual input. ``position`` is the 0-based offset of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
