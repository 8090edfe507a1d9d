class TukeyError(ValueError):
    """Base class for errors raised by this package."""


class ParseError(TukeyError):
    """Malformed term text. ``pos`` is a (line, column) pair, 1-based."""

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{pos[0]}:{pos[1]}: {message}"
        super().__init__(message)


class DomainError(TukeyError):
    """A well-formed term that violates a mathematical precondition."""
