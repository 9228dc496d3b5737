"""Exception hierarchy shared by all modules."""


class EndVertexError(Exception):
    """Base class for every error raised by this package."""


class LimitExceeded(EndVertexError):
    pass


class DegreeMismatch(EndVertexError):
    pass


class InvalidParameter(EndVertexError, ValueError):
    pass


class NotAnAutomorphism(EndVertexError):
    pass


class DegenerateGroup(EndVertexError, ValueError):
    """Raised when an operation needs a larger group than it was given."""


class TableOverflow(EndVertexError):
    """Coset enumeration exceeded its live-coset budget."""


class PresentationSyntaxError(EndVertexError, ValueError):
    """Malformed text; ``pos`` is the 0-based character offset of the problem."""

    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class UndeclaredGenerator(PresentationSyntaxError):
    pass


class CatalogParseError(EndVertexError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateLabel(CatalogParseError):
    pass


class OrderMismatch(EndVertexError):
    """A catalog entry realized to a group of a different order than declared."""
