"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an operation receives a value outside its domain."""


class ParseError(ValueError):
    """Syntax error in the expression grammar; carries the source position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
