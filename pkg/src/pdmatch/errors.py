"""Exception hierarchy shared by all solvers."""


class PDMatchError(Exception):
    """Base class for errors raised by this package."""


class InstanceFormatError(PDMatchError, ValueError):
    """Raised when an instance or matching document cannot be parsed."""

    def __init__(self, message: str, position: tuple[int, ...] | None = None):
        if position is not None:
            message = f"{message} at {position}"
        super().__init__(message)
        self.position = position


class InvalidMatchingError(PDMatchError, ValueError):
    """Raised when an operation requires a valid PD-matching and gets another."""


class ClassMismatchError(PDMatchError, ValueError):
    """Raised when a class-specific solver is handed an instance outside its class."""


class BudgetExceededError(PDMatchError, RuntimeError):
    """Raised when an enumeration would exceed its configured budget."""
