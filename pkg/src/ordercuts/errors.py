"""Shared exception types."""


class OrderCutsError(Exception):
    """Base class for all library errors."""


class DomainError(OrderCutsError):
    """An operation was applied outside its stated domain."""


class NotDerivableError(OrderCutsError):
    """The requested attribute is not derivable from the given description."""


class SideConditionError(OrderCutsError):
    """A hypothesis required by a construction formula does not hold."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        self.detail = detail
        msg = condition if not detail else f"{condition}: {detail}"
        super().__init__(msg)


class DescriptorError(OrderCutsError):
    """A structure descriptor is internally inconsistent."""


class ParseError(OrderCutsError):
    """Input text could not be parsed."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"line {line}, col {column}: {message}"
        super().__init__(message)
