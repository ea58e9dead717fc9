from typing import Any


class GonilException(Exception):
    def __init__(
        self,
        message: str = "Internal Error",
        *,
        status: int = 3,
        errors: dict[str, Any] = {},
    ):
        super().__init__(message, status, errors)
        self.message = message
        self.status = status
        self.errors = errors

    def __str__(self):
        return self.message

    def __repr__(self):
        return self.message


class InputError(GonilException):
    def __init__(
        self,
        message: str = "The input is invalid",
        *,
        status: int = 2,
        errors: dict[str, Any] = {},
    ):
        super().__init__(message, status=status, errors=errors)


class CommandNotFound(InputError):
    def __init__(
        self,
        message: str = "The requested command was not found",
        *,
        status: int = 2,
        errors: dict[str, Any] = {},
    ):
        super().__init__(message, status=status, errors=errors)


class InvarianceError(InputError):
    pass


class HypothesisError(InputError):
    pass


class ValidationError(InputError):
    pass


class JacobiError(ValidationError):
    pass


class NotDirectSum(ValidationError):
    pass


class NotSubalgebra(ValidationError):
    pass


class NotReductive(ValidationError):
    pass


class MetricNotInvariant(ValidationError):
    pass


class StructuralError(GonilException):
    def __init__(
        self,
        message: str = "The input contradicts the expected structure",
        *,
        status: int = 1,
        errors: dict[str, Any] = {},
    ):
        super().__init__(message, status=status, errors=errors)
