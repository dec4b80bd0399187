from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import exception_handler as drf_exception_handler


class SecretaryError(Exception):
    """
    Base class for every error raised by the engine.
    """


class DomainError(SecretaryError, ValueError):
    """
    An argument lies outside the range an operation is defined on.
    """


class EnumerationLimitError(DomainError):
    """
    Exhaustive enumeration was requested for a problem that is too large.
    """


class LengthMismatchError(DomainError):
    """
    A rank sequence does not fit the problem size or the cutoff.
    """


class ToleranceNotReachedError(SecretaryError, ArithmeticError):
    """
    A numeric evaluation could not certify its requested accuracy.
    """


def custom_exception_handler(exc, context):
    """
    Custom exception handler that returns standardized error responses.
    """
    # Call DRF's default exception handler first
    response = drf_exception_handler(exc, context)

    if response is not None:
        # DRF recognized the exception
        error_data = {
            "success": False,
            "message": get_error_message(exc),
            "errors": (
                response.data
                if isinstance(response.data, dict)
                else {"detail": response.data}
            ),
        }
        response.data = error_data
        return response

    if isinstance(exc, DomainError):
        status_code = status.HTTP_400_BAD_REQUEST
    elif isinstance(exc, ToleranceNotReachedError):
        status_code = status.HTTP_422_UNPROCESSABLE_ENTITY
    else:
        status_code = status.HTTP_500_INTERNAL_SERVER_ERROR

    # Create a standardized error response for engine and unexpected errors
    error_data = {
        "success": False,
        "message": str(exc),
        "errors": {
            "detail": str(exc),
            "type": exc.__class__.__name__,
        },
    }
    return Response(error_data, status=status_code)


def get_error_message(exc):
    """
    Extract a user-friendly error message from the exception.
    """
    if hasattr(exc, "detail"):
        if isinstance(exc.detail, dict):
            # Return first error message if dict
            first = next(iter(exc.detail.values())) if exc.detail else str(exc)
            return first[0] if isinstance(first, list) and first else str(first)
        elif isinstance(exc.detail, list):
            # Return first error if list
            return exc.detail[0] if exc.detail else str(exc)
        return str(exc.detail)
    return str(exc)
