from rest_framework import status

from .responses import StandardResponse


class StandardResponseMixin:
    """
    Mixin to use standardized responses in views.
    """

    def success_response(
        self,
        data=None,
        message="Success",
        status_code=status.HTTP_200_OK,
        extra_fields=None,
    ):
        """Return a standardized success response."""
        return StandardResponse.success(
            data=data,
            message=message,
            status_code=status_code,
            extra_fields=extra_fields,
        )

    def error_response(
        self,
        errors=None,
        message="An error occurred",
        status_code=status.HTTP_400_BAD_REQUEST,
    ):
        """Return a standardized error response."""
        return StandardResponse.error(
            errors=errors, message=message, status_code=status_code
        )


class QueryValidationMixin:
    """
    Mixin to validate query parameters through a serializer.
    """

    query_serializer_class = None

    def get_query_serializer(self, data):
        """Instantiate the query serializer for this view."""
        if self.query_serializer_class is None:
            raise NotImplementedError(
                f"{self.__class__.__name__} must define query_serializer_class"
            )
        return self.query_serializer_class(data=data)

    def validate_query(self, request):
        """
        Validate the request's query parameters.

        Returns:
            Tuple of (validated_data, errors); exactly one of them is None.
        """
        serializer = self.get_query_serializer(request.query_params)
        if not serializer.is_valid():
            return None, serializer.errors
        return serializer.validated_data, None
