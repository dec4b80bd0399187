from rest_framework.views import APIView

from .mixins import QueryValidationMixin, StandardResponseMixin


class BaseQueryView(StandardResponseMixin, QueryValidationMixin, APIView):
    """
    Base view for read-only computations driven by query parameters.

    Subclasses set ``query_serializer_class`` and implement ``compute``.
    Engine errors are left to the project exception handler.
    """

    success_message = "Computation completed successfully"

    def compute(self, params):
        """Run the computation for validated parameters."""
        raise NotImplementedError

    def get(self, request, *args, **kwargs):
        """Validate the query, compute, and wrap the result."""
        params, errors = self.validate_query(request)
        if errors is not None:
            return self.error_response(errors=errors, message="Validation failed")

        return self.success_response(
            data=self.compute(params), message=self.success_message
        )
