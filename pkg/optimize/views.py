from drf_spectacular.utils import OpenApiExample, extend_schema

from secretary_engine.base_views import BaseQueryView

from .search import best_c_asymptotic, best_cutoff_finite
from .serializers import (
    AsymptoticOptimumSerializer,
    BestCutoffQuerySerializer,
    BestFractionQuerySerializer,
    FiniteOptimumSerializer,
    TableQuerySerializer,
    TableRowSerializer,
)
from .tables import table_optimal


@extend_schema(
    summary="Best finite cutoff",
    description="Smallest cutoff M maximizing the win probability, by exhaustive scan.",
    tags=["Optimize"],
    parameters=[BestCutoffQuerySerializer],
    responses=FiniteOptimumSerializer,
)
class BestCutoffView(BaseQueryView):
    query_serializer_class = BestCutoffQuerySerializer
    success_message = "Best cutoff found"

    def compute(self, params):
        result = best_cutoff_finite(params["size"], params["strategy"], params["mode"])
        return FiniteOptimumSerializer(result).data


@extend_schema(
    summary="Best limiting fraction",
    description="Fraction c maximizing the limiting win probability.",
    tags=["Optimize"],
    parameters=[BestFractionQuerySerializer],
    responses=AsymptoticOptimumSerializer,
)
class BestFractionView(BaseQueryView):
    query_serializer_class = BestFractionQuerySerializer
    success_message = "Best fraction found"

    def compute(self, params):
        result = best_c_asymptotic(params["k"], params["strategy"])
        return AsymptoticOptimumSerializer(result).data


@extend_schema(
    summary="Optimum table",
    description="Optimal c and limiting probability for each k, rounded to 3 decimals.",
    tags=["Optimize"],
    parameters=[TableQuerySerializer],
    responses=TableRowSerializer(many=True),
    examples=[
        OpenApiExample(
            "k=2",
            value=[{"k": 2, "c_star": 0.386, "p_star": 0.701}],
            response_only=True,
        )
    ],
)
class TableView(BaseQueryView):
    query_serializer_class = TableQuerySerializer
    success_message = "Table computed"

    def compute(self, params):
        rows = table_optimal(params["k"], params["strategy"])
        return TableRowSerializer(rows, many=True).data
