from drf_spectacular.utils import extend_schema

from secretary_engine.base_views import BaseQueryView

from .limits import limit_curve, limit_value
from .serializers import CurvePointSerializer, CurveQuerySerializer, LimitQuerySerializer


@extend_schema(
    summary="Limiting win probability",
    description="Limit of the win probability when M ~ ckn and n grows without bound.",
    tags=["Asymptotic"],
    parameters=[LimitQuerySerializer],
)
class LimitView(BaseQueryView):
    query_serializer_class = LimitQuerySerializer
    success_message = "Limit computed"

    def compute(self, params):
        return {"value": limit_value(params["k"], params["c"], params["strategy"])}


@extend_schema(
    summary="Limit curve",
    description="Limiting win probability over an evenly spaced grid of c.",
    tags=["Asymptotic"],
    parameters=[CurveQuerySerializer],
    responses=CurvePointSerializer(many=True),
)
class CurveView(BaseQueryView):
    """
    Plot-ready (c, value) points.
    """

    query_serializer_class = CurveQuerySerializer
    success_message = "Curve computed"

    def compute(self, params):
        points = limit_curve(
            params["k"],
            params["strategy"],
            step=params["step"],
            start=params["start"],
            stop=params["stop"],
        )
        return CurvePointSerializer(
            [{"c": c, "value": value} for c, value in points], many=True
        ).data
