from drf_spectacular.utils import extend_schema

from secretary_engine.base_views import BaseQueryView

from .serializers import SimulateQuerySerializer, SimulationReportSerializer
from .simulation import estimate


@extend_schema(
    summary="Monte Carlo estimate",
    description=(
        "Seeded simulation of one strategy. The same (trials, seed, chunk_size) "
        "always gives the same estimate."
    ),
    tags=["Monte Carlo"],
    parameters=[SimulateQuerySerializer],
    responses=SimulationReportSerializer,
)
class SimulateView(BaseQueryView):
    query_serializer_class = SimulateQuerySerializer
    success_message = "Simulation completed"

    def compute(self, params):
        report = estimate(
            params["size"],
            params["strategy_obj"],
            params["config"],
            workers=params.get("workers"),
        )
        return SimulationReportSerializer(report).data
