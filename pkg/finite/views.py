from drf_spectacular.utils import OpenApiExample, extend_schema

from combinatorics.serializers import ProbabilityResultSerializer
from secretary_engine.base_views import BaseQueryView

from .enumeration import brute_force_win_probability
from .formulas import win_probability
from .serializers import BruteQuerySerializer, ExactQuerySerializer


@extend_schema(
    summary="Exact win probability",
    description=(
        "Win probability of the inclusive or strict strategy at finite n. "
        "Rationals are used up to the configured size limit, log-space floats "
        "beyond it, unless `mode` says otherwise."
    ),
    tags=["Finite"],
    parameters=[ExactQuerySerializer],
    responses=ProbabilityResultSerializer,
    examples=[
        OpenApiExample(
            "Inclusive n=2, k=2, M=1",
            value={"probability": "5/6", "value": 0.8333333333333334, "mode": "exact"},
            response_only=True,
        )
    ],
)
class ExactProbabilityView(BaseQueryView):
    """
    Finite-n win probability from the closed formulas.
    """

    query_serializer_class = ExactQuerySerializer
    success_message = "Win probability computed"

    def compute(self, params):
        probability = win_probability(
            params["size"], params["strategy_obj"], params["mode"]
        )
        return ProbabilityResultSerializer(probability).data


@extend_schema(
    summary="Brute-force win probability",
    description="Exact win probability by enumerating every distinct arrangement.",
    tags=["Finite"],
    parameters=[BruteQuerySerializer],
    responses=ProbabilityResultSerializer,
)
class BruteForceProbabilityView(BaseQueryView):
    query_serializer_class = BruteQuerySerializer
    success_message = "Win probability enumerated"

    def compute(self, params):
        probability = brute_force_win_probability(params["size"], params["strategy_obj"])
        return ProbabilityResultSerializer(probability).data
