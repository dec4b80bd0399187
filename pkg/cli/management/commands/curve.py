from asymptotic.limits import limit_curve
from asymptotic.serializers import CurvePointSerializer, CurveQuerySerializer
from cli.base import RecordCommand
from cli.serializers import OutputMode

from ._arguments import add_strategy_argument


class Command(RecordCommand):
    help = "Limiting win probability over a grid of c, for plotting"

    query_serializer_class = CurveQuerySerializer
    input_names = ("k", "strategy", "step", "start", "stop")

    def add_arguments(self, parser):
        parser.add_argument("--k", type=int, required=True)
        add_strategy_argument(parser)
        parser.add_argument("--step", type=float, default=0.01)
        parser.add_argument("--start", type=float, default=0.0)
        parser.add_argument("--stop", type=float, default=1.0)
        super().add_arguments(parser)

    def compute(self, params, options):
        points = limit_curve(
            params["k"],
            params["strategy"],
            step=params["step"],
            start=params["start"],
            stop=params["stop"],
        )
        rows = CurvePointSerializer(
            [{"c": c, "value": value} for c, value in points], many=True
        ).data
        return rows, OutputMode.FLOAT
