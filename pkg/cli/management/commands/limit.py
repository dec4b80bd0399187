from asymptotic.limits import limit_value
from asymptotic.serializers import LimitQuerySerializer
from cli.base import RecordCommand
from cli.serializers import OutputMode

from ._arguments import add_strategy_argument


class Command(RecordCommand):
    help = "Limiting win probability when the cutoff is a fraction c of kn"

    query_serializer_class = LimitQuerySerializer
    input_names = ("k", "c", "strategy")

    def add_arguments(self, parser):
        parser.add_argument("--k", type=int, required=True)
        parser.add_argument("--c", type=float, required=True, help="Fraction in [0, 1]")
        add_strategy_argument(parser)
        super().add_arguments(parser)

    def compute(self, params, options):
        value = limit_value(params["k"], params["c"], params["strategy"])
        return {"value": value}, OutputMode.FLOAT
