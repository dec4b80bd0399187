from cli.base import RecordCommand
from cli.serializers import OutputMode
from finite.serializers import MODE_CHOICES
from finite.utils import AUTO_MODE
from optimize.search import best_c_asymptotic, best_cutoff_finite
from optimize.serializers import (
    AsymptoticOptimumSerializer,
    BestCutoffQuerySerializer,
    BestFractionQuerySerializer,
    FiniteOptimumSerializer,
)

from ._arguments import add_strategy_argument


class Command(RecordCommand):
    help = "Optimal cutoff at finite n, or optimal limiting fraction c"

    def add_arguments(self, parser):
        target = parser.add_mutually_exclusive_group(required=True)
        target.add_argument("--finite", type=int, metavar="N", help="Scan every M at n=N")
        target.add_argument(
            "--asymptotic", action="store_true", help="Maximize the limit over c"
        )
        parser.add_argument("--k", type=int, required=True)
        add_strategy_argument(parser)
        parser.add_argument(
            "--mode",
            choices=MODE_CHOICES,
            default=AUTO_MODE,
            help="Arithmetic for --finite",
        )
        super().add_arguments(parser)

    def get_query_serializer_class(self, options):
        if options["asymptotic"]:
            return BestFractionQuerySerializer
        return BestCutoffQuerySerializer

    def get_inputs(self, options):
        inputs = {"k": options["k"], "strategy": options["strategy"]}
        if options["asymptotic"]:
            inputs["asymptotic"] = True
        else:
            inputs.update(n=options["finite"], mode=options["mode"])
        return inputs

    def compute(self, params, options):
        if options["asymptotic"]:
            result = best_c_asymptotic(params["k"], params["strategy"])
            data = dict(AsymptoticOptimumSerializer(result).data)
            data.update(data.pop("notes"))
            return data, OutputMode.FLOAT

        result = best_cutoff_finite(params["size"], params["strategy"], params["mode"])
        return FiniteOptimumSerializer(result).data, result.value.mode.value
