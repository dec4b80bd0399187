from cli.base import RecordCommand
from combinatorics.serializers import ProbabilityResultSerializer
from finite.formulas import win_probability
from finite.serializers import MODE_CHOICES, ExactQuerySerializer
from finite.utils import AUTO_MODE

from ._arguments import add_cutoff_argument, add_size_arguments, add_strategy_argument


class Command(RecordCommand):
    help = "Exact win probability of a threshold strategy at finite n"

    query_serializer_class = ExactQuerySerializer
    input_names = ("n", "k", "m", "strategy", "mode")

    def add_arguments(self, parser):
        add_size_arguments(parser)
        add_cutoff_argument(parser)
        add_strategy_argument(parser)
        parser.add_argument(
            "--mode",
            choices=MODE_CHOICES,
            default=AUTO_MODE,
            help="Arithmetic: exact rationals, log-space floats, or auto by size",
        )
        super().add_arguments(parser)

    def compute(self, params, options):
        probability = win_probability(
            params["size"], params["strategy_obj"], params["mode"]
        )
        return ProbabilityResultSerializer(probability).data, probability.mode.value
