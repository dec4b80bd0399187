from cli.base import RecordCommand
from cli.serializers import OutputMode
from combinatorics.serializers import ProbabilityResultSerializer
from finite.enumeration import brute_force_win_probability
from finite.serializers import BruteQuerySerializer

from ._arguments import add_cutoff_argument, add_size_arguments, add_strategy_argument


class Command(RecordCommand):
    help = "Win probability by enumerating every arrangement (small kn only)"

    query_serializer_class = BruteQuerySerializer
    input_names = ("n", "k", "m", "strategy")

    def add_arguments(self, parser):
        add_size_arguments(parser)
        add_cutoff_argument(parser)
        add_strategy_argument(parser)
        super().add_arguments(parser)

    def compute(self, params, options):
        probability = brute_force_win_probability(params["size"], params["strategy_obj"])
        return ProbabilityResultSerializer(probability).data, OutputMode.EXACT
