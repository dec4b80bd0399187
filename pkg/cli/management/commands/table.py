from cli.base import RecordCommand
from cli.serializers import OutputMode
from optimize.serializers import TableQuerySerializer, TableRowSerializer
from optimize.tables import table_optimal

from ._arguments import add_strategy_argument


class Command(RecordCommand):
    help = "Optimal c and limiting win probability for a list of k"

    query_serializer_class = TableQuerySerializer
    input_names = ("k", "strategy")

    def add_arguments(self, parser):
        parser.add_argument(
            "--k",
            default="2,3,4,5,6,7,8,9,10,15,20,25",
            help="Comma-separated values of k",
        )
        add_strategy_argument(parser, required=False)
        super().add_arguments(parser)

    def compute(self, params, options):
        rows = table_optimal(params["k"], params["strategy"])
        return TableRowSerializer(rows, many=True).data, OutputMode.FLOAT
