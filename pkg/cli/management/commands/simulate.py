from cli.base import RecordCommand
from cli.serializers import OutputMode
from montecarlo.serializers import SimulateQuerySerializer, SimulationReportSerializer
from montecarlo.simulation import DEFAULT_CHUNK_SIZE, estimate

from ._arguments import add_cutoff_argument, add_size_arguments, add_strategy_argument


class Command(RecordCommand):
    help = "Seeded Monte Carlo estimate of a strategy's win probability"

    query_serializer_class = SimulateQuerySerializer
    input_names = ("n", "k", "m", "strategy", "trials", "seed", "chunk_size", "workers")

    def add_arguments(self, parser):
        add_size_arguments(parser)
        add_cutoff_argument(parser)
        add_strategy_argument(parser)
        parser.add_argument("--trials", type=int, default=100_000)
        parser.add_argument("--seed", type=int, default=0, help="64-bit unsigned seed")
        parser.add_argument(
            "--chunk-size",
            type=int,
            default=DEFAULT_CHUNK_SIZE,
            help="Trials per independently seeded chunk",
        )
        parser.add_argument(
            "--workers",
            type=int,
            default=None,
            help="Worker processes (the estimate does not depend on this)",
        )
        super().add_arguments(parser)

    def compute(self, params, options):
        report = estimate(
            params["size"],
            params["strategy_obj"],
            params["config"],
            workers=params.get("workers"),
        )
        return SimulationReportSerializer(report).data, OutputMode.ESTIMATE
