from finite.strategies import StrategyKind


def add_size_arguments(parser):
    parser.add_argument("--n", type=int, required=True, help="Number of ranks")
    parser.add_argument("--k", type=int, required=True, help="Copies of each rank")


def add_strategy_argument(parser, required=True):
    parser.add_argument(
        "--strategy",
        choices=StrategyKind.values,
        required=required,
        default=None if required else StrategyKind.INCLUSIVE.value,
        help="inclusive (rank >= prefix maximum) or strict (rank > prefix maximum)",
    )


def add_cutoff_argument(parser):
    parser.add_argument(
        "--m", type=int, required=True, help="Number of items to let pass, in [0, kn-1]"
    )
