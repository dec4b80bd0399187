from rest_framework import serializers

from finite.serializers import StrategyQuerySerializer

from .simulation import DEFAULT_CHUNK_SIZE, SEED_BOUND, SimulationConfig


class SimulateQuerySerializer(StrategyQuerySerializer):
    """
    Serializer for Monte Carlo estimation.

    Validated data carries the built ``SimulationConfig`` under ``config``.
    """

    trials = serializers.IntegerField(min_value=1, default=100_000)
    seed = serializers.IntegerField(min_value=0, max_value=SEED_BOUND - 1, default=0)
    chunk_size = serializers.IntegerField(min_value=1, default=DEFAULT_CHUNK_SIZE)
    workers = serializers.IntegerField(min_value=1, required=False, allow_null=True)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        attrs["config"] = SimulationConfig(
            trials=attrs["trials"], seed=attrs["seed"], chunk_size=attrs["chunk_size"]
        )
        return attrs


class SimulationReportSerializer(serializers.Serializer):
    """
    Serializer for a simulation report.
    """

    estimate = serializers.FloatField(read_only=True)
    std_error = serializers.FloatField(read_only=True)
    trials = serializers.IntegerField(read_only=True)
    wins = serializers.IntegerField(read_only=True)
