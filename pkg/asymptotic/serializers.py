from rest_framework import serializers

from finite.strategies import StrategyKind


class LimitQuerySerializer(serializers.Serializer):
    """
    Serializer for one limiting win probability.

    c may be 0 or 1, where the continuous extension applies.
    """

    k = serializers.IntegerField(min_value=1)
    c = serializers.FloatField(min_value=0.0, max_value=1.0)
    strategy = serializers.ChoiceField(choices=StrategyKind.choices)


class CurveQuerySerializer(serializers.Serializer):
    """
    Serializer for a limit curve over an evenly spaced c grid.
    """

    k = serializers.IntegerField(min_value=1)
    strategy = serializers.ChoiceField(choices=StrategyKind.choices)
    step = serializers.FloatField(default=0.01)
    start = serializers.FloatField(min_value=0.0, max_value=1.0, default=0.0)
    stop = serializers.FloatField(min_value=0.0, max_value=1.0, default=1.0)

    def validate_step(self, value):
        """Validate step is positive."""
        if value <= 0:
            raise serializers.ValidationError("Step must be greater than 0")
        return value

    def validate(self, attrs):
        if attrs["start"] >= attrs["stop"]:
            raise serializers.ValidationError(
                {"stop": "Stop must be greater than start"}
            )
        return attrs


class CurvePointSerializer(serializers.Serializer):
    c = serializers.FloatField(read_only=True)
    value = serializers.FloatField(read_only=True)
