from rest_framework import serializers

from combinatorics.serializers import ProblemSizeSerializer
from combinatorics.types import ProbabilityMode

from .strategies import Strategy, StrategyKind
from .utils import AUTO_MODE

MODE_CHOICES = [AUTO_MODE, *ProbabilityMode.values]


class StrategyQuerySerializer(ProblemSizeSerializer):
    """
    Serializer for a problem size plus one strategy.

    Validated data carries the built ``Strategy`` under ``strategy_obj``.
    """

    m = serializers.IntegerField(min_value=0, help_text="Cutoff M in [0, kn-1]")
    strategy = serializers.ChoiceField(choices=StrategyKind.choices)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        size = attrs["size"]
        if attrs["m"] > size.total - 1:
            raise serializers.ValidationError(
                {"m": f"Cutoff must lie in [0, {size.total - 1}] for {size}"}
            )
        attrs["strategy_obj"] = Strategy(kind=attrs["strategy"], cutoff=attrs["m"])
        return attrs


class ExactQuerySerializer(StrategyQuerySerializer):
    """
    Serializer for exact finite-n evaluation.
    """

    mode = serializers.ChoiceField(choices=MODE_CHOICES, default=AUTO_MODE)


class BruteQuerySerializer(StrategyQuerySerializer):
    """
    Serializer for the enumeration oracle.
    """
