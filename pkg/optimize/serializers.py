from rest_framework import serializers

from combinatorics.serializers import ProblemSizeSerializer
from finite.serializers import MODE_CHOICES
from finite.strategies import StrategyKind
from finite.utils import AUTO_MODE

from .search import OptimizationMethod


class BestCutoffQuerySerializer(ProblemSizeSerializer):
    """
    Serializer for the finite-n cutoff scan.
    """

    strategy = serializers.ChoiceField(choices=StrategyKind.choices)
    mode = serializers.ChoiceField(choices=MODE_CHOICES, default=AUTO_MODE)


class BestFractionQuerySerializer(serializers.Serializer):
    """
    Serializer for the asymptotic fraction search.
    """

    k = serializers.IntegerField(min_value=1)
    strategy = serializers.ChoiceField(choices=StrategyKind.choices)


class KValuesField(serializers.Field):
    """
    Comma-separated list of positive integers, e.g. "2,3,4".
    """

    default_error_messages = {
        "invalid": "Expected a comma-separated list of positive integers.",
        "empty": "At least one k is required.",
    }

    def to_internal_value(self, data):
        if isinstance(data, (list, tuple)):
            items = list(data)
        else:
            items = [item.strip() for item in str(data).split(",") if item.strip()]
        if not items:
            self.fail("empty")
        try:
            values = [int(item) for item in items]
        except (TypeError, ValueError):
            self.fail("invalid")
        if any(value < 1 for value in values):
            self.fail("invalid")
        return values

    def to_representation(self, value):
        return ",".join(str(item) for item in value)


class TableQuerySerializer(serializers.Serializer):
    """
    Serializer for regenerating the optimum table.
    """

    k = KValuesField()
    strategy = serializers.ChoiceField(
        choices=StrategyKind.choices, default=StrategyKind.INCLUSIVE
    )


class FiniteOptimumSerializer(serializers.Serializer):
    """
    Serializer for an exhaustive-scan result; ``value`` is a Probability.
    """

    argmax = serializers.IntegerField(source="arg", read_only=True)
    probability = serializers.SerializerMethodField()
    value = serializers.SerializerMethodField()
    method = serializers.ChoiceField(choices=OptimizationMethod.choices, read_only=True)
    kind = serializers.ChoiceField(choices=StrategyKind.choices, read_only=True)
    evaluations = serializers.IntegerField(read_only=True)

    def get_probability(self, obj):
        return obj.value.as_rational_string()

    def get_value(self, obj) -> float:
        return obj.value_float


class AsymptoticOptimumSerializer(serializers.Serializer):
    """
    Serializer for a grid-and-refine result.
    """

    argmax = serializers.FloatField(source="arg", read_only=True)
    value = serializers.FloatField(read_only=True)
    method = serializers.ChoiceField(choices=OptimizationMethod.choices, read_only=True)
    kind = serializers.ChoiceField(choices=StrategyKind.choices, read_only=True)
    tolerance = serializers.FloatField(read_only=True)
    evaluations = serializers.IntegerField(read_only=True)
    notes = serializers.DictField(read_only=True)


class TableRowSerializer(serializers.Serializer):
    k = serializers.IntegerField(read_only=True)
    c_star = serializers.FloatField(read_only=True)
    p_star = serializers.FloatField(read_only=True)
