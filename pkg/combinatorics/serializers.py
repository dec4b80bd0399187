from rest_framework import serializers

from .types import ProbabilityMode, ProblemSize


class ProblemSizeSerializer(serializers.Serializer):
    """
    Serializer for the (n, k) problem size shared by every finite query.

    Validated data carries the built ``ProblemSize`` under ``size``.
    """

    n = serializers.IntegerField(min_value=1, help_text="Number of ranks")
    k = serializers.IntegerField(min_value=1, help_text="Copies of each rank")

    def validate(self, attrs):
        attrs = super().validate(attrs)
        attrs["size"] = ProblemSize(n=attrs["n"], k=attrs["k"])
        return attrs


class ProbabilityResultSerializer(serializers.Serializer):
    """
    Serializer for a Probability result.

    Exact values carry the lowest-terms rational alongside the decimal.
    """

    probability = serializers.SerializerMethodField()
    value = serializers.SerializerMethodField()
    mode = serializers.ChoiceField(choices=ProbabilityMode.choices, read_only=True)

    def get_probability(self, obj):
        return obj.as_rational_string()

    def get_value(self, obj) -> float:
        return float(obj)
