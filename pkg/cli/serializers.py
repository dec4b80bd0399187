from rest_framework import serializers


class OutputMode:
    EXACT = "exact"
    FLOAT = "float"
    ESTIMATE = "estimate"

    choices = [EXACT, FLOAT, ESTIMATE]


class OutputRecordSerializer(serializers.Serializer):
    """
    Serializer for one command result as printed on standard output.

    ``inputs`` echoes the parsed arguments so a record re-parsed from JSON
    reproduces the query.
    """

    command = serializers.CharField()
    inputs = serializers.DictField()
    result = serializers.JSONField()
    mode = serializers.ChoiceField(choices=OutputMode.choices)
