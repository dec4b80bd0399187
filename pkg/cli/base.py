import csv
import io

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from secretary_engine.exceptions import DomainError, ToleranceNotReachedError

from .serializers import OutputRecordSerializer

# Exit statuses
EXIT_NUMERIC_FAILURE = 1
EXIT_USAGE = 2

FORMAT_JSON = "json"
FORMAT_CSV = "csv"


class RecordCommand(BaseCommand):
    """
    Base command that validates its options through a query serializer and
    prints one output record.

    Subclasses declare ``input_names`` (the options echoed as inputs) and
    implement ``compute``, returning ``(result, mode)``. A result that is a
    list of dicts is a table: JSON keeps it under ``result``, CSV prints one
    line per row.
    """

    requires_system_checks = []
    query_serializer_class = None
    input_names = ()

    def add_arguments(self, parser):
        parser.add_argument(
            "--format",
            choices=[FORMAT_JSON, FORMAT_CSV],
            default=FORMAT_JSON,
            help="Output format (default: json)",
        )

    def get_query_serializer_class(self, options):
        return self.query_serializer_class

    def get_inputs(self, options):
        return {
            name: options[name]
            for name in self.input_names
            if options.get(name) is not None
        }

    def compute(self, params, options):
        raise NotImplementedError

    def handle(self, *args, **options):
        inputs = self.get_inputs(options)
        serializer = self.get_query_serializer_class(options)(data=inputs)
        if not serializer.is_valid():
            raise CommandError(
                f"Invalid arguments: {dict(serializer.errors)}", returncode=EXIT_USAGE
            )

        try:
            result, mode = self.compute(serializer.validated_data, options)
        except ToleranceNotReachedError as exc:
            raise CommandError(str(exc), returncode=EXIT_NUMERIC_FAILURE)
        except DomainError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)

        record = OutputRecordSerializer(
            {
                "command": self.command_name,
                "inputs": inputs,
                "result": result,
                "mode": mode,
            }
        ).data

        if options["format"] == FORMAT_CSV:
            self.stdout.write(render_csv(record), ending="")
        else:
            self.stdout.write(JSONRenderer().render(record).decode("utf-8"))

    @property
    def command_name(self):
        return self.__module__.rsplit(".", 1)[-1]


def render_csv(record) -> str:
    """
    CSV text for a record: one line per row for tables, otherwise a single
    line of inputs followed by result fields.
    """
    result = record["result"]
    if isinstance(result, list):
        rows = [dict(row) for row in result]
    else:
        row = dict(record["inputs"])
        for key, value in result.items():
            row[f"result_{key}" if key in row else key] = value
        row["output_mode"] = record["mode"]
        rows = [row]

    buffer = io.StringIO()
    writer = csv.DictWriter(
        buffer, fieldnames=list(rows[0]) if rows else [], lineterminator="\n"
    )
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()
