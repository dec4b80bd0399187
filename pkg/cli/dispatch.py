import os
import sys
from typing import Optional, Sequence

SETTINGS_MODULE = "secretary_engine.settings"
HELP_FLAGS = {"help", "-h", "--help", "--version"}


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command and return its exit status.

    Args:
        argv: Arguments after the program name, e.g. ["exact", "--n", "2", ...]

    Returns:
        0 on success, 1 when a numeric evaluation could not reach its
        tolerance, 2 on argument errors
    """
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", SETTINGS_MODULE)
    try:
        import django
        from django.core.management import ManagementUtility, get_commands
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc

    argv = list(sys.argv[1:] if argv is None else argv)
    django.setup()

    if argv and argv[0] not in HELP_FLAGS and argv[0] not in get_commands():
        sys.stderr.write(f"Unknown command: {argv[0]!r}\n")
        return 2

    try:
        ManagementUtility(["manage.py", *argv]).execute()
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        if isinstance(code, int):
            return code
        sys.stderr.write(f"{code}\n")
        return 1
    return 0
