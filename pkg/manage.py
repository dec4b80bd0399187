#!/usr/bin/env python
"""Command-line entry point for the secretary engine and Django tasks."""
import sys


def main():
    """Run a computation or an administrative task."""
    from cli.dispatch import dispatch

    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
