"""Pytest wiring: configure Django as its own test runner would."""
import os

import django
from django.test.utils import setup_test_environment

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "secretary_engine.settings")
django.setup()
setup_test_environment()
