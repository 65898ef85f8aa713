"""Configure Django so the SimpleTestCase suites run under plain pytest."""

import os
import sys
from pathlib import Path

BACKEND_DIR = Path(__file__).resolve().parent / 'backend'
if str(BACKEND_DIR) not in sys.path:
    sys.path.insert(0, str(BACKEND_DIR))

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'curvecal.settings')

import django  # noqa: E402

django.setup()


def pytest_configure(config):
    # Mirror what Django's test runner does before running tests
    # (e.g. allowing the 'testserver' host).
    from django.test.utils import setup_test_environment

    setup_test_environment()
