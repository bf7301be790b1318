#!/usr/bin/env python
# -*- coding: utf-8
from __future__ import unicode_literals, absolute_import

import os
import sys

import django
from django.conf import settings
from django.test.utils import get_runner


def run_tests(*test_args):
    """Run the suite, or only the given labels, e.g. ``tests.test_ispw``."""
    if not test_args:
        test_args = ["tests"]

    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "tests.settings")
    django.setup()
    TestRunner = get_runner(settings)
    test_runner = TestRunner(verbosity=int(os.environ.get("PACKED_WORDS_TEST_VERBOSITY", 1)))
    failures = test_runner.run_tests(test_args)
    sys.exit(bool(failures))


if __name__ == "__main__":
    run_tests(*sys.argv[1:])
