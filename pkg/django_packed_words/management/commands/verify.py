from django.core.management.base import BaseCommand, CommandError

from django_packed_words.conf import get_setting
from django_packed_words.exceptions import DegreeCapExceeded
from django_packed_words.suites import ALL, SUITES, run_suite


class Command(BaseCommand):
    help = "Run verification suites and report every check; exits nonzero when one fails."

    def add_arguments(self, parser):
        parser.add_argument("suite", nargs="?", choices=list(SUITES) + [ALL])
        parser.add_argument("max_degree_arg", nargs="?", type=int, metavar="max_degree")
        parser.add_argument("--suite", dest="suite_option", choices=list(SUITES) + [ALL])
        parser.add_argument("--max-degree", dest="max_degree", type=int)
        parser.add_argument("--seed", type=int, default=None)

    def handle(self, *args, **options):
        suite = options["suite_option"] or options["suite"] or ALL
        max_degree = next(
            (value for value in (options["max_degree"], options["max_degree_arg"]) if value is not None), 4
        )
        if max_degree < 1:
            raise CommandError("max_degree must be at least 1")
        seed = options["seed"] if options["seed"] is not None else get_setting("DEFAULT_SEED")
        try:
            report = run_suite(suite, max_degree, seed)
        except DegreeCapExceeded as exc:
            raise CommandError("resource limit: %s" % exc)
        for line in report.lines():
            if options["verbosity"] >= 2 or line.startswith("FAIL"):
                self.stdout.write(line)
        failures = report.failures()
        self.stdout.write(
            "%s: %d check(s), %d failure(s)" % (suite, len(report), len(failures))
        )
        if failures:
            raise CommandError("%d check(s) failed" % len(failures), returncode=1)
