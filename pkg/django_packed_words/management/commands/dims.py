from django.core.management.base import BaseCommand, CommandError

from django_packed_words.exceptions import DegreeCapExceeded
from django_packed_words.hopfcore import primitive_basis
from django_packed_words.suites import ALGEBRAS


class Command(BaseCommand):
    help = "Tabulate the dimensions of an algebra and of its primitive space by degree."

    def add_arguments(self, parser):
        parser.add_argument("algebra", choices=list(ALGEBRAS))
        parser.add_argument("max_degree", type=int)
        parser.add_argument(
            "--no-primitives",
            action="store_false",
            dest="primitives",
            help="Only count basis elements.",
        )

    def handle(self, *args, **options):
        algebra = ALGEBRAS[options["algebra"]]
        if options["max_degree"] < 1:
            raise CommandError("max_degree must be at least 1")
        self.stdout.write("n\tdim\tprim" if options["primitives"] else "n\tdim")
        try:
            for n in range(1, options["max_degree"] + 1):
                row = [n, len(algebra.basis(n))]
                if options["primitives"]:
                    row.append(len(primitive_basis(algebra, n)))
                self.stdout.write("\t".join(str(value) for value in row))
        except DegreeCapExceeded as exc:
            raise CommandError("resource limit: %s" % exc)
