from django.core.management.base import BaseCommand, CommandError

from django_packed_words.exceptions import DegreeCapExceeded, PackedWordsError
from django_packed_words.expressions import render, to_json
from django_packed_words.hopfcore import primitive_basis
from django_packed_words.suites import ALGEBRAS


class Command(BaseCommand):
    help = "Print the canonical basis of the primitive elements in one degree."

    def add_arguments(self, parser):
        parser.add_argument("algebra", choices=list(ALGEBRAS))
        parser.add_argument("degree", type=int)
        parser.add_argument("--format", choices=["text", "json"], default="text")

    def handle(self, *args, **options):
        algebra = ALGEBRAS[options["algebra"]]
        degree = options["degree"]
        try:
            basis = primitive_basis(algebra, degree)
        except DegreeCapExceeded as exc:
            raise CommandError("resource limit: %s" % exc)
        except PackedWordsError as exc:
            raise CommandError(str(exc))
        self.stdout.write("dim Prim_%d(%s) = %d" % (degree, algebra, len(basis)))
        for vector in basis:
            self.stdout.write(to_json(vector) if options["format"] == "json" else render(vector))
