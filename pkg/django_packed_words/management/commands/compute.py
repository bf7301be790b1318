from django.core.management.base import BaseCommand, CommandError

from django_packed_words.compext import pi_image, rho_image, rho_star
from django_packed_words.compositions import Composition, ExtComposition
from django_packed_words.exceptions import DegreeCapExceeded, PackedWordsError
from django_packed_words.expressions import parse, render, to_json
from django_packed_words.hopfcore import (
    antipode_generic,
    comultiply,
    multiply,
    reduced_coproduct,
)
from django_packed_words.ispw import p_gamma, p_lambda_gamma, params_from_gamma
from django_packed_words.perms import DENDRIFORM_KINDS, QUADRI_KINDS, operation, project_SH
from django_packed_words.qsymnsym import psi_image, psi_star_closed
from django_packed_words.scalars import apply_linear
from django_packed_words.suites import ALGEBRAS
from django_packed_words.wmat import antipode_closed_sum

GENERIC_OPERATIONS = ("product", "coproduct", "reduced-coproduct", "antipode")

SPECIAL_OPERATIONS = {
    "wmat": ("closed-antipode", "project-sh", "project-ce"),
    "ce": ("rho",),
    "ce-dual": ("rho-star",),
    "ispw": ("p-gamma", "p-lambda-gamma"),
    "ispw-dual": ("psi",),
    "nsym": ("psi-star",),
    "sh-dual": QUADRI_KINDS + tuple(DENDRIFORM_KINDS),
}


def check_operand(algebra, x):
    for label, _ in x:
        if label not in algebra.basis(label.degree):
            raise CommandError("%s is not a basis element of %s" % (label, algebra))


def _arity(operands, count):
    if len(operands) != count:
        raise CommandError("expected %d operand(s), got %d" % (count, len(operands)))


def _single_composition(x):
    if len(x) != 1 or x.items()[0][1] != 1:
        raise CommandError("expected a single composition gamma")
    return x.labels()[0].parts


def evaluate(name, op, texts):
    """Run ``op`` of the algebra registered as ``name`` on the operand strings."""
    algebra = ALGEBRAS[name]
    operands = [parse(text) for text in texts]
    if op == "rho-star":
        _arity(operands, 2)
        if any(not isinstance(getattr(label, "primal", None), ExtComposition) for label in operands[0].labels()):
            raise CommandError("rho-star acts on combinations of Z(0;n1,...,ns)")
        acting = operands[1].labels()
        if len(acting) != 1 or not isinstance(getattr(acting[0], "primal", None), Composition):
            raise CommandError("rho-star acts by a single dual basis element Z(k)")
        return rho_star(operands[0], acting[0]) * operands[1].items()[0][1]
    if op in ("p-gamma", "p-lambda-gamma"):
        _arity(operands, 1)
        alpha, beta = params_from_gamma(_single_composition(operands[0]))
        return p_gamma(alpha, beta) if op == "p-gamma" else p_lambda_gamma(alpha, beta)
    for x in operands:
        check_operand(algebra, x)
    if op == "product":
        if len(operands) < 2:
            raise CommandError("product takes at least two operands")
        result = operands[0]
        for x in operands[1:]:
            result = multiply(algebra, result, x)
        return result
    if op in QUADRI_KINDS or op in DENDRIFORM_KINDS:
        _arity(operands, 2)
        return operation(op)(*operands)
    _arity(operands, 1)
    x = operands[0]
    if op == "coproduct":
        return comultiply(algebra, x)
    if op == "reduced-coproduct":
        return reduced_coproduct(algebra, x)
    if op == "antipode":
        return antipode_generic(algebra, x)
    if op == "closed-antipode":
        return apply_linear(antipode_closed_sum, x)
    if op == "project-sh":
        return project_SH(x)
    if op == "project-ce":
        return pi_image(x)
    if op == "rho":
        return rho_image(x)
    if op == "psi":
        return psi_image(x)
    return apply_linear(psi_star_closed, x)


class Command(BaseCommand):
    help = "Evaluate one operation of a packed-word Hopf algebra on exact operands."

    def add_arguments(self, parser):
        parser.add_argument("algebra", choices=list(ALGEBRAS))
        parser.add_argument("operation")
        parser.add_argument("operands", nargs="*")
        parser.add_argument("--format", choices=["text", "json"], default="text")

    def handle(self, *args, **options):
        name, op = options["algebra"], options["operation"]
        allowed = GENERIC_OPERATIONS + SPECIAL_OPERATIONS.get(name, ())
        if op not in allowed:
            raise CommandError(
                "unknown operation %r for %s, choose from: %s" % (op, name, ", ".join(allowed))
            )
        try:
            result = evaluate(name, op, options["operands"])
        except DegreeCapExceeded as exc:
            raise CommandError("resource limit: %s" % exc)
        except PackedWordsError as exc:
            raise CommandError(str(exc))
        if options["verbosity"] >= 2:
            self.stdout.write("%s %s: %d term(s)" % (name, op, len(result)))
        self.stdout.write(to_json(result) if options["format"] == "json" else render(result))
