"""
The permutation Hopf algebra SH inside WMat, its graded dual, and the four
quadri products splitting the dual product.

A word in Z_σ1 · Z_σ2 takes its values partly from σ1 and partly from σ2,
and its positions likewise. The quadri products record where the smallest
value and the first position come from:

    nw  both from σ1
    ne  first position from σ1, smallest value from σ2
    sw  smallest value from σ1, first position from σ2
    se  both from σ2
"""
import itertools

from .exceptions import ContractViolation, StructureError
from .hopfcore import (
    DualElement,
    GradedHopfAlgebra,
    VerificationReport,
    comultiply,
    graded_pairs,
    graded_triples,
    run_check,
    _describe,
)
from .pword import (
    ALL,
    EMPTY_WORD,
    FIRST_FIXED,
    SECOND_FIXED,
    PackedWord,
    act,
    star,
)
from .pword import shuffles as position_shuffles
from .scalars import LinComb, lc_sum
from .wmatdual import dual_coproduct_closed
from .wmat import wmat_coproduct

NW = "nw"
NE = "ne"
SW = "sw"
SE = "se"
QUADRI_KINDS = (NW, NE, SW, SE)

LEFT = "left"
RIGHT = "right"
WEDGE = "wedge"
VEE = "vee"
DENDRIFORM_KINDS = {
    LEFT: (NW, SW),
    RIGHT: (NE, SE),
    WEDGE: (NW, NE),
    VEE: (SW, SE),
}

# (value shuffle kind, position shuffle kind)
_QUADRI_SHUFFLES = {
    NW: (FIRST_FIXED, FIRST_FIXED),
    NE: (SECOND_FIXED, FIRST_FIXED),
    SW: (FIRST_FIXED, SECOND_FIXED),
    SE: (SECOND_FIXED, SECOND_FIXED),
}


def permutation_words(n):
    return [PackedWord(p) for p in itertools.permutations(range(1, n + 1))]


class SH(GradedHopfAlgebra):
    name = "SH"
    unit = EMPTY_WORD

    def _basis(self, n):
        return permutation_words(n)

    def product(self, a, b):
        return LinComb.of(star(a, b))

    def coproduct(self, label):
        return wmat_coproduct(label)


def _primal(z):
    return z.primal if isinstance(z, DualElement) else z


def _shuffle_product(z1, z2, value_kind=ALL, position_kind=ALL):
    w1, w2 = _primal(z1), _primal(z2)
    letters = w1.letters + tuple(letter + len(w1) for letter in w2.letters)
    terms = {}
    for tau in position_shuffles(len(w1), len(w2), value_kind):
        for mu in position_shuffles(len(w1), len(w2), position_kind):
            label = DualElement(act(tau, letters, mu))
            terms[label] = terms.get(label, 0) + 1
    return LinComb(terms)


def sh_dual_product(z1, z2):
    return _shuffle_product(z1, z2)


class SHDual(GradedHopfAlgebra):
    name = "SH*"
    unit = DualElement(EMPTY_WORD)

    def _basis(self, n):
        return [DualElement(word) for word in permutation_words(n)]

    def product(self, a, b):
        return sh_dual_product(a, b)

    def coproduct(self, label):
        return dual_coproduct_closed(label)


SH_ALGEBRA = SH()
SH_DUAL = SHDual()


def project_SH(x):
    """Keep the permutation words of ``x``."""
    return LinComb((word, c) for word, c in x if word.is_permutation())


def quadri_product(kind, z1, z2):
    if kind not in _QUADRI_SHUFFLES:
        raise StructureError("unknown quadri product %r" % (kind,))
    if not len(_primal(z1)) or not len(_primal(z2)):
        raise ContractViolation("quadri products are defined on nonempty permutations")
    value_kind, position_kind = _QUADRI_SHUFFLES[kind]
    return _shuffle_product(z1, z2, value_kind, position_kind)


def dendriform(kind, z1, z2):
    if kind not in DENDRIFORM_KINDS:
        raise StructureError("unknown dendriform product %r" % (kind,))
    return lc_sum(quadri_product(part, z1, z2) for part in DENDRIFORM_KINDS[kind])


def _bilinear(operation):
    def apply(x, y):
        if isinstance(x, DualElement):
            x = LinComb.of(x)
        if isinstance(y, DualElement):
            y = LinComb.of(y)
        return lc_sum(
            c * d * operation(a, b)
            for a, c in x
            for b, d in y
        )
    return apply


def operation(kind):
    """A bilinear operation by name: a quadri kind, a dendriform kind, or "product"."""
    if kind == "product":
        return _bilinear(sh_dual_product)
    if kind in _QUADRI_SHUFFLES:
        return _bilinear(lambda a, b: quadri_product(kind, a, b))
    return _bilinear(lambda a, b: dendriform(kind, a, b))


# ((left inner, left outer), (right outer, right inner)) for
# (x ∘ y) • z = x ⊙ (y ⋄ z).
QUADRI_AXIOMS = (
    ((NW, NW), (NW, "product")),
    ((NE, NW), (NE, LEFT)),
    ((WEDGE, NE), (NE, RIGHT)),
    ((SW, NW), (SW, WEDGE)),
    ((SE, NW), (SE, NW)),
    ((VEE, NE), (SE, NE)),
    ((LEFT, SW), (SW, VEE)),
    ((RIGHT, SW), (SE, SW)),
    (("product", SE), (SE, SE)),
)

DENDRIFORM_AXIOMS = {
    (LEFT, RIGHT): (
        ((LEFT, LEFT), (LEFT, "product")),
        ((RIGHT, LEFT), (RIGHT, LEFT)),
        (("product", RIGHT), (RIGHT, RIGHT)),
    ),
    (WEDGE, VEE): (
        ((WEDGE, WEDGE), (WEDGE, "product")),
        ((VEE, WEDGE), (VEE, WEDGE)),
        (("product", VEE), (VEE, VEE)),
    ),
}


def _axiom_name(axiom):
    (inner, outer), (left, right) = axiom
    return "(x %s y) %s z = x %s (y %s z)" % (inner, outer, left, right)


def _check_axioms(report, axioms, degree):
    triples = list(graded_triples(SH_DUAL, degree))
    for axiom in axioms:
        (inner, outer), (left, right) = axiom

        def holds(case, inner=inner, outer=outer, left=left, right=right):
            x, y, z = case
            lhs = operation(outer)(operation(inner)(x, y), z)
            rhs = operation(left)(x, operation(right)(y, z))
            if lhs != rhs:
                return _describe(case)

        run_check(report, SH_DUAL.name, _axiom_name(axiom), degree, triples, holds)


def quadri_axiom_report(max_degree):
    report = VerificationReport()
    for degree in range(3, max_degree + 1):
        _check_axioms(report, QUADRI_AXIOMS, degree)
    return report


def dendriform_axiom_report(max_degree):
    report = VerificationReport()
    for degree in range(3, max_degree + 1):
        for axioms in DENDRIFORM_AXIOMS.values():
            _check_axioms(report, axioms, degree)
    return report


def zinbiel_report(max_degree):
    """Commutativity of the two splittings and the Zinbiel law for the left product."""
    report = VerificationReport()
    left = operation(LEFT)
    for degree in range(2, max_degree + 1):
        pairs = list(graded_pairs(SH_DUAL, degree))

        def commutes(case):
            a, b = case
            if dendriform(RIGHT, a, b) != dendriform(LEFT, b, a):
                return "x ≻ y ≠ y ≺ x for %s" % _describe(case)
            if dendriform(VEE, a, b) != dendriform(WEDGE, b, a):
                return "x ∨ y ≠ y ∧ x for %s" % _describe(case)

        run_check(report, SH_DUAL.name, "commutativity", degree, pairs, commutes)
    for degree in range(3, max_degree + 1):

        def zinbiel(case):
            x, y, z = case
            if left(left(x, y), z) != left(x, left(y, z)) + left(x, left(z, y)):
                return _describe(case)

        run_check(report, SH_DUAL.name, "Zinbiel law", degree, graded_triples(SH_DUAL, degree), zinbiel)
    return report


def bidendriform_witnesses():
    """
    Three dendriform products, with their coproducts, on which the
    bidendriform compatibilities break down.
    """
    def z(*letters):
        return DualElement(PackedWord(letters))

    inputs = (
        ("Z[1] ≺ Z[1,2]", LEFT, z(1), z(1, 2)),
        ("Z[2,1] ≺ Z[2,1,3]", LEFT, z(2, 1), z(2, 1, 3)),
        ("Z[2,1,3] ∧ Z[1]", WEDGE, z(2, 1, 3), z(1)),
    )
    return [
        (description, comultiply(SH_DUAL, dendriform(kind, a, b)))
        for description, kind, a, b in inputs
    ]
