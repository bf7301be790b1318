"""
Closed forms for the graded dual of WMat.

The coproduct deconcatenates along the irreducible factorization. The
product of Z_u and Z_v sums Z_w over every w whose coproduct contains
u ⊗ v: values are shuffled by τ, positions by μ, and the x0 positions of v
may take any value of u.
"""
import itertools
import logging

from .exceptions import StructureError
from .hopfcore import DualElement, GradedHopfAlgebra
from .pword import EMPTY_WORD, act, enumerate_packed, irreducible_factorize, shuffles, star
from .scalars import LinComb, TensorTerm

logger = logging.getLogger(__name__)

C1 = "C1"
C2 = "C2"
C3 = "C3"
C4 = "C4"


def _primal(z):
    return z.primal if isinstance(z, DualElement) else z


def _star_all(words):
    result = EMPTY_WORD
    for word in words:
        result = star(result, word)
    return result


def dual_coproduct_closed(z):
    factors = irreducible_factorize(_primal(z))
    terms = {}
    for i in range(len(factors) + 1):
        label = TensorTerm((DualElement(_star_all(factors[:i])), DualElement(_star_all(factors[i:]))))
        terms[label] = terms.get(label, 0) + 1
    return LinComb(terms)


def classify_pair(w1, w2):
    """
    C3: w1 only has x0. C4: w2 only has x0. C1: neither word has x0.
    C2: everything else. Checked in that order.
    """
    if not len(w1) or not len(w2):
        raise StructureError("classify_pair takes two nonempty words")
    if not w1.sup:
        return C3
    if not w2.sup:
        return C4
    if not w1.has_zero() and not w2.has_zero():
        return C1
    return C2


def gamma_set(w1, w2):
    """
    Letter sequences of length |w2|: nonzero letters of w2 shifted by
    sup(w1), each x0 of w2 free over the alphabet of w1 and x0.
    """
    s1 = w1.sup
    free = sorted(set(w1.letters) | {0})
    choices = [[letter + s1] if letter else free for letter in w2.letters]
    return [tuple(choice) for choice in itertools.product(*choices)]


def dual_product_closed(z1, z2):
    w1, w2 = _primal(z1), _primal(z2)
    if not len(w1):
        return LinComb.of(DualElement(w2))
    if not len(w2):
        return LinComb.of(DualElement(w1))
    logger.debug("dual product %s %s under %s", w1, w2, classify_pair(w1, w2))
    values = shuffles(w1.sup, w2.sup)
    positions = shuffles(len(w1), len(w2))
    terms = {}
    for g in gamma_set(w1, w2):
        letters = w1.letters + g
        for tau in values:
            for mu in positions:
                label = DualElement(act(tau, letters, mu))
                terms[label] = terms.get(label, 0) + 1
    return LinComb(terms)


class WMatDual(GradedHopfAlgebra):
    name = "WMat*"
    unit = DualElement(EMPTY_WORD)

    def _basis(self, n):
        return [DualElement(word) for word in enumerate_packed(n)]

    def product(self, a, b):
        return dual_product_closed(a, b)

    def coproduct(self, label):
        return dual_coproduct_closed(label)


WMAT_DUAL = WMatDual()
