"""
Quasi-symmetric functions on the monomial basis, their dual NSym, and
the universal morphism from a graded connected Hopf algebra with a
character into QSym. On ISPW* this morphism is an isomorphism, given in
closed form by ``psi_closed``; ``psi_star_closed`` is its transpose.
"""
import collections
import logging
from fractions import Fraction
from math import factorial

from .compositions import Composition, coarsenings, compositions, compositions_with_parts_all
from .hopfcore import (
    Character,
    DualElement,
    GradedHopfAlgebra,
    iterated_coproduct,
)
from .ispw import ISPW_DUAL
from .scalars import LinComb, TensorTerm, matrix_rank

logger = logging.getLogger(__name__)


class Monomial(Composition):
    """M_α; its dual basis element prints as M*_α."""

    __slots__ = ()

    def __str__(self):
        return "M(%s)" % ",".join(str(part) for part in self.parts)

    def dual_str(self):
        return "M*(%s)" % ",".join(str(part) for part in self.parts)


EMPTY_MONOMIAL = Monomial()


def quasi_shuffle(a, b):
    """Counter of part tuples in the quasi-shuffle of ``a`` and ``b``."""
    if not a or not b:
        return collections.Counter({tuple(a) + tuple(b): 1})
    result = collections.Counter()
    for rest, count in quasi_shuffle(a[1:], b).items():
        result[(a[0],) + rest] += count
    for rest, count in quasi_shuffle(a, b[1:]).items():
        result[(b[0],) + rest] += count
    for rest, count in quasi_shuffle(a[1:], b[1:]).items():
        result[(a[0] + b[0],) + rest] += count
    return result


def qsym_product(a, b):
    return LinComb((Monomial(parts), count) for parts, count in quasi_shuffle(a.parts, b.parts).items())


def qsym_coproduct(a):
    parts = a.parts
    return LinComb(
        (TensorTerm((Monomial(parts[:i]), Monomial(parts[i:]))), 1)
        for i in range(len(parts) + 1)
    )


class QSym(GradedHopfAlgebra):
    name = "QSym"
    unit = EMPTY_MONOMIAL
    cap_setting = "COMPOSITION_DEGREE_CAP"

    def _basis(self, n):
        return [Monomial(c.parts) for c in compositions(n)]

    def product(self, a, b):
        return qsym_product(a, b)

    def coproduct(self, label):
        return qsym_coproduct(label)


def nsym_product(za, zb):
    return LinComb.of(DualElement(Monomial(za.primal.parts + zb.primal.parts)))


def nsym_coproduct(z):
    """Multiplicative extension of Δ(M*(n)) = Σ_s M*(s) ⊗ M*(n-s)."""
    partial = collections.Counter({((), ()): 1})
    for part in z.primal.parts:
        grown = collections.Counter()
        for (left, right), count in partial.items():
            for s in range(part + 1):
                grown[(left + ((s,) if s else ()), right + ((part - s,) if part - s else ()))] += count
        partial = grown
    return LinComb(
        (TensorTerm((DualElement(Monomial(left)), DualElement(Monomial(right)))), count)
        for (left, right), count in partial.items()
    )


class NSym(GradedHopfAlgebra):
    name = "NSym"
    unit = DualElement(EMPTY_MONOMIAL)
    cap_setting = "COMPOSITION_DEGREE_CAP"

    def _basis(self, n):
        return [DualElement(Monomial(c.parts)) for c in compositions(n)]

    def product(self, a, b):
        return nsym_product(a, b)

    def coproduct(self, label):
        return nsym_coproduct(label)


QSYM = QSym()
NSYM = NSym()


def _parts_of(label):
    return label.primal.parts if isinstance(label, DualElement) else label.parts


def zeta_qsym_value(label):
    return 1 if len(label.parts) <= 1 else 0


def zeta_ispw_dual_value(label):
    return Fraction(1, factorial(len(_parts_of(label))))


zeta_qsym = Character(zeta_qsym_value, "zeta_Q")
zeta_ispw_dual = Character(zeta_ispw_dual_value, "zeta")


def abs_morphism(H, zeta, h):
    """
    The unique Hopf morphism H -> QSym with ζ_Q ∘ Ψ = ζ, evaluated on the
    label ``h``: the coefficient of M_α is ζ^{⊗k} applied to the component
    of Δ^(k-1)(h) in multidegree α.
    """
    if isinstance(h, LinComb):
        return LinComb(
            (m, c * d) for label, c in h for m, d in abs_morphism(H, zeta, label)
        )
    n = h.degree
    if not n:
        return LinComb.of(EMPTY_MONOMIAL)
    terms = collections.defaultdict(Fraction)
    for k in range(1, n + 1):
        for term, c in iterated_coproduct(H, h, k - 1):
            factors = term.factors if isinstance(term, TensorTerm) else (term,)
            degrees = tuple(factor.degree for factor in factors)
            if 0 in degrees:
                continue
            value = c
            for factor in factors:
                value *= zeta.evaluate(factor)
                if not value:
                    break
            if value:
                terms[Monomial(degrees)] += value
    return LinComb(terms)


def psi_closed(z):
    """Ψ(Z_k): Σ over groupings of consecutive parts, weighted by 1/Π s_j!."""
    parts = _parts_of(z)
    if not parts:
        return LinComb.of(EMPTY_MONOMIAL)
    terms = collections.defaultdict(Fraction)
    for sizes, merged in coarsenings(parts):
        weight = 1
        for size in sizes:
            weight *= factorial(size)
        terms[Monomial(merged)] += Fraction(1, weight)
    return LinComb(terms)


def psi_image(x):
    return LinComb((m, c * d) for label, c in x for m, d in psi_closed(label))


def _refinements(part):
    """Pairs (number of pieces, pieces) for every composition of ``part``."""
    return [(len(pieces), pieces) for pieces in compositions_with_parts_all(part)]


def psi_star_closed(m):
    """Ψ*(M*_β): every refinement of β, each β_j cut into s_j pieces, weighted by 1/Π s_j!."""
    partial = {(): Fraction(1)}
    for part in _parts_of(m):
        grown = collections.defaultdict(Fraction)
        for prefix, weight in partial.items():
            for size, pieces in _refinements(part):
                grown[prefix + tuple(pieces)] += weight / factorial(size)
        partial = grown
    return LinComb((Composition(parts), weight) for parts, weight in partial.items())


def psi_matrix(n):
    """Rows indexed by Z_α, columns by M_β, in canonical composition order."""
    basis = compositions(n)
    rows = []
    for alpha in basis:
        image = psi_closed(DualElement(alpha))
        rows.append([image.coefficient(Monomial(beta.parts)) for beta in basis])
    return rows


def psi_rank(n):
    rank = matrix_rank(psi_matrix(n))
    logger.debug("Psi in degree %d has rank %d", n, rank)
    return rank


def psi_generic(z):
    return abs_morphism(ISPW_DUAL, zeta_ispw_dual, z)
