"""
Extended compositions: the quotient of WMat that forgets the order of
letters, written as the semi-direct coproduct of the polynomial algebra
H = K[(1)] with the tensor algebra C on the generators (0;n).
"""
import collections
import itertools
import logging
from fractions import Fraction
from math import comb, factorial

from .compositions import (
    EMPTY_COMPOSITION,
    EXT_UNIT,
    Composition,
    ExtComposition,
    ext_compositions,
    shuffle_tuples,
    weak_compositions,
)
from .exceptions import ContractViolation, StructureError
from .hopfcore import (
    Character,
    DualElement,
    GradedHopfAlgebra,
    is_primitive,
    kernel_of,
    reduced_coproduct,
)
from .ispw import ISPW_ALGEBRA, p_gamma, p_lambda_gamma
from .scalars import BasisLabel, LinComb, TensorTerm, TruncatedSeries, apply_linear

logger = logging.getLogger(__name__)


def pi_project(word):
    """Frequencies (|w|_x0; |w|_x1, ..., |w|_x_sup)."""
    counts = collections.Counter(word.letters)
    return ExtComposition(counts.get(0, 0), [counts[letter] for letter in range(1, word.sup + 1)])


def pi_image(x):
    """Π on a combination of words or of tensors of words."""
    def image(label):
        if isinstance(label, TensorTerm):
            return TensorTerm(pi_project(factor) for factor in label.factors)
        return pi_project(label)

    return LinComb((image(label), c) for label, c in x)


def ce_product(a, b):
    return ExtComposition(a.alpha0 + b.alpha0, a.parts + b.parts)


def ce_coproduct(a):
    terms = collections.defaultdict(Fraction)
    p = len(a.parts)
    for zeros in range(a.alpha0 + 1):
        zero_weight = comb(a.alpha0, zeros)
        for size in range(p + 1):
            for chosen in itertools.combinations(range(p), size):
                rest = [a.parts[i] for i in range(p) if i not in chosen]
                for ks in itertools.product(*[range(1, a.parts[i] + 1) for i in chosen]):
                    weight = zero_weight
                    contracted = a.alpha0 - zeros
                    for i, k in zip(chosen, ks):
                        weight *= comb(a.parts[i], k)
                        contracted += a.parts[i] - k
                    left = ExtComposition(zeros, ks)
                    right = ExtComposition(contracted, rest)
                    terms[TensorTerm((left, right))] += weight
    return LinComb(terms)


class Ce(GradedHopfAlgebra):
    name = "Ce"
    unit = EXT_UNIT
    cap_setting = "COMPOSITION_DEGREE_CAP"

    def _basis(self, n):
        return ext_compositions(n)

    def product(self, a, b):
        return LinComb.of(ce_product(a, b))

    def coproduct(self, label):
        return ce_coproduct(label)


def ce_dual_coproduct(z):
    a = z.primal
    terms = collections.defaultdict(Fraction)
    for zeros in range(a.alpha0 + 1):
        for u in range(len(a.parts) + 1):
            left = DualElement(ExtComposition(zeros, a.parts[:u]))
            right = DualElement(ExtComposition(a.alpha0 - zeros, a.parts[u:]))
            terms[TensorTerm((left, right))] += 1
    return LinComb(terms)


def ce_dual_product(za, zb):
    a, b = za.primal, zb.primal
    p = len(a.parts)
    terms = collections.defaultdict(Fraction)
    for mu in range(b.alpha0 + 1):
        for gamma in weak_compositions(b.alpha0 - mu, p):
            weight = comb(a.alpha0 + mu, a.alpha0)
            grown = []
            for part, g in zip(a.parts, gamma):
                weight *= comb(part + g, part)
                grown.append(part + g)
            for parts in shuffle_tuples(tuple(grown), b.parts):
                terms[DualElement(ExtComposition(a.alpha0 + mu, parts))] += weight
    return LinComb(terms)


class CeDual(GradedHopfAlgebra):
    name = "Ce*"
    unit = DualElement(EXT_UNIT)
    cap_setting = "COMPOSITION_DEGREE_CAP"

    def _basis(self, n):
        return [DualElement(a) for a in ext_compositions(n)]

    def product(self, a, b):
        return ce_dual_product(a, b)

    def coproduct(self, label):
        return ce_dual_coproduct(label)


CE = Ce()
CE_DUAL = CeDual()


# The polynomial algebra H = K[(1)], with (m) = (1)^m stored as the
# one-part composition (m) and 1_H as the empty composition.


def h_power(m):
    return Composition((m,)) if m else EMPTY_COMPOSITION


def h_exponent(label):
    return sum(label.parts)


class PolynomialH(GradedHopfAlgebra):
    name = "H"
    unit = EMPTY_COMPOSITION
    cap_setting = "COMPOSITION_DEGREE_CAP"

    def _basis(self, n):
        return [h_power(n)]

    def product(self, a, b):
        return LinComb.of(h_power(h_exponent(a) + h_exponent(b)))

    def coproduct(self, label):
        m = h_exponent(label)
        return LinComb((TensorTerm((h_power(j), h_power(m - j))), comb(m, j)) for j in range(m + 1))


class TensorC(GradedHopfAlgebra):
    """T<(0;n)>: concatenation, with every generator (0;n) primitive."""

    name = "C"
    unit = EXT_UNIT
    cap_setting = "COMPOSITION_DEGREE_CAP"

    def _basis(self, n):
        return [a for a in ext_compositions(n) if not a.alpha0]

    def product(self, a, b):
        return LinComb.of(ce_product(a, b))

    def coproduct(self, label):
        parts = label.parts
        terms = collections.Counter()
        for size in range(len(parts) + 1):
            for chosen in itertools.combinations(range(len(parts)), size):
                left = ExtComposition(0, [parts[i] for i in chosen])
                right = ExtComposition(0, [parts[i] for i in range(len(parts)) if i not in chosen])
                terms[TensorTerm((left, right))] += 1
        return LinComb(terms)


H_ALGEBRA = PolynomialH()
C_ALGEBRA = TensorC()


def _require_c(label):
    if label.alpha0:
        raise StructureError("%s does not lie in the tensor algebra C" % label)


def rho_coaction(c):
    """ρ: C -> C ⊗ H, multiplicative, sending (0;n) to Σ C(n,k) (0;k) ⊗ (n-k)."""
    _require_c(c)
    terms = collections.defaultdict(Fraction)
    for ks in itertools.product(*[range(1, n + 1) for n in c.parts]):
        weight = 1
        for n, k in zip(c.parts, ks):
            weight *= comb(n, k)
        removed = sum(c.parts) - sum(ks)
        terms[TensorTerm((ExtComposition(0, ks), h_power(removed)))] += weight
    return LinComb(terms)


def rho_image(x):
    return apply_linear(rho_coaction, x)


class SemiDirectElement(BasisLabel):
    """(m) ⊗ (0;n1,...,nq) in H ⋊ C."""

    __slots__ = ("power", "word")

    def __init__(self, power, word=EXT_UNIT):
        if power < 0:
            raise StructureError("the H exponent is non-negative, got %d" % power)
        _require_c(word)
        self.power = power
        self.word = word

    def _identity(self):
        return (self.power, self.word)

    def sort_key(self):
        return (self.degree, self.power, self.word.sort_key())

    @property
    def degree(self):
        return self.power + self.word.degree

    def __str__(self):
        return "(%d)⋊%s" % (self.power, self.word)


class SemiDirect(GradedHopfAlgebra):
    """H ⋊ C with the product m̄ and the coproduct Δ̄."""

    name = "H⋊C"
    unit = SemiDirectElement(0)
    cap_setting = "COMPOSITION_DEGREE_CAP"

    def _basis(self, n):
        return [upsilon(a) for a in ext_compositions(n)]

    def product(self, a, b):
        return LinComb.of(SemiDirectElement(a.power + b.power, ce_product(a.word, b.word)))

    def coproduct(self, label):
        terms = collections.defaultdict(Fraction)
        for h_term, h_coefficient in H_ALGEBRA.coproduct(h_power(label.power)):
            h1, h2 = h_term.factors
            for c_term, c_coefficient in C_ALGEBRA.coproduct(label.word):
                c1, c2 = c_term.factors
                for rho_term, rho_coefficient in rho_coaction(c1):
                    c10, c11 = rho_term.factors
                    left = SemiDirectElement(h_exponent(h1), c10)
                    right = SemiDirectElement(h_exponent(h2) + h_exponent(c11), c2)
                    terms[TensorTerm((left, right))] += h_coefficient * c_coefficient * rho_coefficient
        return LinComb(terms)


SEMI_DIRECT = SemiDirect()


def upsilon(a):
    return SemiDirectElement(a.alpha0, ExtComposition(0, a.parts))


def upsilon_inv(element):
    return ExtComposition(element.power, element.word.parts)


def upsilon_image(x):
    def image(label):
        if isinstance(label, TensorTerm):
            return TensorTerm(upsilon(factor) for factor in label.factors)
        return upsilon(label)

    return LinComb((image(label), c) for label, c in x)


# The action of H* on C*.


def rho_star(z, h):
    """
    ρ*(Z_(0;n1..ns) ⊗ Z_(k)): the transpose of ρ. The unit of H* acts as
    the identity and Z_(k), k >= 1, kills the unit of C*.
    """
    if isinstance(z, LinComb):
        return apply_linear(lambda label: rho_star(label, h), z)
    word = z.primal
    _require_c(word)
    k = h_exponent(h.primal)
    if not k:
        return LinComb.of(z)
    terms = collections.defaultdict(Fraction)
    for delta in weak_compositions(k, len(word.parts)):
        weight = 1
        for n, d in zip(word.parts, delta):
            weight *= comb(n + d, n)
        grown = ExtComposition(0, [n + d for n, d in zip(word.parts, delta)])
        terms[DualElement(grown)] += weight
    return LinComb(terms)


# Characters and the action of Char(H) on Char(C).


def _series_coefficients(a, order):
    if a.has_constant_term():
        raise ContractViolation("characters of C are indexed by series without constant term")
    return [a[n] for n in range(order + 1)]


def omega_h(value):
    """The character of H sending (1) to ``value``."""
    value = Fraction(value)
    return Character(lambda label: value ** h_exponent(label), "omega_H(%s)" % value)


def omega_c(a):
    coefficients = _series_coefficients(a, a.order)

    def evaluate(label):
        result = Fraction(1)
        for part in label.parts:
            result *= factorial(part) * (coefficients[part] if part <= a.order else 0)
        return result

    return Character(evaluate, "omega_C")


def omega_c_bar(a):
    coefficients = _series_coefficients(a, a.order)

    def evaluate(label):
        result = Fraction(1)
        for part in label.parts:
            result *= (coefficients[part] if part <= a.order else 0) / Fraction(factorial(part))
        return result

    return Character(evaluate, "omega_C_bar")


def omega_action(value, a):
    """Ω(λ, a) read through the coaction ρ and the three character maps."""
    left, right = omega_c(a), omega_h(value)
    weighted = [Fraction(0)]
    for n in range(1, a.order + 1):
        total = Fraction(0)
        for term, c in rho_coaction(ExtComposition(0, (n,))):
            c_label, h_label = term.factors
            total += c * left.evaluate(c_label) * right.evaluate(h_label)
        weighted.append(total)
    b = TruncatedSeries(weighted, a.order)
    bar = omega_c_bar(b)
    return TruncatedSeries(
        [0] + [bar.evaluate(ExtComposition(0, (s,))) for s in range(1, a.order + 1)],
        a.order,
    )


def omega_action_direct(value, a):
    _series_coefficients(a, a.order)
    return a * TruncatedSeries.exponential(value, a.order)


# Primitive elements.


def gamma_2_ones(n):
    if n < 1:
        raise ContractViolation("gamma_2_ones needs n >= 1")
    return LinComb(
        (ExtComposition(0, [1] * k + [2] + [1] * (n - k)), (-1) ** k * comb(n, k))
        for k in range(n + 1)
    )


def ce_from_ispw(x):
    """Read block words (a1..an) as the extended compositions (0;a1..an)."""
    if isinstance(x, Composition):
        x = LinComb.of(x)
    return LinComb((ExtComposition(0, label.parts), c) for label, c in x)


def ispw_from_ce(x):
    def convert(label):
        if label.alpha0:
            raise StructureError("%s has x0 letters and no block-word reading" % label)
        return Composition(label.parts)

    return LinComb((convert(label), c) for label, c in x)


def gamma_of(alpha, beta):
    return ce_from_ispw(p_gamma(alpha, beta))


def gamma_lambda_of(alpha, beta):
    return ce_from_ispw(p_lambda_gamma(alpha, beta))


def zero_frequency_violation(label):
    """Labels no primitive of degree >= 2 can carry."""
    return (label.alpha0 > 0 and len(label.parts) > 0) or (label.alpha0 >= 2 and not label.parts)


def has_gap(parts):
    values = [0] + sorted(set(parts))
    return any(b >= a + 2 for a, b in zip(values, values[1:]))


def arrangements(parts):
    """The labels (0;γσ(1)..γσ(k)) for every rearrangement of ``parts``."""
    return sorted(ExtComposition(0, p) for p in set(itertools.permutations(parts)))


def class_kernel(parts):
    """Primitive elements of Ce supported on the rearrangements of ``parts``."""
    labels = arrangements(parts)
    basis = kernel_of(labels, lambda label: reduced_coproduct(CE, label))
    logger.debug("Ce class %r: %d of %d labels primitive", tuple(sorted(parts)), len(basis), len(labels))
    return basis


def ispw_image_is_primitive(x):
    return is_primitive(ISPW_ALGEBRA, ispw_from_ce(x))
