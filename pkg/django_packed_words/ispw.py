"""
Increasing strict packed words.

x1^a1 x2^a2 ... xn^an is stored as the composition (a1, ..., an). The
product concatenates blocks, the coproduct splits the set of blocks, so
the algebra is free on the one-block words and cocommutative.
"""
import collections
import itertools
import logging
from fractions import Fraction
from math import comb, factorial

from .compositions import EMPTY_COMPOSITION, Composition, compositions, shuffle_tuples
from .exceptions import ContractViolation, StructureError
from .hopfcore import DualElement, GradedHopfAlgebra, kernel_of, reduced_coproduct
from .pword import PackedWord
from .scalars import LinComb, TensorTerm, apply_linear

logger = logging.getLogger(__name__)


class ISPW(GradedHopfAlgebra):
    name = "ISPW"
    unit = EMPTY_COMPOSITION
    cap_setting = "COMPOSITION_DEGREE_CAP"

    def _basis(self, n):
        return compositions(n)

    def product(self, a, b):
        return ispw_product(a, b)

    def coproduct(self, label):
        return ispw_coproduct(label)


class ISPWDual(GradedHopfAlgebra):
    """Shuffle of part tuples, deconcatenation."""

    name = "ISPW*"
    unit = DualElement(EMPTY_COMPOSITION)
    cap_setting = "COMPOSITION_DEGREE_CAP"

    def _basis(self, n):
        return [DualElement(c) for c in compositions(n)]

    def product(self, a, b):
        return LinComb(
            (DualElement(Composition(parts)), 1)
            for parts in shuffle_tuples(a.primal.parts, b.primal.parts)
        )

    def coproduct(self, label):
        parts = label.primal.parts
        return LinComb(
            (TensorTerm((DualElement(Composition(parts[:i])), DualElement(Composition(parts[i:])))), 1)
            for i in range(len(parts) + 1)
        )


ISPW_ALGEBRA = ISPW()
ISPW_DUAL = ISPWDual()


def ispw_product(a, b):
    return LinComb.of(a + b)


def ispw_coproduct(a):
    terms = collections.Counter()
    blocks = range(len(a))
    for size in range(len(a) + 1):
        for chosen in itertools.combinations(blocks, size):
            left = Composition(a[i] for i in chosen)
            right = Composition(a[i] for i in blocks if i not in chosen)
            terms[TensorTerm((left, right))] += 1
    return LinComb(terms)


# Views between packed words and block words.


def from_wmat(word):
    """The composition of a word x1^a1 ... xn^an; other words raise StructureError."""
    letters = word.letters
    if 0 in letters or any(b < a for a, b in zip(letters, letters[1:])):
        raise StructureError("%s is not an increasing strict packed word" % word)
    return Composition(len(list(run)) for _, run in itertools.groupby(letters))


def to_wmat(composition):
    return PackedWord(j for j, part in enumerate(composition.parts, 1) for _ in range(part))


def _kills(label):
    factors = label.factors if isinstance(label, TensorTerm) else (label,)
    return any(factor.has_zero() for factor in factors)


def project_spw(x):
    """Quotient map killing every word, or tensor of words, containing x0."""
    return LinComb((label, c) for label, c in x if not _kills(label))


def to_block_words(x):
    """Read a combination of increasing strict words, or tensors of them, as block words."""
    def convert(label):
        if isinstance(label, TensorTerm):
            return TensorTerm(from_wmat(factor) for factor in label.factors)
        return from_wmat(label)

    return LinComb((convert(label), c) for label, c in x)


# Primitive families.


def params_from_gamma(gamma):
    """Run lengths alpha and run values beta of gamma."""
    gamma = tuple(gamma)
    if not gamma or any(g < 1 for g in gamma):
        raise StructureError("gamma must be a nonempty tuple of positive integers")
    runs = [(value, len(list(run))) for value, run in itertools.groupby(gamma)]
    beta = tuple(value for value, _ in runs)
    alpha = tuple(length for _, length in runs)
    if len(set(beta)) != len(beta):
        raise ContractViolation("the runs of %r repeat a value" % (gamma,))
    return alpha, beta


def gamma_from_params(alpha, beta):
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != len(beta) or not alpha:
        raise StructureError("alpha and beta must be nonempty and of equal length")
    if any(a < 1 for a in alpha) or any(b < 1 for b in beta):
        raise StructureError("alpha and beta take positive values")
    if len(set(beta)) != len(beta):
        raise ContractViolation("beta values must be pairwise distinct, got %r" % (beta,))
    return tuple(b for a, b in zip(alpha, beta) for _ in range(a))


def _block_word(gamma, images):
    return Composition(gamma[image - 1] for image in images)


def _divisor(alpha):
    result = 1
    for a in alpha:
        result *= factorial(a)
    return result


def p_gamma(alpha, beta):
    gamma = gamma_from_params(alpha, beta)
    a1 = alpha[0]
    theta = len(gamma)
    rho = theta - a1
    terms = collections.defaultdict(Fraction)
    scale = Fraction(1, _divisor(alpha[1:]))
    for sigma in itertools.permutations(range(1, rho + 1)):
        middle = [image + a1 for image in sigma]
        for k in range(1, a1 + 1):
            images = list(range(1, a1 - k + 2)) + middle + list(range(a1 - k + 2, a1 + 1))
            outer = (-1) ** (k - 1) * comb(a1 - 1, k - 1)
            for s in range(rho + 1):
                if s:
                    p = a1 - k + s
                    images[p - 1], images[p] = images[p], images[p - 1]
                terms[_block_word(gamma, images)] += scale * outer * (-1) ** s * comb(rho, s)
    return LinComb(terms)


def p_lambda_gamma(alpha, beta):
    gamma = gamma_from_params(alpha, beta)
    a1 = alpha[0]
    theta = len(gamma)
    terms = collections.defaultdict(Fraction)
    scale = Fraction(1, _divisor(alpha))
    for images in itertools.permutations(range(1, theta + 1)):
        inverse = dict((image, position) for position, image in enumerate(images, 1))
        weight = sum((-1) ** (inverse[i] - 1) * comb(theta - 1, inverse[i] - 1) for i in range(1, a1 + 1))
        if weight:
            terms[_block_word(gamma, images)] += scale * weight
    return LinComb(terms)


def lambda_beta(beta, x):
    """The Hopf endomorphism sending the block of size k to the block of size beta_k."""
    beta = tuple(beta)

    def image(label):
        return LinComb.of(Composition(beta[part - 1] if part <= len(beta) else part for part in label.parts))

    if isinstance(x, Composition):
        x = LinComb.of(x)
    return apply_linear(image, x)


def distinct_run_gammas(degree):
    """Every gamma of weight ``degree`` whose run values are pairwise distinct."""
    result = []
    for composition in compositions(degree):
        beta = [value for value, _ in itertools.groupby(composition.parts)]
        if len(set(beta)) == len(beta):
            result.append(composition.parts)
    return result


def p_gamma_family(degree):
    return [(gamma, p_gamma(*params_from_gamma(gamma))) for gamma in distinct_run_gammas(degree)]


def p_lambda_gamma_family(degree):
    return [(gamma, p_lambda_gamma(*params_from_gamma(gamma))) for gamma in distinct_run_gammas(degree)]


# Partition classes.


def partition_class(composition):
    return tuple(sorted(composition.parts))


def class_primitives(degree):
    """Kernel of the reduced coproduct restricted to each partition class."""
    classes = collections.OrderedDict()
    for composition in ISPW_ALGEBRA.basis(degree):
        classes.setdefault(partition_class(composition), []).append(composition)
    result = collections.OrderedDict()
    for partition, labels in classes.items():
        basis = kernel_of(labels, lambda label: reduced_coproduct(ISPW_ALGEBRA, label))
        if basis:
            result[partition] = basis
    logger.debug("ISPW degree %d: primitives in %d partition classes", degree, len(result))
    return result


def support_classes(x):
    return set(partition_class(label) for label, _ in x)
