"""
The Hopf algebra WMat on packed words: shifted concatenation, the
extraction-contraction coproduct, the ordered-set-partition antipode and
the closed antipode families.
"""
import itertools
import logging
from math import comb

from .compositions import compositions_with_parts, fubini, multinomial
from .exceptions import StructureError
from .hopfcore import (
    GradedHopfAlgebra,
    antipode_generic,
    multiply,
    primitive_basis,
)
from .pword import (
    EMPTY_WORD,
    PackedWord,
    _surjective_words,
    enumerate_packed,
    extract_contract,
    pack,
    star,
)
from .scalars import LinComb, TensorTerm, TruncatedSeries

logger = logging.getLogger(__name__)

ZEROS = "zeros"
ONES = "ones"
BLOCK_INCREASING = "block-increasing"
IDENTITY_PERM = "identity-perm"
DECREASING = "decreasing"
MIXED_F = "mixed-f"
MIXED_G = "mixed-g"
FAMILIES = (ZEROS, ONES, BLOCK_INCREASING, IDENTITY_PERM, DECREASING, MIXED_F, MIXED_G)


class WMat(GradedHopfAlgebra):
    name = "WMat"
    unit = EMPTY_WORD

    def _basis(self, n):
        return enumerate_packed(n)

    def product(self, a, b):
        return LinComb.of(star(a, b))

    def coproduct(self, label):
        return wmat_coproduct(label)


WMAT = WMat()


def _as_lincomb(x):
    return LinComb.of(x) if isinstance(x, PackedWord) else x


def wmat_product(a, b):
    return multiply(WMAT, _as_lincomb(a), _as_lincomb(b))


def wmat_coproduct(word):
    terms = {}
    positions = range(1, len(word) + 1)
    for size in range(len(word) + 1):
        for chosen in itertools.combinations(positions, size):
            label = TensorTerm(extract_contract(word, chosen))
            terms[label] = terms.get(label, 0) + 1
    return LinComb(terms)


def antipode_closed_sum(word):
    """Signed sum over ordered set partitions of the positions of ``word``."""
    if not len(word):
        raise StructureError("the closed antipode sum is taken on nonempty words")
    letters = word.letters
    terms = {}
    for k in range(1, len(letters) + 1):
        sign = -1 if k % 2 else 1
        for blocks in _surjective_words(len(letters), k):
            seen = set()
            result = EMPTY_WORD
            for block in range(1, k + 1):
                values = [letters[p] for p, b in enumerate(blocks) if b == block]
                result = star(result, pack(0 if value in seen else value for value in values))
                seen.update(values)
            terms[result] = terms.get(result, 0) + sign
    return LinComb(terms)


def decreasing_word(m):
    return PackedWord(range(m, 0, -1))


def increasing_word(m):
    return PackedWord(range(1, m + 1))


def decreasing_runs(alpha):
    """Concatenation of decreasing blocks of sizes alpha, shifted upwards."""
    result = EMPTY_WORD
    for part in alpha:
        result = star(result, decreasing_word(part))
    return result


def _require(condition, message):
    if not condition:
        raise StructureError(message)


def _check_params(family, n, alpha, i):
    _require(family in FAMILIES, "unknown antipode family %r" % (family,))
    if family == BLOCK_INCREASING:
        _require(alpha and all(int(a) >= 1 for a in alpha), "block-increasing needs a tuple of positive integers")
        return
    _require(n is not None and n >= 1, "family %s needs n >= 1" % family)
    if family in (MIXED_F, MIXED_G):
        _require(i is not None and 1 <= i <= n, "family %s needs 1 <= i <= n" % family)


def antipode_family_word(family, n=None, alpha=None, i=None):
    _check_params(family, n, alpha, i)
    if family == ZEROS:
        return PackedWord([0] * n)
    if family == ONES:
        return PackedWord([1] * n)
    if family == BLOCK_INCREASING:
        alpha = tuple(alpha)
        size = len(alpha)
        return PackedWord(j for j in range(1, size + 1) for _ in range(alpha[size - j]))
    if family == IDENTITY_PERM:
        return increasing_word(n)
    if family == DECREASING:
        return decreasing_word(n)
    if family == MIXED_F:
        return star(decreasing_word(i), increasing_word(n - i))
    return star(increasing_word(n - i), decreasing_word(i))


def _decreasing_antipode(m):
    """(word, coefficient) pairs of S(x_m...x_1)."""
    result = []
    for k in range(1, m + 1):
        for alpha in compositions_with_parts(m, k):
            result.append((decreasing_runs(alpha.parts), (-1) ** k * multinomial(alpha.parts)))
    return result


def antipode_family(family, n=None, alpha=None, i=None, check=False):
    """
    Closed form of the antipode on the input word of ``family``. With
    ``check`` the value is compared with the generic antipode, which wins on
    disagreement.
    """
    word = antipode_family_word(family, n=n, alpha=alpha, i=i)
    if family in (ZEROS, IDENTITY_PERM):
        result = LinComb.of(word, (-1) ** n)
    elif family == ONES:
        result = LinComb(
            (PackedWord([1] * k + [0] * (n - k)), (-1) ** (n + 1 + k) * comb(n, k))
            for k in range(1, n + 1)
        )
    elif family == BLOCK_INCREASING:
        result = _block_increasing_antipode(tuple(int(a) for a in alpha))
    elif family == DECREASING:
        result = LinComb(_decreasing_antipode(n))
    elif family == MIXED_F:
        prefix = increasing_word(n - i)
        result = LinComb((star(prefix, w), (-1) ** (n - i) * c) for w, c in _decreasing_antipode(i))
    else:
        suffix = increasing_word(n - i)
        result = LinComb((star(w, suffix), (-1) ** (n - i) * c) for w, c in _decreasing_antipode(i))
    if check:
        generic = antipode_generic(WMAT, word)
        if generic != result:
            logger.warning("closed antipode family %s disagrees with the generic antipode on %s", family, word)
            return generic
    return result


def _block_increasing_antipode(alpha):
    size = len(alpha)
    total = sum(alpha)
    terms = []
    for ks in itertools.product(*[range(1, a + 1) for a in alpha]):
        letters = []
        coefficient = (-1) ** (size + total + sum(ks))
        for j, (a, k) in enumerate(zip(alpha, ks), 1):
            letters.extend([j] * k + [0] * (a - k))
            coefficient *= comb(a, k)
        terms.append((PackedWord(letters), coefficient))
    return LinComb(terms)


def wmat_series(order):
    """Hilbert series 1 + sum 2 Fubini(n) h^n of WMat."""
    return TruncatedSeries([1] + [2 * fubini(n) for n in range(1, order + 1)], order)


def cofreeness_witness(degree=3, order=8):
    """
    (dim Prim_degree, coefficient of h^degree in 1 - 1/F): equal for a
    cofree graded connected Hopf algebra.
    """
    series = wmat_series(order)
    one = TruncatedSeries.monomial(0, order)
    predicted = (one - series.inverse())[degree]
    return len(primitive_basis(WMAT, degree)), predicted

