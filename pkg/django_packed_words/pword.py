"""
Packed words: packing, shifted concatenation, extraction-contraction,
enumeration, irreducible factorization and shuffle permutations.

Positions in the public API are 1-based.
"""
import collections
import itertools
import logging

from .conf import get_setting
from .exceptions import DegreeCapExceeded, StructureError
from .scalars import BasisLabel

logger = logging.getLogger(__name__)

ALL = "all"
FIRST_FIXED = "first-fixed"
SECOND_FIXED = "second-fixed"
SHUFFLE_KINDS = (ALL, FIRST_FIXED, SECOND_FIXED)

WordStats = collections.namedtuple("WordStats", ["length", "sup", "frequencies", "ialph"])


def is_packed(letters):
    nonzero = set(letter for letter in letters if letter)
    return nonzero == set(range(1, len(nonzero) + 1))


class PackedWord(BasisLabel):
    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple(int(letter) for letter in letters)
        if any(letter < 0 for letter in letters):
            raise StructureError("letters are non-negative indices, got %r" % (letters,))
        if not is_packed(letters):
            raise StructureError("%r is not a packed word" % (letters,))
        self.letters = letters

    def _identity(self):
        return self.letters

    def sort_key(self):
        return (len(self.letters), self.letters)

    @property
    def degree(self):
        return len(self.letters)

    @property
    def sup(self):
        return max(self.letters) if self.letters else 0

    def has_zero(self):
        return 0 in self.letters

    def is_permutation(self):
        return not self.has_zero() and self.sup == len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, position):
        return self.letters[position]

    def __str__(self):
        return "[%s]" % ",".join(str(letter) for letter in self.letters)


EMPTY_WORD = PackedWord()


class Permutation(object):
    """A bijection of {1..n} stored by its images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise StructureError("%r is not a permutation" % (images,))
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    def __call__(self, i):
        return self.images[i - 1]

    def __len__(self):
        return len(self.images)

    def inverse(self):
        inverse = [0] * len(self.images)
        for i, image in enumerate(self.images, 1):
            inverse[image - 1] = i
        return Permutation(inverse)

    def compose(self, other):
        """self ∘ other"""
        return Permutation(self(other(i)) for i in range(1, len(other) + 1))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%s)" % (self.images,)


def pack(letters):
    letters = tuple(letters)
    ranks = dict((value, rank) for rank, value in enumerate(sorted(set(letters) - {0}), 1))
    return PackedWord(ranks.get(letter, 0) for letter in letters)


def shift(word, s):
    return tuple(letter + s if letter else 0 for letter in word)


def star(u, v):
    return PackedWord(u.letters + shift(v.letters, u.sup))


def _check_positions(word, positions):
    positions = tuple(sorted(set(positions)))
    if positions and (positions[0] < 1 or positions[-1] > len(word)):
        raise StructureError("positions %r out of range for %s" % (positions, word))
    return positions


def extract_contract(word, positions):
    """
    Split ``word`` along ``positions``: the extracted part is packed; in the
    remaining part every letter whose value was extracted becomes x0.
    """
    positions = _check_positions(word, positions)
    chosen = set(positions)
    extracted = [word.letters[i - 1] for i in positions]
    alphabet = set(extracted)
    rest = [
        0 if letter in alphabet else letter
        for i, letter in enumerate(word.letters, 1)
        if i not in chosen
    ]
    return pack(extracted), pack(rest)


def _surjective_words(length, k):
    word = [0] * length
    counts = [0] * (k + 1)

    def extend(index, missing):
        if length - index < missing:
            return
        if index == length:
            yield tuple(word)
            return
        for letter in range(1, k + 1):
            word[index] = letter
            counts[letter] += 1
            for result in extend(index + 1, missing - (1 if counts[letter] == 1 else 0)):
                yield result
            counts[letter] -= 1

    return extend(0, k)


_packed_cache = {}


def enumerate_packed(n):
    """All packed words of length ``n`` in canonical order."""
    cap = get_setting("ENUMERATION_CAP")
    if n > cap:
        raise DegreeCapExceeded(n, cap, "packed word enumeration")
    if n in _packed_cache:
        return _packed_cache[n]
    letters = set()
    for zeros in range(n + 1):
        for zero_positions in itertools.combinations(range(n), zeros):
            free = [i for i in range(n) if i not in zero_positions]
            for k in range(1 if free else 0, len(free) + 1):
                for values in _surjective_words(len(free), k):
                    word = [0] * n
                    for i, value in zip(free, values):
                        word[i] = value
                    letters.add(tuple(word))
    words = sorted(PackedWord(word) for word in letters)
    logger.debug("enumerated %d packed words of length %d", len(words), n)
    _packed_cache[n] = words
    return words


def splits_at(word, cut):
    """True when ``word`` is prefix * suffix at position ``cut``."""
    prefix = word.letters[:cut]
    if not is_packed(prefix):
        return False
    sup = max(prefix) if prefix else 0
    return all(letter == 0 or letter > sup for letter in word.letters[cut:])


def irreducible_factorize(word):
    factors = []
    letters = word.letters
    while letters:
        current = PackedWord(letters)
        for cut in range(1, len(letters) + 1):
            if cut == len(letters) or splits_at(current, cut):
                break
        prefix = letters[:cut]
        factors.append(PackedWord(prefix))
        sup = max(prefix)
        letters = tuple(letter - sup if letter else 0 for letter in letters[cut:])
    return factors


def is_irreducible(word):
    return len(word) > 0 and not any(splits_at(word, cut) for cut in range(1, len(word)))


def shuffles(n1, n2, kind=ALL):
    """(n1, n2)-shuffle permutations, optionally restricted by ρ⁻¹(1)."""
    if kind not in SHUFFLE_KINDS:
        raise StructureError("unknown shuffle kind %r" % (kind,))
    if kind == FIRST_FIXED and n1 < 1:
        raise StructureError("first-fixed shuffles need a nonempty first block")
    if kind == SECOND_FIXED and n2 < 1:
        raise StructureError("second-fixed shuffles need a nonempty second block")
    n = n1 + n2
    result = []
    for first in itertools.combinations(range(1, n + 1), n1):
        if kind == FIRST_FIXED and first[0] != 1:
            continue
        if kind == SECOND_FIXED and first and first[0] == 1:
            continue
        chosen = set(first)
        second = [i for i in range(1, n + 1) if i not in chosen]
        result.append(Permutation(list(first) + second))
    return result


def act(tau, letters, mu):
    """
    The word τ∘w∘μ⁻¹: letters are relabelled through τ (x0 fixed) and the
    letter at position i moves to position μ(i).
    """
    result = [0] * len(letters)
    for i, letter in enumerate(letters, 1):
        result[mu(i) - 1] = tau(letter) if letter else 0
    return PackedWord(result)


def word_stats(word):
    frequencies = collections.Counter(word.letters)
    return WordStats(
        length=len(word),
        sup=word.sup,
        frequencies=dict(frequencies),
        ialph=frozenset(letter for letter in frequencies if letter),
    )

