"""
Compositions and extended compositions as basis labels, with the
enumerations and tuple shuffles the composition-indexed algebras share.
"""
import itertools

from .conf import get_setting
from .exceptions import DegreeCapExceeded, StructureError
from .scalars import BasisLabel


class Composition(BasisLabel):
    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(part) for part in parts)
        if any(part < 1 for part in parts):
            raise StructureError("composition parts must be positive, got %r" % (parts,))
        self.parts = parts

    def _identity(self):
        return self.parts

    def sort_key(self):
        return (sum(self.parts), len(self.parts), self.parts)

    @property
    def degree(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __add__(self, other):
        return Composition(self.parts + other.parts)

    def __str__(self):
        return "(%s)" % ",".join(str(part) for part in self.parts)


EMPTY_COMPOSITION = Composition()


class ExtComposition(BasisLabel):
    """(alpha0; alpha1..alphak): alpha0 counts x0, the parts count x1..xk."""

    __slots__ = ("alpha0", "parts")

    def __init__(self, alpha0=0, parts=()):
        alpha0 = int(alpha0)
        parts = tuple(int(part) for part in parts)
        if alpha0 < 0:
            raise StructureError("alpha0 must be non-negative, got %d" % alpha0)
        if any(part < 1 for part in parts):
            raise StructureError("extended composition parts must be positive, got %r" % (parts,))
        self.alpha0 = alpha0
        self.parts = parts

    def _identity(self):
        return (self.alpha0, self.parts)

    def sort_key(self):
        return (self.degree, len(self.parts), self.alpha0, self.parts)

    @property
    def degree(self):
        return self.alpha0 + sum(self.parts)

    def __str__(self):
        return "(%d;%s)" % (self.alpha0, ",".join(str(part) for part in self.parts))


EXT_UNIT = ExtComposition()


def _check_cap(n, what):
    cap = get_setting("COMPOSITION_DEGREE_CAP")
    if n > cap:
        raise DegreeCapExceeded(n, cap, what)


_composition_cache = {}


def compositions(n):
    """Compositions of ``n`` in canonical order."""
    _check_cap(n, "composition enumeration")
    if n not in _composition_cache:
        result = []
        for k in range(0 if n == 0 else 1, n + 1):
            result.extend(compositions_with_parts(n, k))
        _composition_cache[n] = sorted(result)
    return _composition_cache[n]


def compositions_with_parts(n, k):
    if k == 0:
        return [EMPTY_COMPOSITION] if n == 0 else []
    result = []
    for cuts in itertools.combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        result.append(Composition(bounds[i + 1] - bounds[i] for i in range(k)))
    return result


def ext_compositions(n):
    result = []
    for alpha0 in range(n + 1):
        result.extend(ExtComposition(alpha0, c.parts) for c in compositions(n - alpha0))
    return sorted(result)


def weak_compositions(n, k):
    """Tuples of ``k`` non-negative integers summing to ``n``."""
    if k == 0:
        return [()] if n == 0 else []
    result = []
    for cuts in itertools.combinations_with_replacement(range(n + 1), k - 1):
        bounds = (0,) + cuts + (n,)
        result.append(tuple(bounds[i + 1] - bounds[i] for i in range(k)))
    return result


def shuffle_tuples(a, b):
    """Every interleaving of ``a`` and ``b``, repeated interleavings kept."""
    n = len(a) + len(b)
    result = []
    for positions in itertools.combinations(range(n), len(a)):
        chosen = set(positions)
        left, right = iter(a), iter(b)
        result.append(tuple(next(left) if i in chosen else next(right) for i in range(n)))
    return result


def coarsenings(parts):
    """
    Pairs (block sizes, merged composition) for every way of grouping
    consecutive parts.
    """
    result = []
    for sizes in compositions_with_parts_all(len(parts)):
        merged, start = [], 0
        for size in sizes:
            merged.append(sum(parts[start:start + size]))
            start += size
        result.append((sizes, tuple(merged)))
    return result


def compositions_with_parts_all(n):
    if n == 0:
        return [()]
    return [c.parts for k in range(1, n + 1) for c in compositions_with_parts(n, k)]


def multinomial(parts):
    total, result = 0, 1
    for part in parts:
        for i in range(1, part + 1):
            total += 1
            result = result * total // i
    return result


def fubini(n):
    """Ordered Bell number: the number of ordered set partitions of n points."""
    if n == 0:
        return 1
    return sum(multinomial(c.parts) for k in range(1, n + 1) for c in compositions_with_parts(n, k))
