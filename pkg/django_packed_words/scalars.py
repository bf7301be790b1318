"""
Exact rational linear combinations over totally ordered basis labels,
tensor terms, exact null spaces and truncated power series.
"""
import functools
from fractions import Fraction

from .exceptions import ContractViolation, StructureError


def to_rational(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise StructureError("floating point coefficient %r is not exact" % value)
    return Fraction(value)


@functools.total_ordering
class BasisLabel(object):
    """
    Immutable basis element. Subclasses provide ``_identity`` (hashable raw
    data) and ``sort_key`` (canonical order within one family).
    """

    __slots__ = ()

    def _identity(self):
        raise NotImplementedError

    def sort_key(self):
        raise NotImplementedError

    @property
    def degree(self):
        raise NotImplementedError

    @property
    def arity(self):
        return 1

    def __eq__(self, other):
        return type(self) is type(other) and self._identity() == other._identity()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__, self._identity()))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, str(self))


class TensorTerm(BasisLabel):
    __slots__ = ("factors",)

    def __init__(self, factors):
        factors = tuple(factors)
        if len(factors) < 2:
            raise StructureError("a tensor term needs at least two factors")
        for factor in factors:
            if isinstance(factor, TensorTerm):
                raise StructureError("tensor factors must be plain basis labels")
        self.factors = factors

    def _identity(self):
        return self.factors

    def sort_key(self):
        return tuple(factor.sort_key() for factor in self.factors)

    @property
    def degree(self):
        return sum(factor.degree for factor in self.factors)

    @property
    def arity(self):
        return len(self.factors)

    def __getitem__(self, index):
        return self.factors[index]

    def __iter__(self):
        return iter(self.factors)

    def __str__(self):
        return " ⊗ ".join(str(factor) for factor in self.factors)


def tensor(*labels):
    factors = []
    for label in labels:
        if isinstance(label, TensorTerm):
            factors.extend(label.factors)
        else:
            factors.append(label)
    return TensorTerm(factors)


def _factors(label):
    if isinstance(label, TensorTerm):
        return label.factors
    return (label,)


class LinComb(object):
    """
    Finitely supported map from basis labels to rationals. Zero
    coefficients are never stored and iteration follows the canonical
    label order.
    """

    __slots__ = ("_terms", "_sorted", "_arity")

    def __init__(self, terms=None):
        cleaned = {}
        arity = None
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for label, coefficient in items:
                if not isinstance(label, BasisLabel):
                    raise StructureError("%r is not a basis label" % (label,))
                if arity is None:
                    arity = label.arity
                elif label.arity != arity:
                    raise StructureError(
                        "cannot mix tensor arities %d and %d in one combination" % (arity, label.arity)
                    )
                coefficient = to_rational(coefficient) + cleaned.get(label, 0)
                if coefficient:
                    cleaned[label] = coefficient
                else:
                    cleaned.pop(label, None)
        self._terms = cleaned
        self._sorted = None
        self._arity = arity if cleaned else None

    @classmethod
    def of(cls, label, coefficient=1):
        return cls({label: coefficient})

    @property
    def arity(self):
        return self._arity

    def items(self):
        if self._sorted is None:
            self._sorted = tuple(sorted(self._terms.items(), key=lambda item: item[0].sort_key()))
        return self._sorted

    def labels(self):
        return [label for label, _ in self.items()]

    def coefficient(self, label):
        return self._terms.get(label, Fraction(0))

    def is_zero(self):
        return not self._terms

    def degrees(self):
        return set(label.degree for label in self._terms)

    def homogeneous_component(self, degree):
        return LinComb((label, c) for label, c in self._terms.items() if label.degree == degree)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.items())

    def __contains__(self, label):
        return label in self._terms

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __add__(self, other):
        return lc_add(self, other)

    def __sub__(self, other):
        return lc_add(self, lc_scale(-1, other))

    def __neg__(self):
        return lc_scale(-1, self)

    def __mul__(self, scalar):
        if isinstance(scalar, LinComb):
            return NotImplemented
        return lc_scale(scalar, self)

    __rmul__ = __mul__

    def __repr__(self):
        if not self._terms:
            return "LinComb(0)"
        return "LinComb(%s)" % " + ".join("%s*%s" % (c, label) for label, c in self.items())


ZERO = LinComb()


def lc_add(a, b):
    if a.arity is not None and b.arity is not None and a.arity != b.arity:
        raise StructureError("cannot add combinations of tensor arities %d and %d" % (a.arity, b.arity))
    terms = dict(a._terms)
    for label, coefficient in b._terms.items():
        terms[label] = terms.get(label, 0) + coefficient
    return LinComb(terms)


def lc_sum(combinations):
    terms = {}
    arity = None
    for combination in combinations:
        if combination.arity is not None:
            if arity is not None and combination.arity != arity:
                raise StructureError("cannot add combinations of different tensor arities")
            arity = combination.arity
        for label, coefficient in combination._terms.items():
            terms[label] = terms.get(label, 0) + coefficient
    return LinComb(terms)


def lc_scale(c, a):
    c = to_rational(c)
    if not c:
        return ZERO
    return LinComb((label, c * coefficient) for label, coefficient in a._terms.items())


def lc_tensor(a, b):
    terms = {}
    for left, x in a._terms.items():
        for right, y in b._terms.items():
            label = tensor(left, right)
            terms[label] = terms.get(label, 0) + x * y
    return LinComb(terms)


def apply_linear(f, a):
    """Linear extension of the basis map ``f`` evaluated on ``a``."""
    terms = {}
    for label, coefficient in a._terms.items():
        try:
            image = f(label)
        except KeyError:
            image = None
        if image is None:
            raise StructureError("map undefined on %s" % (label,))
        for target, c in image._terms.items():
            terms[target] = terms.get(target, 0) + coefficient * c
    return LinComb(terms)


def apply_tensor_maps(maps, a):
    """Apply ``maps[i]`` to the i-th factor of every tensor term of ``a``."""
    terms = {}
    for label, coefficient in a._terms.items():
        factors = _factors(label)
        if len(factors) != len(maps):
            raise StructureError("expected %d tensor factors, got %d" % (len(maps), len(factors)))
        partial = [((), coefficient)]
        for f, factor in zip(maps, factors):
            image = f(factor)
            partial = [
                (prefix + _factors(target), c * d)
                for prefix, c in partial
                for target, d in image._terms.items()
            ]
        for factors_out, c in partial:
            target = factors_out[0] if len(factors_out) == 1 else TensorTerm(factors_out)
            terms[target] = terms.get(target, 0) + c
    return LinComb(terms)


def identity_map(label):
    return LinComb.of(label)


# Exact Gaussian elimination. Rows are sparse dicts {column: Fraction}.


def _reduced_echelon(rows):
    pivots = {}
    for row in rows:
        row = dict((col, to_rational(v)) for col, v in row.items() if v)
        for col in [c for c in row if c in pivots]:
            factor = row.get(col)
            if not factor:
                continue
            for c, v in pivots[col].items():
                value = row.get(c, 0) - factor * v
                if value:
                    row[c] = value
                else:
                    row.pop(c, None)
        if not row:
            continue
        lead = min(row)
        scale = row[lead]
        row = dict((c, v / scale) for c, v in row.items())
        for other in pivots.values():
            factor = other.get(lead)
            if factor:
                for c, v in row.items():
                    value = other.get(c, 0) - factor * v
                    if value:
                        other[c] = value
                    else:
                        other.pop(c, None)
        pivots[lead] = row
    return pivots


def sparse_kernel_basis(rows, ncols):
    """
    Canonical basis of the right null space of a sparse matrix: reduced row
    echelon form with pivots chosen left to right, one vector per free
    column in increasing order with that free variable set to 1.
    """
    pivots = _reduced_echelon(rows)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for col, row in pivots.items():
            value = row.get(free)
            if value:
                vector[col] = -value
        basis.append(vector)
    return basis


def _dense_to_sparse(matrix):
    return [dict((j, v) for j, v in enumerate(row) if v) for row in matrix]


def kernel_basis(matrix, ncols=None):
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    return sparse_kernel_basis(_dense_to_sparse(matrix), ncols)


def matrix_rank(matrix):
    return len(_reduced_echelon(_dense_to_sparse(matrix)))


def sparse_rank(rows):
    return len(_reduced_echelon(rows))


class TruncatedSeries(object):
    """
    One-variable power series with rational coefficients, truncated after
    ``order``. ``coefficients[i]`` is the coefficient of X**i.
    """

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients, order):
        coefficients = [to_rational(c) for c in coefficients][: order + 1]
        coefficients.extend([Fraction(0)] * (order + 1 - len(coefficients)))
        self.coefficients = tuple(coefficients)
        self.order = order

    @classmethod
    def monomial(cls, power, order, coefficient=1):
        coefficients = [0] * (order + 1)
        if power <= order:
            coefficients[power] = coefficient
        return cls(coefficients, order)

    @classmethod
    def exponential(cls, scale, order):
        scale = to_rational(scale)
        coefficients = [Fraction(1)]
        for n in range(1, order + 1):
            coefficients.append(coefficients[-1] * scale / n)
        return cls(coefficients, order)

    def __getitem__(self, power):
        return self.coefficients[power] if power <= self.order else Fraction(0)

    def _check(self, other):
        if self.order != other.order:
            raise ContractViolation("series truncated at orders %d and %d" % (self.order, other.order))

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coefficients, other.coefficients)], self.order)

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coefficients, other.coefficients)], self.order)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([to_rational(other) * c for c in self.coefficients], self.order)
        self._check(other)
        product = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                product[i + j] += a * other.coefficients[j]
        return TruncatedSeries(product, self.order)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coefficients[0]:
            raise ContractViolation("a series without constant term has no inverse")
        inverse = [1 / self.coefficients[0]]
        for n in range(1, self.order + 1):
            total = sum(self.coefficients[k] * inverse[n - k] for k in range(1, n + 1))
            inverse.append(-total / self.coefficients[0])
        return TruncatedSeries(inverse, self.order)

    def has_constant_term(self):
        return bool(self.coefficients[0])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return "TruncatedSeries(%r, order=%d)" % ([str(c) for c in self.coefficients], self.order)
