"""
Generic machinery for graded connected Hopf algebras with enumerable
bases: products and coproducts of combinations, generic antipode,
convolution, transposition oracles for the graded dual, primitive spaces
and an exhaustive axiom checker.
"""
import collections
import logging
from fractions import Fraction

from .conf import get_setting
from .exceptions import ContractViolation, DegreeCapExceeded
from .scalars import (
    BasisLabel,
    LinComb,
    TensorTerm,
    ZERO,
    apply_linear,
    apply_tensor_maps,
    identity_map,
    lc_sum,
    lc_tensor,
    sparse_kernel_basis,
    sparse_rank,
)

logger = logging.getLogger(__name__)


class DualElement(BasisLabel):
    """Z_b, the dual basis element of the primal basis element b."""

    __slots__ = ("primal",)

    def __init__(self, primal):
        self.primal = primal

    def _identity(self):
        return self.primal

    def sort_key(self):
        return self.primal.sort_key()

    @property
    def degree(self):
        return self.primal.degree

    def __str__(self):
        dual_str = getattr(self.primal, "dual_str", None)
        if dual_str is not None:
            return dual_str()
        return "Z%s" % self.primal


class GradedHopfAlgebra(object):
    """
    A graded connected Hopf algebra given on a basis. Subclasses implement
    ``_basis``, ``product`` and ``coproduct`` on labels and set ``unit``.
    """

    name = None
    unit = None
    cap_setting = "WORD_DEGREE_CAP"

    def __init__(self):
        self._coproduct_cache = {}
        self._antipode_cache = {}
        self._dual_product_tables = {}
        self._dual_coproduct_tables = {}

    @property
    def max_degree(self):
        return get_setting(self.cap_setting)

    def basis(self, n):
        if n > self.max_degree:
            raise DegreeCapExceeded(n, self.max_degree, "%s basis" % self.name)
        return self._basis(n)

    def _basis(self, n):
        raise NotImplementedError

    def degree(self, label):
        return label.degree

    def product(self, a, b):
        raise NotImplementedError

    def coproduct(self, label):
        raise NotImplementedError

    def counit(self, label):
        return Fraction(1) if label == self.unit else Fraction(0)

    def cached_coproduct(self, label):
        if label not in self._coproduct_cache:
            self._coproduct_cache[label] = self.coproduct(label)
        return self._coproduct_cache[label]

    def __str__(self):
        return self.name or type(self).__name__


def multiply(H, x, y):
    terms = collections.defaultdict(Fraction)
    for a, c in x:
        for b, d in y:
            for label, e in H.product(a, b):
                terms[label] += c * d * e
    return LinComb(terms)


def comultiply(H, x):
    return apply_linear(H.cached_coproduct, x)


def counit_of(H, x):
    return sum((c * H.counit(label) for label, c in x), Fraction(0))


def tensor_multiply(H, x, y):
    """Factorwise product of two combinations of tensors of equal arity."""
    terms = collections.defaultdict(Fraction)
    for s, c in x:
        for t, d in y:
            partial = [((), c * d)]
            for a, b in zip(s, t):
                partial = [
                    (prefix + (label,), e * f)
                    for prefix, e in partial
                    for label, f in H.product(a, b)
                ]
            for factors, e in partial:
                terms[TensorTerm(factors)] += e
    return LinComb(terms)


def swap(x):
    return LinComb((TensorTerm(reversed(label.factors)), c) for label, c in x)


def reduced_coproduct(H, x):
    if isinstance(x, BasisLabel):
        x = LinComb.of(x)
    if any(label.degree == 0 for label, _ in x):
        raise ContractViolation("the reduced coproduct is defined on positive degrees only")
    result = comultiply(H, x)
    unit = LinComb.of(H.unit)
    return result - lc_tensor(x, unit) - lc_tensor(unit, x)


def iterated_coproduct(H, x, k):
    """Δ^(k); k = 0 is the identity, the result has k + 1 tensor factors."""
    if isinstance(x, BasisLabel):
        x = LinComb.of(x)
    if k == 0:
        return x
    result = comultiply(H, x)
    for _ in range(k - 1):
        maps = [H.cached_coproduct] + [identity_map] * (result.arity - 1)
        result = apply_tensor_maps(maps, result)
    return result


def _antipode_label(H, label):
    cache = H._antipode_cache
    if label in cache:
        return cache[label]
    if label.degree == 0:
        result = LinComb.of(label)
    else:
        parts = [LinComb.of(label, -1)]
        for term, c in reduced_coproduct(H, LinComb.of(label)):
            left, right = term.factors
            parts.append(-c * multiply(H, _antipode_label(H, left), LinComb.of(right)))
        result = lc_sum(parts)
    cache[label] = result
    return result


def antipode_generic(H, x):
    if isinstance(x, BasisLabel):
        x = LinComb.of(x)
    return apply_linear(lambda label: _antipode_label(H, label), x)


def convolution(H, f, g, x):
    """m ∘ (f ⊗ g) ∘ Δ applied to ``x``."""
    if isinstance(x, BasisLabel):
        x = LinComb.of(x)
    images = apply_tensor_maps([f, g], comultiply(H, x))
    terms = collections.defaultdict(Fraction)
    for label, c in images:
        left, right = label.factors
        for product, d in H.product(left, right):
            terms[product] += c * d
    return LinComb(terms)


def unit_counit_map(H):
    return lambda label: LinComb.of(H.unit, H.counit(label)) if H.counit(label) else ZERO


# Graded dual by transposition.


def _dual_product_table(H, n):
    table = H._dual_product_tables.get(n)
    if table is None:
        table = collections.defaultdict(lambda: collections.defaultdict(Fraction))
        for c in H.basis(n):
            for term, coefficient in H.cached_coproduct(c):
                left, right = term.factors
                table[(left, right)][DualElement(c)] += coefficient
        logger.debug("materialized dual product table of %s in degree %d", H, n)
        H._dual_product_tables[n] = table
    return table


def dual_product_oracle(H, za, zb):
    n = za.degree + zb.degree
    table = _dual_product_table(H, n)
    return LinComb(table.get((za.primal, zb.primal), {}))


def _dual_coproduct_table(H, n):
    table = H._dual_coproduct_tables.get(n)
    if table is None:
        table = collections.defaultdict(lambda: collections.defaultdict(Fraction))
        for i in range(n + 1):
            for a in H.basis(i):
                for b in H.basis(n - i):
                    for c, coefficient in H.product(a, b):
                        table[c][TensorTerm((DualElement(a), DualElement(b)))] += coefficient
        logger.debug("materialized dual coproduct table of %s in degree %d", H, n)
        H._dual_coproduct_tables[n] = table
    return table


def dual_coproduct_oracle(H, zc):
    table = _dual_coproduct_table(H, zc.degree)
    return LinComb(table.get(zc.primal, {}))


class DualAlgebra(GradedHopfAlgebra):
    """The graded dual of ``primal``, built from the transposition oracles."""

    def __init__(self, primal):
        super(DualAlgebra, self).__init__()
        self.primal = primal
        self.name = "%s*" % primal
        self.unit = DualElement(primal.unit)

    @property
    def max_degree(self):
        return self.primal.max_degree

    def _basis(self, n):
        return [DualElement(label) for label in self.primal.basis(n)]

    def product(self, a, b):
        return dual_product_oracle(self.primal, a, b)

    def coproduct(self, label):
        return dual_coproduct_oracle(self.primal, label)


def pairing(x, y):
    """⟨x, y⟩ for x over dual labels and y over the matching primal labels."""
    return sum((c * y.coefficient(label.primal) for label, c in x), Fraction(0))


# Kernels and ranks.


def kernel_of(labels, image):
    """Canonical basis of the kernel of a linear map given on ``labels``."""
    labels = list(labels)
    rows = collections.defaultdict(dict)
    for column, label in enumerate(labels):
        for target, c in image(label):
            rows[target][column] = c
    vectors = sparse_kernel_basis(list(rows.values()), len(labels))
    return [LinComb((labels[i], v) for i, v in enumerate(vector) if v) for vector in vectors]


def primitive_basis(H, n):
    if n < 1:
        raise ContractViolation("primitive spaces are taken in positive degree")
    labels = H.basis(n)
    basis = kernel_of(labels, lambda label: reduced_coproduct(H, label))
    logger.debug("%s: dim Prim_%d = %d (of %d)", H, n, len(basis), len(labels))
    return basis


def span_rank(vectors):
    index = {}
    rows = []
    for vector in vectors:
        row = {}
        for label, c in vector:
            row[index.setdefault(label, len(index))] = c
        rows.append(row)
    return sparse_rank(rows)


class Character(object):
    """A multiplicative linear functional given by its values on basis labels."""

    def __init__(self, evaluate, name="character"):
        self._evaluate = evaluate
        self.name = name

    def evaluate(self, label):
        return Fraction(self._evaluate(label))

    def __call__(self, x):
        if isinstance(x, BasisLabel):
            return self.evaluate(x)
        return sum((c * self.evaluate(label) for label, c in x), Fraction(0))

    def __repr__(self):
        return "Character(%s)" % self.name


def evaluate_tensor(characters, x):
    total = Fraction(0)
    for label, c in x:
        value = c
        for character, factor in zip(characters, label.factors):
            value *= character.evaluate(factor)
            if not value:
                break
        total += value
    return total


# Axiom verification.


CheckResult = collections.namedtuple(
    "CheckResult", ["axiom", "subject", "degree", "passed", "checked", "counterexample"]
)


class VerificationReport(object):
    def __init__(self, results=None):
        self.results = list(results or [])

    def add(self, result):
        self.results.append(result)

    def extend(self, other):
        self.results.extend(other.results)

    @property
    def passed(self):
        return all(result.passed for result in self.results)

    def failures(self):
        return [result for result in self.results if not result.passed]

    def lines(self):
        lines = []
        for result in self.results:
            line = "%s %s %s degree %d (%d checked)" % (
                "PASS" if result.passed else "FAIL",
                result.subject,
                result.axiom,
                result.degree,
                result.checked,
            )
            if not result.passed:
                line += ": %s" % result.counterexample
            lines.append(line)
        return lines

    def __iter__(self):
        return iter(self.results)

    def __len__(self):
        return len(self.results)


def run_check(report, subject, axiom, degree, cases, predicate):
    """Evaluate ``predicate`` on every case and record the first failure."""
    checked = 0
    for case in cases:
        checked += 1
        failure = predicate(case)
        if failure:
            report.add(CheckResult(axiom, subject, degree, False, checked, failure))
            return False
    report.add(CheckResult(axiom, subject, degree, True, checked, None))
    return True


def graded_pairs(H, degree):
    for i in range(1, degree):
        for a in H.basis(i):
            for b in H.basis(degree - i):
                yield a, b


def graded_triples(H, degree):
    for i in range(1, degree - 1):
        for j in range(1, degree - i):
            for a in H.basis(i):
                for b in H.basis(j):
                    for c in H.basis(degree - i - j):
                        yield a, b, c


def _describe(case):
    if isinstance(case, tuple):
        return ", ".join(str(item) for item in case)
    return str(case)


def verify_hopf_axioms(H, max_degree):
    report = VerificationReport()
    subject = str(H)
    unit = LinComb.of(H.unit)
    epsilon = unit_counit_map(H)

    def coassociative(label):
        delta = comultiply(H, LinComb.of(label))
        left = apply_tensor_maps([H.cached_coproduct, identity_map], delta)
        right = apply_tensor_maps([identity_map, H.cached_coproduct], delta)
        if left != right:
            return "(Δ⊗id)Δ ≠ (id⊗Δ)Δ on %s" % label

    def counital(label):
        delta = comultiply(H, LinComb.of(label))
        left = LinComb(
            (term.factors[1], c * H.counit(term.factors[0])) for term, c in delta
        )
        right = LinComb(
            (term.factors[0], c * H.counit(term.factors[1])) for term, c in delta
        )
        if left != LinComb.of(label) or right != LinComb.of(label):
            return "counit law fails on %s" % label

    def unital(label):
        x = LinComb.of(label)
        if multiply(H, unit, x) != x or multiply(H, x, unit) != x:
            return "unit law fails on %s" % label

    def associative(case):
        a, b, c = [LinComb.of(label) for label in case]
        if multiply(H, multiply(H, a, b), c) != multiply(H, a, multiply(H, b, c)):
            return "(ab)c ≠ a(bc) for %s" % _describe(case)

    def multiplicative(case):
        a, b = case
        left = comultiply(H, H.product(a, b))
        right = tensor_multiply(H, comultiply(H, LinComb.of(a)), comultiply(H, LinComb.of(b)))
        if left != right:
            return "Δ(ab) ≠ Δ(a)Δ(b) for %s" % _describe(case)

    def counit_multiplicative(case):
        a, b = case
        if counit_of(H, H.product(a, b)) != H.counit(a) * H.counit(b):
            return "ε(ab) ≠ ε(a)ε(b) for %s" % _describe(case)

    def antipode(label):
        expected = epsilon(label)
        left = convolution(H, lambda x: _antipode_label(H, x), identity_map, label)
        right = convolution(H, identity_map, lambda x: _antipode_label(H, x), label)
        if left != expected or right != expected:
            return "S ⋆ id ≠ uε or id ⋆ S ≠ uε on %s" % label

    for degree in range(0, max_degree + 1):
        basis = H.basis(degree)
        run_check(report, subject, "coassociativity", degree, basis, coassociative)
        run_check(report, subject, "counit", degree, basis, counital)
        run_check(report, subject, "unit", degree, basis, unital)
        if degree >= 2:
            run_check(report, subject, "multiplicativity", degree, graded_pairs(H, degree), multiplicative)
            run_check(
                report, subject, "counit-multiplicativity", degree, graded_pairs(H, degree), counit_multiplicative
            )
        if degree >= 3:
            run_check(report, subject, "associativity", degree, graded_triples(H, degree), associative)
        run_check(report, subject, "antipode", degree, basis, antipode)
    return report


def is_primitive(H, x):
    return reduced_coproduct(H, x).is_zero()