"""
Verification suites run by ``manage.py verify``. Every suite takes the
largest degree to sweep and a seed for its sampled checks, and returns a
VerificationReport. Suites clamp the degree where an exhaustive sweep
would stop being interactive.
"""
import collections
import logging
import random
from fractions import Fraction

from .compext import (
    C_ALGEBRA,
    CE,
    CE_DUAL,
    H_ALGEBRA,
    SEMI_DIRECT,
    class_kernel,
    ce_coproduct,
    ce_product,
    gamma_2_ones,
    has_gap,
    ispw_image_is_primitive,
    omega_action,
    omega_action_direct,
    pi_image,
    pi_project,
    rho_coaction,
    upsilon,
    upsilon_image,
    zero_frequency_violation,
)
from .compositions import ExtComposition, compositions
from .conf import get_setting
from .hopfcore import (
    DualElement,
    VerificationReport,
    antipode_generic,
    comultiply,
    dual_coproduct_oracle,
    dual_product_oracle,
    graded_pairs,
    is_primitive,
    multiply,
    primitive_basis,
    run_check,
    span_rank,
    verify_hopf_axioms,
    _describe,
)
from .ispw import (
    ISPW_ALGEBRA,
    ISPW_DUAL,
    class_primitives,
    p_gamma_family,
    p_lambda_gamma_family,
)
from .perms import SH_ALGEBRA, SH_DUAL, dendriform_axiom_report, quadri_axiom_report, zinbiel_report
from .pword import enumerate_packed, star
from .qsymnsym import (
    NSYM,
    QSYM,
    Monomial,
    abs_morphism,
    psi_closed,
    psi_image,
    psi_rank,
    psi_star_closed,
    zeta_ispw_dual,
    zeta_qsym,
)
from .scalars import LinComb, TensorTerm, TruncatedSeries, apply_tensor_maps, identity_map
from .wmat import (
    BLOCK_INCREASING,
    DECREASING,
    FAMILIES,
    IDENTITY_PERM,
    MIXED_F,
    MIXED_G,
    ONES,
    WMAT,
    ZEROS,
    antipode_closed_sum,
    antipode_family,
    antipode_family_word,
)
from .wmatdual import WMAT_DUAL

logger = logging.getLogger(__name__)

ALL = "all"
ISPW_PRIMITIVE_DIMENSIONS = (1, 1, 2, 3, 6, 9, 18, 30)
CE_PRIMITIVE_DIMENSIONS = (2, 0, 1, 1, 3, 3, 9)


def _compare(report, subject, axiom, degree, cases, left, right):
    def predicate(case):
        if left(case) != right(case):
            return _describe(case)

    return run_check(report, subject, axiom, degree, list(cases), predicate)


def _expect(report, subject, axiom, degree, observed, expected):
    def predicate(_):
        if observed != expected:
            return "expected %s, got %s" % (expected, observed)

    return run_check(report, subject, axiom, degree, [None], predicate)


def hopf_suite(max_degree, seed=0):
    report = VerificationReport()
    words = min(max_degree, 4)
    for algebra, degree in (
        (WMAT, words),
        (WMAT_DUAL, words),
        (SH_ALGEBRA, min(max_degree, 5)),
        (SH_DUAL, min(max_degree, 5)),
        (ISPW_ALGEBRA, max_degree),
        (ISPW_DUAL, max_degree),
        (CE, max_degree),
        (CE_DUAL, max_degree),
        (QSYM, max_degree),
        (NSYM, max_degree),
        (H_ALGEBRA, max_degree),
        (C_ALGEBRA, max_degree),
        (SEMI_DIRECT, max_degree),
    ):
        logger.debug("hopf suite: %s up to degree %d", algebra, degree)
        report.extend(verify_hopf_axioms(algebra, degree))
    return report


def _family_cases(max_length):
    cases = []
    for n in range(1, max_length + 1):
        for family in (ZEROS, ONES, IDENTITY_PERM, DECREASING):
            cases.append((family, n, None, None))
        for i in range(1, n + 1):
            cases.append((MIXED_F, n, None, i))
            cases.append((MIXED_G, n, None, i))
        for alpha in compositions(n):
            cases.append((BLOCK_INCREASING, None, alpha.parts, None))
    return cases


def antipode_forms_suite(max_degree, seed=0):
    report = VerificationReport()
    for degree in range(1, min(max_degree, 4) + 1):
        _compare(
            report, "WMat", "closed antipode sum", degree, enumerate_packed(degree),
            antipode_closed_sum, lambda word: antipode_generic(WMAT, word),
        )
    cases = _family_cases(min(max_degree, 5))
    for family in FAMILIES:
        chosen = [case for case in cases if case[0] == family]

        def predicate(case):
            family, n, alpha, i = case
            word = antipode_family_word(family, n=n, alpha=alpha, i=i)
            if antipode_family(family, n=n, alpha=alpha, i=i) != antipode_generic(WMAT, word):
                return "%s on %s" % (family, word)

        run_check(report, "WMat", "antipode family %s" % family, min(max_degree, 5), chosen, predicate)
    return report


def _dual_checks(report, dual, primal, degree):
    _compare(
        report, str(dual), "closed product", degree, graded_pairs(dual, degree),
        lambda case: dual.product(*case), lambda case: dual_product_oracle(primal, *case),
    )
    _compare(
        report, str(dual), "closed coproduct", degree, dual.basis(degree),
        dual.coproduct, lambda z: dual_coproduct_oracle(primal, z),
    )


def _sampled_wmat_dual_products(report, degree, rng, size=60):
    cases = rng.sample(list(graded_pairs(WMAT_DUAL, degree)), size)
    _compare(
        report, "%s sampled" % WMAT_DUAL, "closed product", degree, cases,
        lambda case: WMAT_DUAL.product(*case), lambda case: dual_product_oracle(WMAT, *case),
    )


def dual_closed_forms_suite(max_degree, seed=0):
    report = VerificationReport()
    rng = random.Random(seed)
    for degree in range(1, max_degree + 1):
        if degree <= 4:
            _dual_checks(report, WMAT_DUAL, WMAT, degree)
        elif degree == 5:
            _compare(
                report, str(WMAT_DUAL), "closed coproduct", degree, WMAT_DUAL.basis(degree),
                WMAT_DUAL.coproduct, lambda z: dual_coproduct_oracle(WMAT, z),
            )
            _sampled_wmat_dual_products(report, degree, rng)
        if degree <= 5:
            _dual_checks(report, SH_DUAL, SH_ALGEBRA, degree)
        _dual_checks(report, ISPW_DUAL, ISPW_ALGEBRA, degree)
        _dual_checks(report, CE_DUAL, CE, degree)
        _dual_checks(report, NSYM, QSYM, degree)
    return report


def quadri_suite(max_degree, seed=0):
    degree = min(max_degree, 5)
    report = quadri_axiom_report(degree)
    report.extend(dendriform_axiom_report(degree))
    report.extend(zinbiel_report(degree))
    return report


def ispw_primitives_suite(max_degree, seed=0):
    report = VerificationReport()
    for degree in range(1, min(max_degree, len(ISPW_PRIMITIVE_DIMENSIONS)) + 1):
        basis = primitive_basis(ISPW_ALGEBRA, degree)
        _expect(report, "ISPW", "dim Prim", degree, len(basis), ISPW_PRIMITIVE_DIMENSIONS[degree - 1])
        if degree <= 6:
            classes = class_primitives(degree)
            _expect(
                report, "ISPW", "partition classes span Prim", degree,
                sum(len(vectors) for vectors in classes.values()), len(basis),
            )
            for name, family in (("P_gamma", p_gamma_family), ("P_lambda_gamma", p_lambda_gamma_family)):
                run_check(
                    report, "ISPW", "%s primitive" % name, degree, family(degree),
                    lambda case: None if is_primitive(ISPW_ALGEBRA, case[1]) else str(case[0]),
                )
    if max_degree >= 7:
        gammas = [vector for _, vector in p_gamma_family(7)]
        lambdas = [vector for _, vector in p_lambda_gamma_family(7)]
        _expect(report, "ISPW", "rank of P_gamma", 7, span_rank(gammas), 17)
        union = span_rank(gammas + lambdas)
        _expect(report, "ISPW", "P_gamma and P_lambda_gamma miss Prim", 7, union < 18, True)
    return report


def ce_structure_suite(max_degree, seed=0):
    report = VerificationReport()
    for degree in range(2, min(max_degree, 4) + 1):
        _compare(
            report, "Pi", "multiplicative", degree, graded_pairs(WMAT, degree),
            lambda case: LinComb.of(pi_project(star(*case))),
            lambda case: LinComb.of(ce_product(*(pi_project(word) for word in case))),
        )
    for degree in range(1, min(max_degree, 4) + 1):
        _compare(
            report, "Pi", "comultiplicative", degree, enumerate_packed(degree),
            lambda word: pi_image(comultiply(WMAT, LinComb.of(word))),
            lambda word: ce_coproduct(pi_project(word)),
        )
    for degree in range(1, min(max_degree, len(CE_PRIMITIVE_DIMENSIONS)) + 1):
        basis = primitive_basis(CE, degree)
        _expect(report, "Ce", "dim Prim", degree, len(basis), CE_PRIMITIVE_DIMENSIONS[degree - 1])
        if degree < 2:
            continue
        run_check(
            report, "Ce", "no mixed x0 support", degree, basis,
            lambda vector: next((str(label) for label, _ in vector if zero_frequency_violation(label)), None),
        )
        run_check(
            report, "Ce", "x0-free primitives lie in Prim(ISPW)", degree,
            [vector for vector in basis if not any(label.alpha0 for label, _ in vector)],
            lambda vector: None if ispw_image_is_primitive(vector) else str(vector),
        )
        classes = sorted(set(tuple(sorted(c.parts)) for c in compositions(degree)))
        run_check(
            report, "Ce", "gapped classes carry no primitive", degree,
            [parts for parts in classes if has_gap(parts)],
            lambda parts: str(parts) if class_kernel(parts) else None,
        )
        if degree >= 3:
            kernel = class_kernel((1,) * (degree - 2) + (2,))
            _expect(report, "Ce", "dim Prim on class (1^n,2)", degree, len(kernel), 1)
            _expect(
                report, "Ce", "gamma_2_ones spans class (1^n,2)", degree,
                span_rank(kernel + [gamma_2_ones(degree - 2)]), 1,
            )
    top = min(max_degree, 6)
    run_check(
        report, "Ce", "gamma_2_ones primitive", top + 2, list(range(1, top + 1)),
        lambda n: None if is_primitive(CE, gamma_2_ones(n)) else "n = %d" % n,
    )
    return report


def _coaction_product(x, y):
    terms = collections.defaultdict(Fraction)
    for s, c in x:
        for t, d in y:
            for c_label, e in C_ALGEBRA.product(s.factors[0], t.factors[0]):
                for h_label, f in H_ALGEBRA.product(s.factors[1], t.factors[1]):
                    terms[TensorTerm((c_label, h_label))] += c * d * e * f
    return LinComb(terms)


def _coproduct_through_coaction(c):
    """Σ c(1)_0 ⊗ c(2)_0 ⊗ c(1)_1 c(2)_1."""
    terms = collections.defaultdict(Fraction)
    for term, coefficient in C_ALGEBRA.coproduct(c):
        left, right = term.factors
        for s, d in rho_coaction(left):
            for t, e in rho_coaction(right):
                for h_label, f in H_ALGEBRA.product(s.factors[1], t.factors[1]):
                    terms[TensorTerm((s.factors[0], t.factors[0], h_label))] += coefficient * d * e * f
    return LinComb(terms)


def _random_series(rng, order):
    return TruncatedSeries([0] + [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(order)], order)


def _random_scalar(rng):
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


def _comodule_checks(report, subject, degree, cases):
    cases = list(cases)
    _compare(
        report, subject, "coassociative", degree, cases,
        lambda c: apply_tensor_maps([rho_coaction, identity_map], rho_coaction(c)),
        lambda c: apply_tensor_maps([identity_map, H_ALGEBRA.cached_coproduct], rho_coaction(c)),
    )
    _compare(
        report, subject, "counital", degree, cases,
        lambda c: LinComb((term.factors[0], k * H_ALGEBRA.counit(term.factors[1])) for term, k in rho_coaction(c)),
        LinComb.of,
    )
    _compare(
        report, subject, "compatible with Δ_C", degree, cases,
        lambda c: apply_tensor_maps([C_ALGEBRA.cached_coproduct, identity_map], rho_coaction(c)),
        _coproduct_through_coaction,
    )


def semidirect_suite(max_degree, seed=0):
    report = VerificationReport()
    top = min(max_degree, 6)
    _comodule_checks(report, "rho", top, [ExtComposition(0, (n,)) for n in range(1, top + 1)])
    for total in range(2, top + 1):
        _compare(
            report, "rho", "multiplicative", total, graded_pairs(C_ALGEBRA, total),
            lambda case: rho_coaction(ce_product(*case)),
            lambda case: _coaction_product(rho_coaction(case[0]), rho_coaction(case[1])),
        )
        products = dict.fromkeys(ce_product(*case) for case in graded_pairs(C_ALGEBRA, total))
        _comodule_checks(report, "rho on products", total, products)
    for total in range(2, min(max_degree, 5) + 1):
        _compare(
            report, "Upsilon", "multiplicative", total, graded_pairs(CE, total),
            lambda case: LinComb.of(upsilon(ce_product(*case))),
            lambda case: SEMI_DIRECT.product(upsilon(case[0]), upsilon(case[1])),
        )
    for total in range(1, min(max_degree, 5) + 1):
        _compare(
            report, "Upsilon", "comultiplicative", total, CE.basis(total),
            lambda a: upsilon_image(ce_coproduct(a)),
            lambda a: SEMI_DIRECT.coproduct(upsilon(a)),
        )
    rng = random.Random(seed)
    order = get_setting("SERIES_ORDER")
    samples = [(_random_scalar(rng), _random_series(rng, order)) for _ in range(5)]
    _compare(
        report, "Omega", "character composite", order, samples,
        lambda case: omega_action(*case), lambda case: omega_action_direct(*case),
    )
    short = [(_random_scalar(rng), _random_scalar(rng), _random_series(rng, 6)) for _ in range(5)]
    _compare(
        report, "Omega", "Omega(0, a) = a", 6, short,
        lambda case: omega_action(0, case[2]), lambda case: case[2],
    )
    _compare(
        report, "Omega", "Omega(l + m, a) = Omega(l, Omega(m, a))", 6, short,
        lambda case: omega_action(case[0] + case[1], case[2]),
        lambda case: omega_action(case[0], omega_action(case[1], case[2])),
    )
    return report


def morphisms_suite(max_degree, seed=0):
    report = VerificationReport()
    top = min(max_degree, 6)
    for degree in range(1, top + 1):
        labels = ISPW_DUAL.basis(degree)
        _compare(
            report, "Psi", "zeta_Q o Psi = zeta", degree, labels,
            lambda z: zeta_qsym(psi_closed(z)), zeta_ispw_dual.evaluate,
        )
        _compare(
            report, "Psi", "closed form", degree, labels,
            psi_closed, lambda z: abs_morphism(ISPW_DUAL, zeta_ispw_dual, z),
        )
        _expect(report, "Psi", "full rank", degree, psi_rank(degree), 2 ** (degree - 1))
        pairs = [(alpha, beta) for alpha in compositions(degree) for beta in compositions(degree)]
        _compare(
            report, "Psi*", "transpose of Psi", degree, pairs,
            lambda case: psi_star_closed(DualElement(Monomial(case[1].parts))).coefficient(case[0]),
            lambda case: psi_closed(DualElement(case[0])).coefficient(Monomial(case[1].parts)),
        )
    for degree in range(1, min(max_degree, 5) + 1):
        _compare(
            report, "Psi", "comultiplicative", degree, ISPW_DUAL.basis(degree),
            lambda z: comultiply(QSYM, psi_closed(z)),
            lambda z: apply_tensor_maps([psi_closed, psi_closed], ISPW_DUAL.coproduct(z)),
        )
        if degree >= 2:
            _compare(
                report, "Psi", "multiplicative", degree, graded_pairs(ISPW_DUAL, degree),
                lambda case: psi_image(ISPW_DUAL.product(*case)),
                lambda case: multiply(QSYM, psi_closed(case[0]), psi_closed(case[1])),
            )
    return report


SUITES = collections.OrderedDict((
    ("hopf", hopf_suite),
    ("antipode-forms", antipode_forms_suite),
    ("dual-closed-forms", dual_closed_forms_suite),
    ("quadri", quadri_suite),
    ("ispw-prim", ispw_primitives_suite),
    ("ce-structure", ce_structure_suite),
    ("semidirect", semidirect_suite),
    ("morphisms", morphisms_suite),
))


def run_suite(name, max_degree, seed=None):
    if seed is None:
        seed = get_setting("DEFAULT_SEED")
    if name == ALL:
        report = VerificationReport()
        for suite_name, suite in SUITES.items():
            logger.debug("running suite %s up to degree %d", suite_name, max_degree)
            report.extend(suite(max_degree, seed))
        return report
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](max_degree, seed)


ALGEBRAS = collections.OrderedDict((
    ("wmat", WMAT),
    ("wmat-dual", WMAT_DUAL),
    ("sh", SH_ALGEBRA),
    ("sh-dual", SH_DUAL),
    ("ispw", ISPW_ALGEBRA),
    ("ispw-dual", ISPW_DUAL),
    ("ce", CE),
    ("ce-dual", CE_DUAL),
    ("qsym", QSYM),
    ("nsym", NSYM),
))
