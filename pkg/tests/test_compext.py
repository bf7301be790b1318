#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_compext
------------

Tests for extended compositions, the coaction on C and the semi-direct
coproduct.
"""
from fractions import Fraction

from django.test import SimpleTestCase

from django_packed_words.compext import (
    CE,
    CE_DUAL,
    C_ALGEBRA,
    H_ALGEBRA,
    SEMI_DIRECT,
    SemiDirectElement,
    ce_coproduct,
    ce_dual_coproduct,
    ce_dual_product,
    ce_from_ispw,
    ce_product,
    class_kernel,
    gamma_2_ones,
    gamma_lambda_of,
    gamma_of,
    h_power,
    has_gap,
    ispw_from_ce,
    ispw_image_is_primitive,
    omega_action,
    omega_action_direct,
    pi_image,
    pi_project,
    rho_coaction,
    rho_star,
    upsilon,
    upsilon_image,
    upsilon_inv,
    zero_frequency_violation,
)
from django_packed_words.compositions import EXT_UNIT, ExtComposition
from django_packed_words.exceptions import ContractViolation, StructureError
from django_packed_words.expressions import parse
from django_packed_words.hopfcore import (
    DualElement,
    dual_coproduct_oracle,
    dual_product_oracle,
    graded_pairs,
    is_primitive,
    primitive_basis,
    reduced_coproduct,
    span_rank,
)
from django_packed_words.pword import PackedWord, enumerate_packed
from django_packed_words.scalars import LinComb, TruncatedSeries, apply_tensor_maps, identity_map, tensor
from django_packed_words.wmat import wmat_coproduct


def e(alpha0, *parts):
    return ExtComposition(alpha0, parts)


def ze(alpha0, *parts):
    return DualElement(ExtComposition(alpha0, parts))


def zh(k):
    return DualElement(h_power(k))


class TestProjection(SimpleTestCase):
    def test_frequencies(self):
        self.assertEqual(pi_project(PackedWord((1, 2, 0))), e(1, 1, 1))
        self.assertEqual(pi_project(PackedWord((0, 0))), e(2))
        self.assertEqual(pi_project(PackedWord((2, 1, 2))), pi_project(PackedWord((2, 2, 1))))

    def test_projection_is_comultiplicative(self):
        for n in range(1, 5):
            for word in enumerate_packed(n):
                self.assertEqual(pi_image(wmat_coproduct(word)), ce_coproduct(pi_project(word)), str(word))


class TestCe(SimpleTestCase):
    def test_product(self):
        self.assertEqual(ce_product(e(0, 1, 4, 2), e(3, 2, 2)), e(3, 1, 4, 2, 2, 2))
        self.assertEqual(ce_product(e(3, 2, 2), e(0, 1, 4, 2)), e(3, 2, 2, 1, 4, 2))
        self.assertEqual(ce_product(e(2, 3, 4, 1, 2), e(12, 3, 14, 4)), e(14, 3, 4, 1, 2, 3, 14, 4))

    def test_reduced_coproducts(self):
        self.assertEqual(
            reduced_coproduct(CE, e(1, 1, 1)),
            parse("(1;) ⊗ (0;1,1) + 2(0;1) ⊗ (1;1) + (0;1,1) ⊗ (1;) + 2(1;1) ⊗ (0;1)"),
        )
        self.assertEqual(
            reduced_coproduct(CE, e(0, 2, 1)),
            parse("(0;1) ⊗ (0;2) + 2(0;1) ⊗ (1;1) + (0;2) ⊗ (0;1) + 2(0;1,1) ⊗ (1;)"),
        )
        self.assertTrue(reduced_coproduct(CE, e(1)).is_zero())
        self.assertTrue(reduced_coproduct(CE, e(0, 1)).is_zero())

    def test_dimensions(self):
        self.assertEqual([len(CE.basis(n)) for n in range(1, 9)], [2 ** n for n in range(1, 9)])

    def test_primitive_dimensions(self):
        self.assertEqual([len(primitive_basis(CE, n)) for n in range(1, 7)], [2, 0, 1, 1, 3, 3])

    def test_degree_three_primitive(self):
        self.assertTrue(is_primitive(CE, parse("(0;1,2) - (0;2,1)")))


class TestCeDual(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(ce_dual_product(ze(0, 1), ze(0, 1)), LinComb.of(ze(0, 1, 1), 2))
        self.assertEqual(ce_dual_product(ze(0, 1), ze(1, 1)), parse("2Z(0;2,1) + 2Z(0;1,2) + 2Z(1;1,1)"))
        reduced = ce_dual_coproduct(ze(1, 2, 3)) - parse("Z(0;) ⊗ Z(1;2,3) + Z(1;2,3) ⊗ Z(0;)")
        self.assertEqual(
            reduced,
            parse("Z(0;2) ⊗ Z(1;3) + Z(0;2,3) ⊗ Z(1;) + Z(1;) ⊗ Z(0;2,3) + Z(1;2) ⊗ Z(0;3)"),
        )

    def test_closed_forms_match_oracles(self):
        for degree in range(2, 5):
            for a, b in graded_pairs(CE_DUAL, degree):
                self.assertEqual(ce_dual_product(a, b), dual_product_oracle(CE, a, b), (str(a), str(b)))
        for n in range(1, 5):
            for label in CE_DUAL.basis(n):
                self.assertEqual(ce_dual_coproduct(label), dual_coproduct_oracle(CE, label), str(label))


class TestCoaction(SimpleTestCase):
    def test_rho(self):
        self.assertEqual(
            rho_coaction(e(0, 2, 2)),
            parse("4(0;1,1) ⊗ (2) + 2(0;1,2) ⊗ (1) + 2(0;2,1) ⊗ (1) + (0;2,2) ⊗ ()"),
        )
        self.assertEqual(rho_coaction(e(0, 1)), parse("(0;1) ⊗ ()"))
        self.assertEqual(rho_coaction(e(0, 3)), parse("3(0;1) ⊗ (2) + 3(0;2) ⊗ (1) + (0;3) ⊗ ()"))
        with self.assertRaises(StructureError):
            rho_coaction(e(1, 2))

    def test_rho_star(self):
        z = ze(0, 5, 23, 4)
        self.assertEqual(rho_star(z, zh(0)), LinComb.of(z))
        self.assertEqual(rho_star(z, zh(1)), parse("6Z(0;6,23,4) + 24Z(0;5,24,4) + 5Z(0;5,23,5)"))
        second = rho_star(z, zh(2))
        self.assertEqual(len(second), 6)
        self.assertEqual(second.coefficient(ze(0, 7, 23, 4)), 21)
        self.assertEqual(second.coefficient(ze(0, 6, 24, 4)), 144)
        self.assertTrue(rho_star(DualElement(EXT_UNIT), zh(1)).is_zero())

    def test_rho_star_is_an_action(self):
        product = dual_product_oracle(H_ALGEBRA, zh(1), zh(2))
        self.assertEqual(product, LinComb.of(zh(3), 3))
        for z in CE_DUAL.basis(3):
            if z.primal.alpha0:
                continue
            once = rho_star(rho_star(z, zh(1)), zh(2))
            combined = LinComb()
            for h, c in product:
                combined = combined + rho_star(z, h) * c
            self.assertEqual(once, combined, str(z))

    def test_rho_is_multiplicative(self):
        def product(x, y):
            terms = []
            for s, c in x:
                for t, d in y:
                    h = H_ALGEBRA.product(s.factors[1], t.factors[1])
                    terms.extend(
                        (tensor(ce_product(s.factors[0], t.factors[0]), label), c * d * f) for label, f in h
                    )
            return LinComb(terms)

        for degree in range(2, 7):
            for a, b in graded_pairs(C_ALGEBRA, degree):
                self.assertEqual(
                    rho_coaction(ce_product(a, b)), product(rho_coaction(a), rho_coaction(b)), (str(a), str(b))
                )

    def test_comodule_axioms_on_products(self):
        for a, b in graded_pairs(C_ALGEBRA, 6):
            coaction = rho_coaction(ce_product(a, b))
            self.assertEqual(
                apply_tensor_maps([rho_coaction, identity_map], coaction),
                apply_tensor_maps([identity_map, H_ALGEBRA.cached_coproduct], coaction),
            )
            counit = LinComb((term.factors[0], k * H_ALGEBRA.counit(term.factors[1])) for term, k in coaction)
            self.assertEqual(counit, LinComb.of(ce_product(a, b)))


class TestSemiDirect(SimpleTestCase):
    def test_upsilon(self):
        self.assertEqual(upsilon(e(3, 2, 2)), SemiDirectElement(3, e(0, 2, 2)))
        self.assertEqual(str(upsilon(e(3, 2, 2))), "(3)⋊(0;2,2)")
        for label in CE.basis(3):
            self.assertEqual(upsilon_inv(upsilon(label)), label)
        with self.assertRaises(StructureError):
            SemiDirectElement(1, e(1))

    def test_upsilon_intertwines(self):
        for n in range(1, 5):
            for label in CE.basis(n):
                self.assertEqual(
                    upsilon_image(ce_coproduct(label)), SEMI_DIRECT.coproduct(upsilon(label)), str(label)
                )
        for a, b in graded_pairs(CE, 3):
            self.assertEqual(
                SEMI_DIRECT.product(upsilon(a), upsilon(b)),
                LinComb.of(upsilon(ce_product(a, b))),
            )

    def test_generators(self):
        self.assertTrue(reduced_coproduct(SEMI_DIRECT, SemiDirectElement(1)).is_zero())
        self.assertEqual(
            reduced_coproduct(SEMI_DIRECT, upsilon(e(0, 2))),
            upsilon_image(parse("2(0;1) ⊗ (1;)")),
        )


class TestCharacterAction(SimpleTestCase):
    def test_examples(self):
        x = TruncatedSeries.monomial(1, 3)
        lam = Fraction(3, 2)
        self.assertEqual(omega_action(lam, x), TruncatedSeries([0, 1, lam, lam ** 2 / 2], 3))
        a = TruncatedSeries([0, 2, -1, Fraction(1, 3), 5], 4)
        self.assertEqual(omega_action(0, a), a)

    def test_agrees_with_direct_form(self):
        a = TruncatedSeries([0, 1, Fraction(-2, 3), 4, 0, Fraction(1, 5), -1], 6)
        for lam in (Fraction(0), Fraction(1), Fraction(-5, 2)):
            self.assertEqual(omega_action(lam, a), omega_action_direct(lam, a))

    def test_is_an_action(self):
        a = TruncatedSeries([0, 3, 1, Fraction(-1, 2), 0, 2, 7], 6)
        lam, mu = Fraction(2, 3), Fraction(-1, 4)
        self.assertEqual(omega_action(lam, omega_action(mu, a)), omega_action(lam + mu, a))

    def test_constant_term_is_rejected(self):
        with self.assertRaises(ContractViolation):
            omega_action(1, TruncatedSeries([1, 1], 1))


class TestPrimitives(SimpleTestCase):
    def test_gamma_2_ones(self):
        self.assertEqual(gamma_2_ones(2), parse("(0;2,1,1) - 2(0;1,2,1) + (0;1,1,2)"))
        self.assertEqual(gamma_2_ones(3), parse("(0;2,1,1,1) - 3(0;1,2,1,1) + 3(0;1,1,2,1) - (0;1,1,1,2)"))
        self.assertEqual(gamma_2_ones(1), parse("(0;2,1) - (0;1,2)"))
        for n in range(1, 7):
            self.assertTrue(is_primitive(CE, gamma_2_ones(n)), n)
        with self.assertRaises(ContractViolation):
            gamma_2_ones(0)

    def test_gamma_2_ones_spans_its_class(self):
        for degree in range(3, 8):
            kernel = class_kernel((1,) * (degree - 2) + (2,))
            self.assertEqual(len(kernel), 1, degree)
            self.assertEqual(span_rank(kernel + [gamma_2_ones(degree - 2)]), 1, degree)
        self.assertEqual(span_rank(primitive_basis(CE, 4) + [gamma_2_ones(2)]), 1)

    def test_primitives_across_rearrangement_classes(self):
        u = parse("-(0;1,4) + 2(0;2,3) - 2(0;3,2) + (0;4,1)")
        self.assertTrue(is_primitive(CE, u))
        self.assertEqual(class_kernel((1, 4)), [])
        self.assertEqual(class_kernel((2, 3)), [])
        self.assertEqual(span_rank(primitive_basis(CE, 5) + [gamma_2_ones(3), u]), 3)

    def test_non_primitive_witnesses(self):
        u = parse(
            "(0;3,2,1,1) - 2(0;3,1,2,1) + (0;3,1,1,2) - (0;2,1,1,3) + 2(0;1,2,1,3) - (0;1,1,2,3)"
        )
        self.assertFalse(is_primitive(CE, u))
        gamma = gamma_of((1, 1, 1), (1, 3, 5))
        self.assertEqual(
            gamma,
            parse("(0;1,3,5) - 2(0;3,1,5) + (0;3,5,1) + (0;1,5,3) - 2(0;5,1,3) + (0;5,3,1)"),
        )
        self.assertTrue(ispw_image_is_primitive(gamma))
        self.assertFalse(is_primitive(CE, gamma))

    def test_zero_frequency_conditions(self):
        self.assertTrue(zero_frequency_violation(e(1, 1)))
        self.assertTrue(zero_frequency_violation(e(2)))
        self.assertFalse(zero_frequency_violation(e(1)))
        self.assertFalse(zero_frequency_violation(e(0, 1, 2)))

    def test_gap_classes(self):
        self.assertTrue(has_gap((1, 3)))
        self.assertTrue(has_gap((2,)))
        self.assertFalse(has_gap((1, 1, 2)))
        self.assertEqual(class_kernel((1, 3)), [])
        self.assertEqual(len(class_kernel((1, 1, 2))), 1)

    def test_ispw_readings(self):
        self.assertEqual(ce_from_ispw(parse("(1,2) - (2,1)")), parse("(0;1,2) - (0;2,1)"))
        self.assertEqual(ispw_from_ce(parse("(0;1,2)")), parse("(1,2)"))
        with self.assertRaises(StructureError):
            ispw_from_ce(parse("(1;2)"))
        self.assertEqual(gamma_lambda_of((1, 1), (1, 2)), gamma_of((1, 1), (1, 2)))
        self.assertEqual(gamma_of((1, 1), (1, 2)), parse("(0;1,2) - (0;2,1)"))
