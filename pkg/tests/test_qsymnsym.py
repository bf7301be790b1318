#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_qsymnsym
------------

Tests for QSym, NSym and the isomorphisms with ISPW and its dual.
"""
from fractions import Fraction

from django.test import SimpleTestCase

from django_packed_words.compositions import Composition
from django_packed_words.expressions import parse
from django_packed_words.hopfcore import (
    DualElement,
    dual_coproduct_oracle,
    dual_product_oracle,
    graded_pairs,
    multiply,
    reduced_coproduct,
    verify_hopf_axioms,
)
from django_packed_words.ispw import ISPW_ALGEBRA, ISPW_DUAL
from django_packed_words.qsymnsym import (
    EMPTY_MONOMIAL,
    NSYM,
    QSYM,
    Monomial,
    abs_morphism,
    nsym_product,
    psi_closed,
    psi_generic,
    psi_image,
    psi_rank,
    psi_star_closed,
    qsym_coproduct,
    qsym_product,
    zeta_ispw_dual,
    zeta_qsym,
)
from django_packed_words.scalars import LinComb


def m(*parts):
    return Monomial(parts)


def ms(*parts):
    return DualElement(Monomial(parts))


def zc(*parts):
    return DualElement(Composition(parts))


class TestQSym(SimpleTestCase):
    def test_labels(self):
        self.assertEqual(str(m(1, 2)), "M(1,2)")
        self.assertEqual(str(ms(1, 2)), "M*(1,2)")
        self.assertNotEqual(m(1, 2), Composition((1, 2)))

    def test_product(self):
        self.assertEqual(qsym_product(m(1), m(1)), parse("2M(1,1) + M(2)"))
        self.assertEqual(qsym_product(EMPTY_MONOMIAL, m(2, 1)), LinComb.of(m(2, 1)))
        self.assertEqual(
            qsym_product(m(2), m(1, 1)),
            parse("M(2,1,1) + M(1,2,1) + M(1,1,2) + M(3,1) + M(1,3)"),
        )

    def test_coproduct(self):
        self.assertEqual(qsym_coproduct(m(1)), parse("M(1) ⊗ M() + M() ⊗ M(1)"))
        self.assertEqual(
            qsym_coproduct(m(2, 1, 3)),
            parse("M(2,1,3) ⊗ M() + M(2) ⊗ M(1,3) + M(2,1) ⊗ M(3) + M() ⊗ M(2,1,3)"),
        )

    def test_hopf_axioms(self):
        report = verify_hopf_axioms(QSYM, 4)
        self.assertTrue(report.passed, report.lines())

    def test_universal_morphism_on_itself_is_the_identity(self):
        for n in range(1, 5):
            for label in QSYM.basis(n):
                self.assertEqual(abs_morphism(QSYM, zeta_qsym, label), LinComb.of(label))


class TestNSym(SimpleTestCase):
    def test_product(self):
        self.assertEqual(nsym_product(ms(1, 3, 2, 2, 1), ms(4, 1, 4)), LinComb.of(ms(1, 3, 2, 2, 1, 4, 1, 4)))

    def test_reduced_coproducts(self):
        self.assertEqual(reduced_coproduct(NSYM, ms(3)), parse("M*(1) ⊗ M*(2) + M*(2) ⊗ M*(1)"))
        self.assertEqual(
            reduced_coproduct(NSYM, ms(1, 2)),
            parse("M*(1) ⊗ M*(2) + M*(1,1) ⊗ M*(1) + M*(1) ⊗ M*(1,1) + M*(2) ⊗ M*(1)"),
        )

    def test_dual_to_qsym(self):
        for degree in range(2, 5):
            for a, b in graded_pairs(NSYM, degree):
                self.assertEqual(NSYM.product(a, b), dual_product_oracle(QSYM, a, b))
        for n in range(1, 5):
            for label in NSYM.basis(n):
                self.assertEqual(NSYM.coproduct(label), dual_coproduct_oracle(QSYM, label), str(label))


class TestCharacters(SimpleTestCase):
    def test_values(self):
        self.assertEqual(zeta_ispw_dual.evaluate(zc(3)), 1)
        self.assertEqual(zeta_ispw_dual.evaluate(zc()), 1)
        self.assertEqual(zeta_ispw_dual.evaluate(zc(2, 5)), Fraction(1, 2))
        self.assertEqual(zeta_qsym.evaluate(m(4)), 1)
        self.assertEqual(zeta_qsym.evaluate(EMPTY_MONOMIAL), 1)
        self.assertEqual(zeta_qsym.evaluate(m(1, 3)), 0)


class TestPsi(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(psi_closed(zc(4)), LinComb.of(m(4)))
        self.assertEqual(psi_closed(zc(1, 1)), parse("M(1,1) + 1/2*M(2)"))
        self.assertEqual(psi_closed(zc(1, 2)), parse("M(1,2) + 1/2*M(3)"))
        self.assertEqual(psi_closed(zc()), LinComb.of(EMPTY_MONOMIAL))

    def test_closed_form_matches_universal_morphism(self):
        for n in range(1, 5):
            for label in ISPW_DUAL.basis(n):
                self.assertEqual(psi_closed(label), psi_generic(label), str(label))

    def test_zeta_is_preserved(self):
        for n in range(1, 7):
            for label in ISPW_DUAL.basis(n):
                self.assertEqual(zeta_qsym(psi_closed(label)), zeta_ispw_dual.evaluate(label))

    def test_rank(self):
        self.assertEqual([psi_rank(n) for n in range(1, 7)], [1, 2, 4, 8, 16, 32])

    def test_multiplicative(self):
        self.assertEqual(psi_image(ISPW_DUAL.product(zc(1), zc(1))), parse("2M(1,1) + M(2)"))
        for degree in range(2, 5):
            for a, b in graded_pairs(ISPW_DUAL, degree):
                self.assertEqual(
                    psi_image(ISPW_DUAL.product(a, b)),
                    multiply(QSYM, psi_closed(a), psi_closed(b)),
                    (str(a), str(b)),
                )


class TestPsiStar(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(psi_star_closed(ms(1)), LinComb.of(Composition((1,))))
        self.assertEqual(psi_star_closed(ms(2)), parse("(2) + 1/2*(1,1)"))

    def test_transpose_of_psi(self):
        for n in range(1, 6):
            for alpha in ISPW_DUAL.basis(n):
                image = psi_closed(alpha)
                for beta in NSYM.basis(n):
                    self.assertEqual(
                        psi_star_closed(beta).coefficient(alpha.primal),
                        image.coefficient(beta.primal),
                        (str(alpha), str(beta)),
                    )

    def test_multiplicative(self):
        for degree in range(2, 5):
            for a, b in graded_pairs(NSYM, degree):
                self.assertEqual(
                    psi_star_closed(nsym_product(a, b).labels()[0]),
                    multiply(ISPW_ALGEBRA, psi_star_closed(a), psi_star_closed(b)),
                )
