#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_wmatdual
------------

Tests for the closed product and coproduct of the graded dual of WMat.
"""
import random

from django.test import SimpleTestCase

from django_packed_words.exceptions import StructureError
from django_packed_words.expressions import parse
from django_packed_words.hopfcore import DualElement, dual_coproduct_oracle, dual_product_oracle, graded_pairs
from django_packed_words.pword import EMPTY_WORD, PackedWord
from django_packed_words.scalars import LinComb, TensorTerm
from django_packed_words.wmat import WMAT
from django_packed_words.wmatdual import (
    C1,
    C2,
    C3,
    C4,
    WMAT_DUAL,
    classify_pair,
    dual_coproduct_closed,
    dual_product_closed,
    gamma_set,
)


def w(*letters):
    return PackedWord(letters)


def z(*letters):
    return DualElement(PackedWord(letters))


class TestDualCoproduct(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(
            dual_coproduct_closed(z(2, 1, 3)),
            parse("Z[] ⊗ Z[2,1,3] + Z[2,1] ⊗ Z[1] + Z[2,1,3] ⊗ Z[]"),
        )
        self.assertEqual(dual_coproduct_closed(z(2, 1, 2)), parse("Z[] ⊗ Z[2,1,2] + Z[2,1,2] ⊗ Z[]"))
        self.assertEqual(dual_coproduct_closed(z(1)), parse("Z[] ⊗ Z[1] + Z[1] ⊗ Z[]"))
        self.assertEqual(dual_coproduct_closed(z()), LinComb.of(TensorTerm((z(), z()))))

    def test_matches_oracle(self):
        for n in range(1, 6):
            for label in WMAT_DUAL.basis(n):
                self.assertEqual(dual_coproduct_closed(label), dual_coproduct_oracle(WMAT, label), str(label))


class TestDualProduct(SimpleTestCase):
    def test_classify(self):
        self.assertEqual(classify_pair(w(1), w(1, 1)), C1)
        self.assertEqual(classify_pair(w(0), w(1)), C3)
        self.assertEqual(classify_pair(w(1), w(0)), C4)
        self.assertEqual(classify_pair(w(1, 0), w(0, 1)), C2)
        with self.assertRaises(StructureError):
            classify_pair(EMPTY_WORD, w(1))

    def test_gamma_set(self):
        self.assertEqual(gamma_set(w(1), w(1, 1)), [(2, 2)])
        self.assertEqual(sorted(gamma_set(w(1), w(0))), [(0,), (1,)])
        self.assertEqual(sorted(gamma_set(w(1, 0), w(0, 1))), [(0, 2), (1, 2)])

    def test_examples(self):
        self.assertEqual(
            dual_product_closed(z(1), z(1, 1)),
            parse("Z[1,2,2] + Z[2,1,2] + Z[2,2,1] + Z[2,1,1] + Z[1,2,1] + Z[1,1,2]"),
        )
        self.assertEqual(dual_product_closed(z(0), z(1)), parse("Z[1,0] + Z[0,1]"))
        self.assertEqual(dual_product_closed(z(1), z(0)), parse("Z[1,0] + Z[0,1] + 2Z[1,1]"))
        self.assertEqual(dual_product_closed(z(), z(2, 1)), LinComb.of(z(2, 1)))

    def test_matches_oracle(self):
        for degree in range(2, 5):
            for a, b in graded_pairs(WMAT_DUAL, degree):
                self.assertEqual(dual_product_closed(a, b), dual_product_oracle(WMAT, a, b), (str(a), str(b)))

    def test_matches_oracle_on_sampled_degree_five_pairs(self):
        pairs = list(graded_pairs(WMAT_DUAL, 5))
        self.assertEqual(len(pairs), 2 * 150 + 6 * 26 + 26 * 6 + 150 * 2)
        for a, b in random.Random(5).sample(pairs, 80):
            self.assertEqual(dual_product_closed(a, b), dual_product_oracle(WMAT, a, b), (str(a), str(b)))
