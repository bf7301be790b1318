#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_scalars
------------

Tests for exact linear combinations, kernels and truncated series.
"""
from fractions import Fraction

import sympy
from django.test import SimpleTestCase

from django_packed_words.exceptions import ContractViolation, StructureError
from django_packed_words.pword import PackedWord
from django_packed_words.scalars import (
    LinComb,
    TensorTerm,
    TruncatedSeries,
    ZERO,
    apply_linear,
    kernel_basis,
    lc_add,
    lc_scale,
    lc_tensor,
    matrix_rank,
)


def w(*letters):
    return PackedWord(letters)


class TestLinComb(SimpleTestCase):
    def test_additive_inverse_is_empty(self):
        a = LinComb.of(w(1), 3)
        self.assertTrue((a + LinComb.of(w(1), -3)).is_zero())
        self.assertEqual(a - a, 0)

    def test_disjoint_supports(self):
        total = LinComb.of(w(1)) + LinComb.of(w(0))
        self.assertEqual(total.labels(), [w(0), w(1)])

    def test_tensor_terms_add(self):
        x = LinComb.of(TensorTerm((w(1), w(1, 0))), 2)
        y = LinComb.of(TensorTerm((w(0), w(1, 2))))
        total = x + y
        self.assertEqual(total.coefficient(TensorTerm((w(1), w(1, 0)))), 2)
        self.assertEqual(total.arity, 2)

    def test_mixed_arity_is_structural(self):
        with self.assertRaises(StructureError):
            LinComb.of(w(1)) + LinComb.of(TensorTerm((w(1), w(1))))

    def test_scaling(self):
        a = LinComb.of(w(1)) + LinComb.of(w(1, 2))
        self.assertEqual(0 * a, ZERO)
        self.assertEqual(1 * a, a)
        self.assertEqual(Fraction(1, 2) * LinComb.of(w(1), 2), LinComb.of(w(1)))

    def test_function_forms(self):
        a = LinComb.of(w(1), 3)
        self.assertEqual(lc_add(a, LinComb.of(w(0))), a + LinComb.of(w(0)))
        self.assertEqual(lc_scale(Fraction(-1, 3), a), LinComb.of(w(1), -1))
        self.assertTrue(lc_scale(0, a).is_zero())
        with self.assertRaises(StructureError):
            lc_add(a, LinComb.of(TensorTerm((w(1), w(1)))))

    def test_floats_are_rejected(self):
        with self.assertRaises(StructureError):
            LinComb.of(w(1), 0.5)

    def test_duplicate_labels_merge(self):
        self.assertEqual(LinComb([(w(1), 1), (w(1), 2)]), LinComb.of(w(1), 3))

    def test_tensor_product(self):
        self.assertEqual(
            lc_tensor(LinComb.of(w(1), 2), LinComb.of(w(0), 3)),
            LinComb.of(TensorTerm((w(1), w(0))), 6),
        )
        self.assertEqual(
            lc_tensor(LinComb.of(w(1)) + LinComb.of(w(0)), LinComb.of(w(1, 2))),
            LinComb([(TensorTerm((w(1), w(1, 2))), 1), (TensorTerm((w(0), w(1, 2))), 1)]),
        )

    def test_apply_linear(self):
        a = LinComb.of(w(1), 3)
        self.assertEqual(apply_linear(LinComb.of, a), a)
        self.assertEqual(apply_linear(lambda label: ZERO, a), 0)
        self.assertEqual(apply_linear(lambda label: LinComb.of(label, 2), a), LinComb.of(w(1), 6))

    def test_apply_linear_undefined_label(self):
        with self.assertRaises(StructureError):
            apply_linear({}.__getitem__, LinComb.of(w(1)))


class TestKernels(SimpleTestCase):
    def test_identity_has_trivial_kernel(self):
        self.assertEqual(kernel_basis([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), [])

    def test_single_row(self):
        self.assertEqual(kernel_basis([[1, 1]]), [[Fraction(-1), Fraction(1)]])

    def test_rank_deficient_matches_sympy(self):
        matrix = [[1, 2], [2, 4]]
        basis = kernel_basis(matrix)
        self.assertEqual(len(basis), 1)
        self.assertEqual(matrix_rank(matrix), sympy.Matrix(matrix).rank())
        for row in matrix:
            self.assertEqual(sum(a * b for a, b in zip(row, basis[0])), 0)

    def test_rank_against_sympy(self):
        matrix = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0], [1, 3, 4, 4]]
        self.assertEqual(matrix_rank(matrix), sympy.Matrix(matrix).rank())

    def test_empty_matrix(self):
        self.assertEqual(len(kernel_basis([], 2)), 2)


class TestTruncatedSeries(SimpleTestCase):
    def test_exponential_matches_sympy(self):
        x = sympy.Symbol("x")
        expected = sympy.series(sympy.exp(3 * x), x, 0, 6).removeO()
        series = TruncatedSeries.exponential(3, 5)
        for n in range(6):
            self.assertEqual(series[n], Fraction(str(expected.coeff(x, n))))

    def test_inverse(self):
        series = TruncatedSeries([1, 2, 6, 26], 3)
        one = TruncatedSeries.monomial(0, 3)
        self.assertEqual(series * series.inverse(), one)

    def test_inverse_needs_constant_term(self):
        with self.assertRaises(ContractViolation):
            TruncatedSeries([0, 1], 3).inverse()

    def test_orders_must_agree(self):
        with self.assertRaises(ContractViolation):
            TruncatedSeries([1], 2) + TruncatedSeries([1], 3)
