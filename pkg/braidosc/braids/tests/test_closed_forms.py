from django.test import SimpleTestCase

from braidosc.algebra.exceptions import InvalidParameter
from braidosc.algebra.oscillator import RepLabel
from braidosc.verification import fixtures

from ..closed_forms import (
    burau_matrix, burau_textbook_residual, closed_form_burau, closed_form_inhomogeneous, closed_form_lkb,
    corrjk_change_of_basis, invert_variable, lkb_pairs,
)
from ..words import identity_like, is_identity, matmul


class TestBurau(SimpleTestCase):

    def test_three_strands(self):
        self.assertEqual(closed_form_burau(3), fixtures.BURAU_3)

    def test_two_strands(self):
        self.assertEqual(burau_matrix(2, 1), [[-(fixtures.X ** 2)]])

    def test_inverse_is_the_substitution(self):
        for n in range(2, 6):
            for matrix in closed_form_burau(n):
                product = matmul(matrix, invert_variable(matrix))
                self.assertEqual(product, identity_like(matrix))

    def test_matches_the_textbook_matrices(self):
        for n in range(2, 7):
            self.assertEqual(burau_textbook_residual(n), 0)

    def test_needs_two_strands(self):
        with self.assertRaises(InvalidParameter):
            closed_form_burau(1)


class TestLKB(SimpleTestCase):

    def test_pairs(self):
        self.assertEqual(lkb_pairs(3), [(1, 1), (1, 2), (2, 2)])
        self.assertEqual(len(lkb_pairs(5)), 10)

    def test_three_strands(self):
        self.assertEqual(closed_form_lkb(3), fixtures.lkb_3())

    def test_inverse_is_the_substitution(self):
        for matrix in closed_form_lkb(4):
            self.assertEqual(matmul(invert_variable(matrix), matrix), identity_like(matrix))


class TestInhomogeneous(SimpleTestCase):

    def test_matches_the_printed_matrices(self):
        for common, distinguished, q in (
            (RepLabel(1.0, 0.5), RepLabel(1.5, 0.8), 0.6),
            (RepLabel(0.7, -0.3), RepLabel(2.1, 1.2), 0.35),
        ):
            computed = closed_form_inhomogeneous(3, common, distinguished, q)
            printed = fixtures.inhomogeneous_3(common, distinguished, q)
            for a, b in zip(computed, printed):
                for row_a, row_b in zip(a, b):
                    for x, y in zip(row_a, row_b):
                        self.assertAlmostEqual(float(x), float(y), places=12)

    def test_inverse_at_reciprocal_q(self):
        common, distinguished = RepLabel(1.0, 0.5), RepLabel(1.5, 0.8)
        forward = closed_form_inhomogeneous(3, common, distinguished, 0.6)
        inverse = closed_form_inhomogeneous(3, common, distinguished, 1 / 0.6)
        for a, b in zip(forward, inverse):
            self.assertEqual(len(a), 6)
            self.assertTrue(is_identity(matmul(a, b), 1e-10))


class TestChangeOfBasis(SimpleTestCase):

    def test_three_strands(self):
        change = corrjk_change_of_basis(3, 1.0)
        self.assertTrue(change.invertible)
        self.assertAlmostEqual(change.determinant, -4.0, places=10)
        data = change.to_json()
        self.assertEqual(data['rows'], ['W12', 'W13', 'W23'])
        self.assertEqual(data['columns'], ['w11', 'w12', 'w22'])

    def test_larger_n_is_invertible(self):
        for n in range(3, 6):
            self.assertTrue(corrjk_change_of_basis(n, 1.0).invertible)

    def test_s_must_be_nonzero(self):
        with self.assertRaises(InvalidParameter):
            corrjk_change_of_basis(3, 0)
