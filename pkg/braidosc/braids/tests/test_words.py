from django.test import SimpleTestCase

from braidosc.algebra.exceptions import InvalidParameter
from braidosc.algebra.scalars import LaurentScalar, NumericScalar

from ..closed_forms import burau_matrix, closed_form_burau, invert_variable
from ..generators import BraidGenerator
from ..words import deviation, evaluate_word, identity_like, is_identity, matmul, parse_letters, trace, transpose

X = LaurentScalar.variable()


def numeric(rows):
    return [[NumericScalar(value) for value in row] for row in rows]


class TestMatrixHelpers(SimpleTestCase):

    def test_numeric_product(self):
        product = matmul(numeric([[1, 2], [3, 4]]), numeric([[0, 1], [1, 0]]))
        self.assertEqual(product, numeric([[2, 1], [4, 3]]))

    def test_exact_product_stays_exact(self):
        product = matmul(burau_matrix(3, 1), burau_matrix(3, 1))
        self.assertEqual(product[0][0], X ** 4)
        self.assertIsInstance(product[1][1], LaurentScalar)

    def test_shape_mismatch(self):
        with self.assertRaises(InvalidParameter):
            matmul(numeric([[1, 2]]), numeric([[1, 2]]))

    def test_transpose_and_trace(self):
        matrix = numeric([[1, 2], [3, 4]])
        self.assertEqual(transpose(matrix), numeric([[1, 3], [2, 4]]))
        self.assertEqual(float(trace(matrix)), 5.0)
        self.assertEqual(trace(burau_matrix(3, 1)), 1 - X ** 2)

    def test_deviation(self):
        self.assertAlmostEqual(deviation(numeric([[4, 0]]), numeric([[4, 0.4]])), 0.1)
        self.assertEqual(deviation(burau_matrix(3, 1), burau_matrix(3, 2)), 1.0)
        self.assertTrue(is_identity(identity_like(numeric([[5, 6], [7, 8]]))))


class TestWords(SimpleTestCase):

    def setUp(self):
        self.forward = closed_form_burau(4)
        self.inverse = [invert_variable(matrix) for matrix in self.forward]

    def test_parse_letters(self):
        self.assertEqual(parse_letters('1 -2,3'), [BraidGenerator(1), BraidGenerator(2, True), BraidGenerator(3)])
        self.assertEqual(parse_letters([2]), [BraidGenerator(2)])

    def test_letter_and_inverse_cancel(self):
        self.assertTrue(is_identity(evaluate_word('2 -2', self.forward, self.inverse)))

    def test_braid_relation(self):
        self.assertEqual(evaluate_word('1 2 1', self.forward, self.inverse),
                         evaluate_word('2 1 2', self.forward, self.inverse))

    def test_empty_word_is_the_identity(self):
        self.assertEqual(evaluate_word('', self.forward, self.inverse), identity_like(self.forward[0]))

    def test_generator_out_of_range(self):
        with self.assertRaises(InvalidParameter):
            evaluate_word('4', self.forward, self.inverse)

    def test_needs_matrices(self):
        with self.assertRaises(InvalidParameter):
            evaluate_word('1', [], [])
