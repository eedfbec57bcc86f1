from django.test import SimpleTestCase

from braidosc.algebra.backends import LaurentBackend, NumericBackend
from braidosc.algebra.oscillator import Context, RepLabel
from braidosc.braids.matrices import build_matrix
from braidosc.braids.words import deviation

from .. import fixtures


class TestFixtures(SimpleTestCase):

    def test_lkb_is_transposed(self):
        first = fixtures.lkb_3()[0]
        self.assertEqual(first[0], [fixtures.X ** 4, -(fixtures.X ** 3), fixtures.X ** 2])
        self.assertEqual(first[2], [fixtures.ZERO, fixtures.ZERO, fixtures.ONE])

    def test_phases(self):
        d1, d2, d3 = fixtures.phases(RepLabel(1.0, 0.5), RepLabel(1.0, 0.5), 0.6)
        self.assertAlmostEqual(float(d1), 0.6 ** -1.0, places=12)
        self.assertAlmostEqual(float(d2), float(d1), places=12)
        self.assertAlmostEqual(float(d3), 1.0, places=12)

    def test_lkb_matches_the_computed_matrices(self):
        matrices = build_matrix(3, 2, Context([RepLabel(1.0, 0.5)] * 3, LaurentBackend()))
        self.assertEqual([matrix.entries for matrix in matrices], fixtures.lkb_3())

    def test_inhomogeneous_matches_the_computed_matrices(self):
        common, distinguished = RepLabel(0.9, 0.2), RepLabel(1.7, -0.4)
        context = Context([common, common, distinguished], NumericBackend(0.45))
        computed = build_matrix(3, 1, context)
        for matrix, printed in zip(computed, fixtures.inhomogeneous_3(common, distinguished, 0.45)):
            self.assertLess(deviation(matrix.entries, printed), 1e-12)
