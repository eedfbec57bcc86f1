import factory.random
from django.test import SimpleTestCase

from braidosc.algebra.backends import LaurentBackend, NumericBackend
from braidosc.algebra.exceptions import BackendError, InvalidParameter
from braidosc.algebra.oscillator import Context, Generator, RepLabel, coproduct_action, inner_product
from braidosc.algebra.tests.factories import homogeneous_context, inhomogeneous_context

from ..weightspace import (
    ALL_SECTORS, KERNEL, MONOMIAL, as_context, casimir_spectrum, compositions, counts, descendant_residual,
    enumerate_weight_basis, lowest_weight_kernel, lowest_weight_monomials, monomial_exponents, monomial_word,
    mutual_projection_residual, orthonormality_deviation, verify_decomposition,
)


class TestCounting(SimpleTestCase):

    def test_counts(self):
        self.assertEqual(counts(3, 3), (10, [1, 2, 3, 4]))
        self.assertEqual(counts(5, 2), (15, [1, 4, 10]))
        self.assertEqual(counts(2, 4), (5, [1, 1, 1, 1, 1]))

    def test_weight_dimension_is_the_sum_of_lowest_weight_dimensions(self):
        for n in range(2, 7):
            for N in range(6):
                total, multiplicities = counts(n, N)
                self.assertEqual(total, sum(multiplicities))
                self.assertEqual(len(compositions(n, N)), total)

    def test_invalid_sizes(self):
        with self.assertRaises(InvalidParameter):
            counts(1, 2)
        with self.assertRaises(InvalidParameter):
            counts(3, -1)

    def test_compositions_are_ascending(self):
        self.assertEqual(compositions(2, 2), [(0, 2), (1, 1), (2, 0)])

    def test_monomials_follow_index_words(self):
        self.assertEqual(monomial_exponents(3, 2), [(2, 0), (1, 1), (0, 2)])
        self.assertEqual([monomial_word(e) for e in monomial_exponents(4, 2)],
                         ['11', '12', '13', '22', '23', '33'])


class TestWeightSpace(SimpleTestCase):

    def setUp(self):
        factory.random.reseed_random(42)
        self.context = inhomogeneous_context(3)

    def test_single_sector_by_default(self):
        basis = enumerate_weight_basis(3, 2, self.context)
        self.assertEqual(len(basis), 6)
        self.assertEqual(basis.sectors, [self.context.initial_sector])

    def test_all_sectors(self):
        basis = enumerate_weight_basis(3, 2, self.context, ALL_SECTORS)
        self.assertEqual(len(basis), 18)
        self.assertEqual(basis.index(basis.states[7]), 7)

    def test_unknown_sector(self):
        with self.assertRaises(InvalidParameter):
            enumerate_weight_basis(3, 2, self.context, sector=(1, 1, 0))

    def test_bare_labels_need_a_backend(self):
        with self.assertRaises(InvalidParameter):
            as_context(2, [RepLabel(1.0, 0.5)] * 2)
        with self.assertRaises(InvalidParameter):
            as_context(3, [RepLabel(1.0, 0.5)] * 2, NumericBackend(0.5))


class TestLowestWeight(SimpleTestCase):

    def setUp(self):
        factory.random.reseed_random(42)
        self.homogeneous = homogeneous_context(3)
        self.inhomogeneous = inhomogeneous_context(3)

    def test_kernel_dimensions(self):
        for context in (self.homogeneous, self.inhomogeneous):
            for N in range(4):
                basis = lowest_weight_kernel(3, N, context)
                self.assertEqual(basis.kind, KERNEL)
                self.assertEqual(len(basis), N + 1)
                for vector in basis.vectors:
                    self.assertLess(coproduct_action(Generator.LOWER, vector).residual(), 1e-9)

    def test_exact_kernel_dimensions(self):
        context = Context([RepLabel(1.0, 0.5)] * 4, LaurentBackend())
        self.assertEqual([len(lowest_weight_kernel(4, N, context)) for N in range(3)], [1, 3, 6])

    def test_monomials_span_the_kernel(self):
        for context in (self.homogeneous, self.inhomogeneous):
            for N in range(4):
                kernel = lowest_weight_kernel(3, N, context)
                monomials = lowest_weight_monomials(3, N, context, sector=None)
                self.assertLess(mutual_projection_residual(kernel, monomials), 1e-8)

    def test_monomial_basis_over_all_sectors(self):
        basis = lowest_weight_monomials(3, 1, self.inhomogeneous)
        self.assertEqual(basis.kind, MONOMIAL)
        self.assertEqual(basis.labels(), ['w1^001', 'w1^010', 'w1^100', 'w2^001', 'w2^010', 'w2^100'])
        self.assertEqual(len(basis.gram), 6)

    def test_homogeneous_names(self):
        basis = lowest_weight_monomials(3, 2, self.homogeneous)
        self.assertEqual(basis.labels(), ['w11', 'w12', 'w22'])

    def test_normalized_n2_monomials_are_unit(self):
        context = homogeneous_context(2)
        for N in range(4):
            vector = lowest_weight_monomials(2, N, context, normalized=True).vectors[0]
            self.assertAlmostEqual(float(inner_product(vector, vector)), 1.0, places=10)

    def test_normalized_needs_numbers(self):
        context = Context([RepLabel(1.0, 0.5)] * 2, LaurentBackend())
        with self.assertRaises(BackendError):
            lowest_weight_monomials(2, 1, context, normalized=True)


class TestDecomposition(SimpleTestCase):

    def setUp(self):
        factory.random.reseed_random(7)

    def test_n2_ladder_is_orthonormal(self):
        self.assertLess(orthonormality_deviation(inhomogeneous_context(2)), 1e-10)

    def test_descendants_step_down(self):
        context = inhomogeneous_context(2)
        v0 = lowest_weight_monomials(2, 1, context, sector=None, normalized=True).vectors[0]
        for m in range(4):
            self.assertLess(descendant_residual(v0, m), 1e-9)

    def test_casimir_multiplicities(self):
        table = casimir_spectrum(3, 3, homogeneous_context(3))
        self.assertEqual([row[2] for row in table], [1, 2, 3, 4])
        self.assertEqual([row[3] for row in table], [1, 2, 3, 4])

    def test_decomposition(self):
        for context in (homogeneous_context(3), inhomogeneous_context(3)):
            report = verify_decomposition(3, 3, context)
            self.assertTrue(report.passed, report.failures)
            self.assertEqual(report.union_rank, 10)
            self.assertEqual([block['dimension'] for block in report.blocks], [1, 2, 3, 4])

    def test_decomposition_is_numeric(self):
        with self.assertRaises(BackendError):
            verify_decomposition(2, 1, Context([RepLabel(1.0, 0.5)] * 2, LaurentBackend()))
