import math

import factory.random
from django.test import SimpleTestCase

from ..backends import LaurentBackend, NumericBackend
from ..exceptions import BackendError, ContextMismatch, InvalidParameter, InvariantViolation
from ..oscillator import (
    ANTIPODE, Context, Generator, RepLabel, TensorState, WeightVector, antipode, antipode_commutator_residual,
    apply_generator, apply_O, apply_O_monomial, casimir_action, commutator, coproduct_action, counit,
    hopf_axiom_residuals, inner_product, label_ids, norm, star_adjoint_check,
)
from ..scalars import LaurentScalar, q_number
from .factories import NumericBackendFactory, RepLabelFactory, inhomogeneous_context

H00 = TensorState((0, 1), (0, 0))
H10 = TensorState((0, 1), (1, 0))
H01 = TensorState((0, 1), (0, 1))


class TestRepLabel(SimpleTestCase):

    def test_zero_gamma_is_rejected(self):
        with self.assertRaises(InvalidParameter):
            RepLabel(0.0, 1.0)

    def test_non_finite_c_is_rejected(self):
        with self.assertRaises(InvalidParameter):
            RepLabel(1.0, float('nan'))

    def test_labels_are_hashable_values(self):
        self.assertEqual(RepLabel(1.0, 0.5), RepLabel(1.0, 0.5))
        self.assertEqual(len({RepLabel(1.0, 0.5), RepLabel(1.0, 0.5)}), 1)


class TestContext(SimpleTestCase):

    def setUp(self):
        self.a = RepLabel(1.0, 0.5)
        self.b = RepLabel(1.5, 0.8)

    def test_label_ids_by_first_appearance(self):
        self.assertEqual(label_ids([self.b, self.a, self.b]), ((self.b, self.a), (0, 1, 0)))

    def test_sectors_are_distinct_arrangements(self):
        context = Context([self.a, self.a, self.b], NumericBackend(0.6))
        self.assertEqual(context.initial_sector, (0, 0, 1))
        self.assertEqual(context.sectors(), [(0, 0, 1), (0, 1, 0), (1, 0, 0)])

    def test_homogeneous_context_has_one_sector(self):
        context = Context([self.a] * 4, NumericBackend(0.6))
        self.assertTrue(context.homogeneous)
        self.assertEqual(context.sectors(), [(0, 0, 0, 0)])

    def test_laurent_backend_needs_homogeneous_labels(self):
        with self.assertRaises(BackendError):
            Context([self.a, self.b], LaurentBackend())

    def test_contexts_compare_by_labels_and_backend(self):
        backend = NumericBackend(0.6)
        self.assertEqual(Context([self.a, self.b], backend), Context([self.a, self.b], NumericBackend(0.6)))
        self.assertNotEqual(Context([self.a, self.b], backend), Context([self.a, self.a], backend))
        self.assertNotEqual(Context([self.a, self.b], backend), Context([self.a, self.b], NumericBackend(0.7)))


class TestWeightVector(SimpleTestCase):

    def setUp(self):
        self.context = Context([RepLabel(1.0, 0.5), RepLabel(1.5, 0.8)], NumericBackend(0.6))

    def test_zero_coefficients_are_dropped(self):
        vector = WeightVector(self.context, {H10: 1.0, H01: 0.0})
        self.assertEqual(vector.states(), [H10])

    def test_mixed_occupations_are_rejected(self):
        with self.assertRaises(InvariantViolation):
            WeightVector(self.context, {H00: 1.0, H10: 1.0})

    def test_foreign_labels_are_rejected(self):
        with self.assertRaises(InvariantViolation):
            WeightVector(self.context, {TensorState((0, 0), (1, 0)): 1.0})

    def test_different_contexts_do_not_mix(self):
        other = Context([RepLabel(1.0, 0.5), RepLabel(1.5, 0.8)], NumericBackend(0.7))
        with self.assertRaises(ContextMismatch):
            self.context.vacuum() + other.vacuum()
        with self.assertRaises(ContextMismatch):
            inner_product(self.context.vacuum(), other.vacuum())

    def test_tensor_states_are_orthonormal(self):
        u = self.context.basis_vector(H01)
        self.assertEqual(float(inner_product(u, u)), 1.0)
        self.assertEqual(float(inner_product(u, self.context.basis_vector(H10))), 0.0)

    def test_json(self):
        vector = apply_O(1, self.context.vacuum())
        self.assertEqual(WeightVector.from_json(self.context, vector.to_json()), vector)


class TestNumericAction(SimpleTestCase):

    def setUp(self):
        self.q = 0.6
        self.l1 = RepLabel(1.0, 0.5)
        self.l2 = RepLabel(1.5, 0.8)
        self.context = Context([self.l1, self.l2], NumericBackend(self.q))
        self.g1 = float(q_number(1.0, self.q))
        self.g2 = float(q_number(1.5, self.q))
        self.g12 = float(q_number(2.5, self.q))

    def test_coproduct_raise_on_vacuum(self):
        image = coproduct_action(Generator.RAISE, self.context.vacuum())
        self.assertAlmostEqual(float(image.coefficient(H10)), self.q ** 0.75 * self.g1 ** 0.5, places=12)
        self.assertAlmostEqual(float(image.coefficient(H01)), self.q ** -0.5 * self.g2 ** 0.5, places=12)

    def test_ladder_on_vacuum(self):
        image = apply_O(1, self.context.vacuum())
        self.assertAlmostEqual(float(image.coefficient(H10)), self.q ** -0.5 * self.g2 ** 0.5, places=12)
        self.assertAlmostEqual(float(image.coefficient(H01)), -(self.q ** 0.75) * self.g1 ** 0.5, places=12)
        self.assertAlmostEqual(float(norm(image)), self.g12 ** 0.5, places=12)

    def test_ladder_image_is_lowest_weight(self):
        v = apply_O(1, apply_O(1, self.context.vacuum()))
        self.assertLess(coproduct_action(Generator.LOWER, v).residual(), 1e-12)

    def test_casimir_on_vacuum(self):
        v = self.context.vacuum()
        expected = v.scale(self.g12 * 1.3)
        self.assertLess((casimir_action(v) - expected).residual(), 1e-12)

    def test_epsilon_counts_occupation(self):
        v = self.context.basis_vector(TensorState((1, 0), (2, 1)))
        image = coproduct_action(Generator.EPSILON, v)
        self.assertLess((image - v.scale(1.3 + 3)).residual(), 1e-12)

    def test_single_slot_commutator(self):
        v = self.context.basis_vector(TensorState((0, 1), (2, 1)))

        def raising(w):
            return apply_generator(Generator.RAISE, 2, w)

        def lowering(w):
            return apply_generator(Generator.LOWER, 2, w)

        self.assertLess((commutator(lowering, raising, v) - v.scale(self.g2)).residual(), 1e-12)

    def test_slot_out_of_range(self):
        with self.assertRaises(InvalidParameter):
            apply_generator(Generator.RAISE, 3, self.context.vacuum())
        with self.assertRaises(InvalidParameter):
            apply_O(2, self.context.vacuum())


class TestLaddersCommute(SimpleTestCase):

    def setUp(self):
        factory.random.reseed_random(42)
        self.context = inhomogeneous_context(3)

    def test_distinct_ladders_commute(self):
        for sector in self.context.sectors():
            v = apply_O_monomial((1, 0), self.context.vacuum(sector)) + \
                apply_O_monomial((0, 1), self.context.vacuum(sector))
            difference = apply_O(1, apply_O(2, v)) - apply_O(2, apply_O(1, v))
            self.assertLess(difference.residual(), 1e-12)

    def test_ladders_commute_with_lowering(self):
        v = apply_O_monomial((1, 1), self.context.vacuum())
        for k in (1, 2):
            lowered = coproduct_action(Generator.LOWER, apply_O(k, v))
            self.assertLess(lowered.residual(), 1e-10)


class TestLaurentAction(SimpleTestCase):

    def setUp(self):
        self.context = Context([RepLabel(1.0, 0.5)] * 2, LaurentBackend())
        self.x = LaurentScalar.variable()

    def test_ladder_is_a_laurent_difference(self):
        image = apply_O(1, self.context.vacuum())
        self.assertEqual(image.coefficient(TensorState((0, 0), (1, 0))), self.x)
        self.assertEqual(image.coefficient(TensorState((0, 0), (0, 1))), -LaurentScalar.one())

    def test_ladder_image_is_exactly_lowest_weight(self):
        image = apply_O(1, apply_O(1, self.context.vacuum()))
        self.assertFalse(coproduct_action(Generator.LOWER, image))

    def test_casimir_is_numeric_only(self):
        with self.assertRaises(BackendError):
            casimir_action(self.context.vacuum())


class TestStarStructure(SimpleTestCase):

    def setUp(self):
        self.context = Context([RepLabel(1.0, 1.0)], NumericBackend(0.5))
        self.states = [self.context.basis_vector(((0,), (m,))) for m in range(6)]

    def test_single_slot_is_hermitian(self):
        for generator in (Generator.RAISE, Generator.LOWER, Generator.EPSILON):
            self.assertTrue(star_adjoint_check(generator, self.states))

    def test_coproduct_is_hermitian_on_weight_spaces(self):
        pair = Context([RepLabel(1.0, 1.0), RepLabel(2.0, 0.3)], NumericBackend(0.5))
        states = [
            pair.basis_vector(TensorState(sector, occupations))
            for sector in pair.sectors()
            for occupations in ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
        ]
        self.assertTrue(star_adjoint_check(Generator.RAISE, states))


class TestHopfStructure(SimpleTestCase):

    def setUp(self):
        factory.random.reseed_random(42)
        self.label = RepLabelFactory()
        self.backend = NumericBackendFactory()

    def test_counit(self):
        self.assertEqual(counit(Generator.RAISE), 0)
        self.assertEqual(counit(Generator.EPSILON), 0)
        self.assertEqual(counit(Generator.K_MINUS), 1)

    def test_antipode(self):
        self.assertEqual(antipode(Generator.LOWER), (-1, Generator.LOWER))
        self.assertEqual(antipode(Generator.K_PLUS), (1, Generator.K_MINUS))
        self.assertEqual(len(ANTIPODE), len(Generator))

    def test_axioms_hold_on_an_irrep(self):
        residuals = hopf_axiom_residuals(self.label, self.backend)
        self.assertLess(residuals['antipode'], 1e-10)
        self.assertLess(residuals['counit'], 1e-10)

    def test_antipode_reverses_commutators(self):
        self.assertLess(antipode_commutator_residual(self.label, self.backend), 1e-10)

    def test_norm_of_ladder_powers(self):
        context = Context([self.label, RepLabelFactory()], self.backend)
        gamma = float(q_number(sum(label.gamma for label in context.labels), float(self.backend.q)))
        for j in range(4):
            vector = apply_O_monomial((j,), context.vacuum())
            self.assertAlmostEqual(float(inner_product(vector, vector)) / (math.factorial(j) * gamma ** j), 1.0,
                                   places=9)
