import factory.random
from django.test import SimpleTestCase

from braidosc.algebra.backends import LaurentBackend, NumericBackend
from braidosc.algebra.exceptions import BackendError, InvalidParameter
from braidosc.algebra.oscillator import Context, RepLabel, TensorState, WeightVector
from braidosc.algebra.tests.factories import homogeneous_context, inhomogeneous_context
from braidosc.spaces.weightspace import ALL_SECTORS, enumerate_weight_basis

from ..generators import (
    BraidGenerator, apply_sigma_direct, apply_sigma_series, casimir_commutation_residual, compare_binomial_rules,
    conjugation_residual,
)


class TestBraidGenerator(SimpleTestCase):

    def test_letters(self):
        generator = BraidGenerator.from_letter(-2)
        self.assertEqual(generator, BraidGenerator(2, inverse=True))
        self.assertEqual(generator.letter, -2)
        self.assertEqual(str(generator), 's2^-1')
        self.assertEqual(generator.inverted(), BraidGenerator(2))

    def test_zero_is_not_a_letter(self):
        with self.assertRaises(InvalidParameter):
            BraidGenerator.from_letter(0)

    def test_validate_against_n(self):
        with self.assertRaises(InvalidParameter):
            BraidGenerator(3).validate(3)
        self.assertEqual(BraidGenerator(2).validate(3).i, 2)


class TestDirectAction(SimpleTestCase):

    def setUp(self):
        factory.random.reseed_random(42)
        self.context = inhomogeneous_context(3)
        self.space = enumerate_weight_basis(3, 2, self.context, ALL_SECTORS)

    def test_vacuum_picks_up_the_exchange_phase(self):
        l1, l2 = RepLabel(1.0, 0.5), RepLabel(1.5, 0.8)
        context = Context([l1, l2], NumericBackend(0.6))
        image = apply_sigma_direct(BraidGenerator(1), context.vacuum())
        self.assertEqual(image.states(), [TensorState((1, 0), (0, 0))])
        expected = 0.6 ** -(0.5 * 1.5 + 0.8 * 1.0)
        self.assertAlmostEqual(float(image.coefficient(TensorState((1, 0), (0, 0)))), expected, places=12)

    def test_inverse_undoes_the_generator(self):
        for i in (1, 2):
            for state in self.space.states:
                v = self.context.basis_vector(state)
                there = apply_sigma_direct(BraidGenerator(i), v)
                back = apply_sigma_direct(BraidGenerator(i, inverse=True), there)
                self.assertLess((back - v).residual(), 1e-10)

    def test_occupation_is_preserved(self):
        for state in self.space.states:
            image = apply_sigma_direct(BraidGenerator(1), self.context.basis_vector(state))
            self.assertEqual({s.total for s in image.states()}, {2})

    def test_series_matches_on_single_exchanges(self):
        for state in self.space.states:
            if state.occupations[0] > 1:
                continue
            v = self.context.basis_vector(state)
            for generator in (BraidGenerator(1), BraidGenerator(1, inverse=True)):
                self.assertLess((apply_sigma_series(generator, v) - apply_sigma_direct(generator, v)).residual(),
                                1e-12)

    def test_series_matches_everywhere_with_the_series_rule(self):
        v = WeightVector(self.context, [(state, 1.0 + index) for index, state in enumerate(self.space.states)])
        for generator in (BraidGenerator(1), BraidGenerator(2, inverse=True)):
            difference = apply_sigma_series(generator, v) - apply_sigma_direct(generator, v)
            self.assertLess(difference.residual(), 1e-10)

    def test_series_is_numeric_only(self):
        context = Context([RepLabel(1.0, 0.5)] * 2, LaurentBackend())
        with self.assertRaises(BackendError):
            apply_sigma_series(BraidGenerator(1), context.vacuum())

    def test_exchange_rules(self):
        for state in self.space.states:
            for i in (1, 2):
                self.assertLess(conjugation_residual(i, self.context.basis_vector(state)), 1e-10)

    def test_casimir_commutes(self):
        for i in (1, 2):
            self.assertLess(casimir_commutation_residual(BraidGenerator(i), self.space.states, self.context), 1e-8)


class TestBinomialRules(SimpleTestCase):

    def setUp(self):
        factory.random.reseed_random(42)

    def test_rules_agree_on_one_exchange(self):
        report = compare_binomial_rules(3, 1, homogeneous_context(3))
        self.assertIsNone(report['first_difference'])
        self.assertEqual(report['span_errors'], {})

    def test_series_rule_satisfies_the_braid_relations(self):
        report = compare_binomial_rules(3, 2, inhomogeneous_context(3))
        self.assertIsNotNone(report['first_difference'])
        self.assertLess(report['braid_residual']['series'], 1e-9)
        self.assertNotIn('series', report['span_errors'])
