import factory.random
from django.test import SimpleTestCase

from braidosc.algebra.backends import LaurentBackend, NumericBackend
from braidosc.algebra.exceptions import BackendError, InvalidParameter, RouteDisagreement
from braidosc.algebra.oscillator import Context, RepLabel
from braidosc.algebra.scalars import NumericScalar
from braidosc.algebra.tests.factories import homogeneous_context, inhomogeneous_context
from braidosc.verification import fixtures

from ..closed_forms import closed_form_burau, closed_form_lkb, evaluate_matrix
from ..matrices import (
    CLOSED_FORM, DIRECT, REWRITE, BraidMatrix, build_matrix, check_braid_relations, check_inverse, compare_routes,
    first_difference,
)
from ..words import deviation

LABEL = RepLabel(1.0, 0.5)


def exact_context(n):
    return Context([LABEL] * n, LaurentBackend())


class TestExactMatrices(SimpleTestCase):

    def test_rewrite_gives_burau(self):
        for n in range(2, 6):
            matrices = build_matrix(n, 1, exact_context(n))
            self.assertEqual([matrix.entries for matrix in matrices], closed_form_burau(n))

    def test_rewrite_gives_lkb(self):
        for n in (3, 4):
            matrices = build_matrix(n, 2, exact_context(n))
            self.assertEqual([matrix.entries for matrix in matrices], closed_form_lkb(n))

    def test_braid_relations_hold_exactly(self):
        for n, N in ((3, 3), (4, 2)):
            self.assertEqual(check_braid_relations(build_matrix(n, N, exact_context(n))), 0.0)

    def test_inverses(self):
        context = exact_context(4)
        self.assertEqual(check_inverse(build_matrix(4, 2, context), build_matrix(4, 2, context, inverse=True)), 0.0)

    def test_vacuum_is_fixed(self):
        for matrix in build_matrix(3, 0, exact_context(3)):
            self.assertEqual(matrix.entries, [[fixtures.ONE]])

    def test_phase_cannot_be_applied(self):
        with self.assertRaises(BackendError):
            build_matrix(3, 1, exact_context(3), apply_phase=True)


class TestNumericMatrices(SimpleTestCase):

    def setUp(self):
        factory.random.reseed_random(42)

    def test_homogeneous_rewrite_is_evaluated_burau(self):
        context = homogeneous_context(4)
        x = context.q ** -NumericScalar(context.labels[0].gamma)
        for matrix, closed in zip(build_matrix(4, 1, context), closed_form_burau(4)):
            self.assertLess(deviation(matrix.entries, evaluate_matrix(closed, x)), 1e-12)

    def test_inhomogeneous_rewrite_matches_the_printed_matrices(self):
        common, distinguished = RepLabel(1.0, 0.5), RepLabel(1.5, 0.8)
        context = Context([common, common, distinguished], NumericBackend(0.6))
        matrices = build_matrix(3, 1, context)
        self.assertEqual(matrices[0].basis['basis'][0]['name'], 'w1^001')
        for matrix, printed in zip(matrices, fixtures.inhomogeneous_3(common, distinguished, 0.6)):
            self.assertLess(deviation(matrix.entries, printed), 1e-12)

    def test_routes_agree(self):
        for context in (homogeneous_context(3), inhomogeneous_context(3)):
            for N in (1, 2):
                rewrite = build_matrix(3, N, context)
                self.assertLess(compare_routes(build_matrix(3, N, context, route=DIRECT), rewrite), 1e-9)
            one = build_matrix(3, 1, context)
            self.assertLess(compare_routes(build_matrix(3, 1, context, route=CLOSED_FORM), one), 1e-9)

    def test_closed_form_inverse(self):
        context = inhomogeneous_context(3)
        forward = build_matrix(3, 1, context, route=CLOSED_FORM)
        inverse = build_matrix(3, 1, context, route=CLOSED_FORM, inverse=True)
        self.assertLess(check_inverse(forward, inverse), 1e-10)

    def test_braid_relations(self):
        for context in (homogeneous_context(4), inhomogeneous_context(4)):
            self.assertLess(check_braid_relations(build_matrix(4, 2, context)), 1e-9)

    def test_inverses(self):
        context = inhomogeneous_context(3)
        forward = build_matrix(3, 2, context)
        self.assertLess(check_inverse(forward, build_matrix(3, 2, context, inverse=True)), 1e-9)

    def test_apply_phase(self):
        context = homogeneous_context(3)
        plain = build_matrix(3, 1, context)
        phased = build_matrix(3, 1, context, apply_phase=True)
        value = plain[0].phase.value
        self.assertTrue(phased[0].phase_applied)
        scaled = [[entry * value for entry in row] for row in plain[0].entries]
        self.assertLess(deviation(phased[0].entries, scaled), 1e-12)

    def test_no_closed_form(self):
        with self.assertRaises(InvalidParameter):
            build_matrix(3, 3, homogeneous_context(3), route=CLOSED_FORM)

    def test_unknown_route(self):
        with self.assertRaises(InvalidParameter):
            build_matrix(3, 1, homogeneous_context(3), route='shortcut')


class TestRouteComparison(SimpleTestCase):

    def setUp(self):
        factory.random.reseed_random(42)
        self.matrices = build_matrix(3, 1, homogeneous_context(3))

    def perturbed(self):
        matrix = self.matrices[1]
        entries = [list(row) for row in matrix.entries]
        entries[1][0] = entries[1][0] + 1e-3
        return BraidMatrix(matrix.generator, entries, matrix.basis, matrix.phase, DIRECT)

    def test_first_difference(self):
        self.assertIsNone(first_difference(self.matrices[0], self.matrices[0]))
        difference = first_difference(self.matrices[1], self.perturbed())
        self.assertEqual((difference['generator'], difference['row'], difference['column']), ('s2', 1, 0))

    def test_disagreement_is_raised(self):
        with self.assertRaises(RouteDisagreement) as raised:
            compare_routes(self.matrices, [self.matrices[0], self.perturbed()])
        self.assertIn('(1, 0)', str(raised.exception))

    def test_json(self):
        data = self.matrices[0].to_json()
        self.assertEqual(data['generator'], 1)
        reloaded = BraidMatrix.from_json(data)
        self.assertEqual(reloaded.generator, self.matrices[0].generator)
        self.assertEqual(reloaded.entries, self.matrices[0].entries)
        self.assertEqual(reloaded.route, REWRITE)
