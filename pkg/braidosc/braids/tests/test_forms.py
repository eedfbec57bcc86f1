from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from braidosc.algebra.backends import PRINTED, SERIES, LaurentBackend, NumericBackend
from braidosc.algebra.oscillator import RepLabel

from ..forms import RunConfigForm, parse_tolerances


class TestRunConfigForm(SimpleTestCase):

    def config(self, **data):
        form = RunConfigForm(data)
        self.assertTrue(form.is_valid(), form.errors)
        return form.run_config()

    def errors(self, **data):
        form = RunConfigForm(data)
        self.assertFalse(form.is_valid())
        return form.errors

    def test_defaults(self):
        config = self.config(n=3)
        self.assertEqual(config.N, 1)
        self.assertEqual(config.labels, [RepLabel(1.0, 0.5)] * 3)
        self.assertEqual((config.q, config.backend, config.route, config.format), (0.6, 'numeric', 'rewrite', 'json'))
        self.assertEqual(config.binomial, SERIES)
        self.assertEqual(config.seed, 42)
        self.assertIsInstance(config.context().backend, NumericBackend)

    def test_het_adds_a_distinguished_label(self):
        config = self.config(n=3, het=True, gamma2=2.0)
        self.assertEqual(config.labels, [RepLabel(1.0, 0.5), RepLabel(1.0, 0.5), RepLabel(2.0, 0.8)])

    def test_explicit_labels(self):
        config = self.config(n=2, labels='1:0.5, 0.7:0.1', binomial=PRINTED)
        self.assertEqual(config.labels, [RepLabel(1.0, 0.5), RepLabel(0.7, 0.1)])
        self.assertEqual(config.binomial, PRINTED)

    def test_label_count_must_match_n(self):
        self.assertIn('__all__', self.errors(n=3, labels='1:0.5'))

    def test_homogeneous_and_het_conflict(self):
        self.assertIn('__all__', self.errors(n=3, homogeneous=True, het=True))

    def test_laurent_needs_homogeneous_labels(self):
        self.assertIn('__all__', self.errors(n=3, het=True, backend='laurent'))
        config = self.config(n=3, backend='laurent')
        self.assertIsInstance(config.context().backend, LaurentBackend)

    def test_word(self):
        self.assertEqual(self.config(n=3, word='1 -2 2').word, [1, -2, 2])
        self.assertIn('__all__', self.errors(n=3, word='1 3'))
        self.assertIn('word', self.errors(n=3, word='1 x'))

    def test_invalid_values(self):
        self.assertIn('n', self.errors(n=1))
        self.assertIn('q', self.errors(n=3, q=1))
        self.assertIn('gamma', self.errors(n=3, gamma=0))
        self.assertIn('route', self.errors(n=3, route='shortcut'))

    def test_tolerances(self):
        self.assertEqual(self.config(n=2, tolerances='route=1e-6').tolerances, {'route': 1e-6})
        self.assertIn('tolerances', self.errors(n=2, tolerances='nonsense=1'))


class TestParseTolerances(SimpleTestCase):

    def test_parse(self):
        self.assertEqual(parse_tolerances('route=1e-6, braid=1e-8'), {'route': 1e-6, 'braid': 1e-8})
        self.assertEqual(parse_tolerances(''), {})

    def test_needs_a_number(self):
        with self.assertRaises(ValidationError):
            parse_tolerances('route=small')
