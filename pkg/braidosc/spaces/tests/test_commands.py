import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase


class TestDimsCommand(SimpleTestCase):

    def call(self, *args):
        out = StringIO()
        call_command('dims', *args, stdout=out)
        return out.getvalue()

    def test_table(self):
        output = self.call('--n', '3', '--N', '3')
        lines = output.splitlines()
        self.assertEqual(lines[0], 'n = 3')
        self.assertEqual(lines[-1], 'N_(3,3) = 10')
        self.assertEqual(lines[-2].split(), ['3', '4', '10'])

    def test_json(self):
        data = json.loads(self.call('--n', '5', '--N', '2', '--format', 'json'))
        self.assertEqual(data['weight_dimension'], 15)
        self.assertEqual(data['lowest_weight_dimensions'], [1, 4, 10])
        self.assertNotIn('kernel_dimensions', data)

    def test_check_computes_kernels(self):
        data = json.loads(self.call('--n', '3', '--N', '2', '--format', 'json', '--check'))
        self.assertEqual(data['kernel_dimensions'], [1, 2, 3])

    def test_invalid_n(self):
        with self.assertRaises(CommandError) as raised:
            self.call('--n', '1')
        self.assertEqual(raised.exception.returncode, 2)
