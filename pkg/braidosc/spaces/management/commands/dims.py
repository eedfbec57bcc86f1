import json

from django.core.management.base import BaseCommand, CommandError

from braidosc.algebra.backends import NumericBackend
from braidosc.algebra.exceptions import BraidOscError, InvariantViolation
from braidosc.algebra.oscillator import Context, RepLabel

from ...weightspace import counts, lowest_weight_kernel


class Command(BaseCommand):
    help = 'Prints the weight-space dimension N_(n,N) and the lowest-weight dimensions M_(n,j), j <= N.'

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--N', type=int, default=4)
        parser.add_argument('--format', default='text', choices=('text', 'json'))
        parser.add_argument('--check', action='store_true',
                            help='also compute dim ker(Delta alpha-) numerically at q=0.6, gamma=1, c=0.5')

    def handle(self, *args, **options):
        n, N = options['n'], options['N']
        try:
            total, multiplicities = counts(n, N)
        except BraidOscError as error:
            raise CommandError(str(error), returncode=2)

        kernels = []
        if options['check']:
            context = Context([RepLabel(1.0, 0.5)] * n, NumericBackend(0.6))
            try:
                kernels = [len(lowest_weight_kernel(n, j, context)) for j in range(N + 1)]
            except InvariantViolation as error:
                raise CommandError(str(error), returncode=1)

        if options['format'] == 'json':
            data = {'n': n, 'N': N, 'weight_dimension': total, 'lowest_weight_dimensions': multiplicities}
            if kernels:
                data['kernel_dimensions'] = kernels
            self.stdout.write(json.dumps(data, indent=2))
            return

        self.stdout.write('n = {}'.format(n))
        kernel_header = ' {:>10}'.format('kernel') if kernels else ''
        self.stdout.write('{:>4} {:>10} {:>10}{}'.format('j', 'M_(n,j)', 'sum', kernel_header))
        running = 0
        for j, value in enumerate(multiplicities):
            running += value
            extra = ' {:>10}'.format(kernels[j]) if kernels else ''
            self.stdout.write('{:>4} {:>10} {:>10}{}'.format(j, value, running, extra))
        self.stdout.write('N_({},{}) = {}'.format(n, N, total))
        if running != total:
            raise CommandError('sum of M_(n,j) does not match N_(n,N)', returncode=1)
