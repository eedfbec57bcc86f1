from django.core.management.base import CommandError

from braidosc.algebra.exceptions import BraidOscError, InvariantViolation

from .forms import RunConfigForm

# option name -> form field
CONFIG_OPTIONS = (
    'n', 'N', 'homogeneous', 'het', 'labels', 'gamma', 'c', 'gamma2', 'c2', 'q', 'backend', 'route',
    'format', 'output', 'seed', 'inverse', 'apply_phase', 'binomial', 'tolerances', 'word',
)


class RunConfigCommandMixin:
    """Shared flags and RunConfig validation of the matrix and word commands."""

    def add_config_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='number of tensor factors')
        parser.add_argument('--N', type=int, default=None, help='total occupation above the vacuum')
        parser.add_argument('--homogeneous', action='store_true', help='all factors carry (gamma, c)')
        parser.add_argument('--het', action='store_true',
                            help='n-1 factors carry (gamma, c), the last one (gamma2, c2)')
        parser.add_argument('--labels', default=None, help='explicit labels "gamma:c,gamma:c,..."')
        parser.add_argument('--gamma', type=float, default=None)
        parser.add_argument('--c', type=float, default=None)
        parser.add_argument('--gamma2', type=float, default=None)
        parser.add_argument('--c2', type=float, default=None)
        parser.add_argument('--q', type=float, default=None)
        parser.add_argument('--backend', default=None, help='numeric or laurent')
        parser.add_argument('--route', default=None, help='direct, rewrite, closed_form or series')
        parser.add_argument('--format', default=None, help='json, csv or text')
        parser.add_argument('--output', default=None, help='write to this file instead of stdout')
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument('--inverse', action='store_true', help='emit the inverse generators')
        parser.add_argument('--apply-phase', dest='apply_phase', action='store_true',
                            help='keep the vacuum phase in homogeneous matrices')
        parser.add_argument('--binomial', default=None, help='series or printed exchange coefficients')
        parser.add_argument('--tolerances', default=None, help='overrides "key=value,..."')

    def get_run_config(self, options):
        data = {}
        for name in CONFIG_OPTIONS:
            value = options.get(name)
            # unset flags stay out of the form, zeros are values
            if value is not None and value is not False:
                data[name] = value
        form = RunConfigForm(data)
        if not form.is_valid():
            errors = '; '.join(
                '{}: {}'.format(field, ' '.join(messages)) if field != '__all__' else ' '.join(messages)
                for field, messages in form.errors.items()
            )
            raise CommandError('Invalid configuration: {}'.format(errors), returncode=2)
        return form.run_config()

    def fail(self, error):
        if isinstance(error, InvariantViolation):
            raise CommandError(str(error), returncode=1)
        if isinstance(error, BraidOscError):
            raise CommandError(str(error), returncode=2)
        raise error

    def emit(self, text, path):
        if path:
            with open(path, 'w') as handle:
                handle.write(text)
            self.stdout.write(self.style.SUCCESS('Wrote {}'.format(path)))
        else:
            self.stdout.write(text, ending='')
