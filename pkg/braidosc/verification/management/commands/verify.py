import json

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from braidosc.algebra import conf
from braidosc.braids.forms import parse_tolerances

from ...suites import SUITES, run_suites


class Command(BaseCommand):
    help = 'Runs the verification suites and optionally writes a JSON report.'

    def add_arguments(self, parser):
        parser.add_argument('--suite', default='all', choices=('all',) + tuple(SUITES))
        parser.add_argument('--seed', type=int, default=None)
        parser.add_argument('--draws', type=int, default=None, help='random parameter draws per suite')
        parser.add_argument('--report', default=None, help='write the JSON report to this file')
        parser.add_argument('--tolerances', default=None, help='overrides "key=value,..."')
        parser.add_argument('--no-timings', dest='timings', action='store_false',
                            help='leave runtimes out of the output and the report')

    def handle(self, *args, **options):
        names = list(SUITES) if options['suite'] == 'all' else [options['suite']]
        if options['draws'] is not None and options['draws'] < 1:
            raise CommandError('--draws must be at least 1', returncode=2)
        try:
            overrides = parse_tolerances(options['tolerances'])
        except ValidationError as error:
            raise CommandError(' '.join(error.messages), returncode=2)

        with conf.override_tolerances(**overrides):
            reports = run_suites(names, options['seed'], options['draws'])

        for report in reports:
            for result in report.checks:
                residual = '' if result.residual is None else ' ({:.3e})'.format(result.residual)
                line = '{}/{}: {}{}'.format(report.suite, result.name, 'pass' if result.passed else 'FAIL', residual)
                style = self.style.SUCCESS if result.passed else self.style.ERROR
                self.stdout.write(style(line))
            summary = '{}: {} checks, {} failed, max residual {:.3e}'.format(
                report.suite, len(report.checks), len(report.failures), report.max_residual)
            if options['timings']:
                summary += ', {:.2f}s'.format(report.runtime)
            self.stdout.write(summary)

        passed = all(report.passed for report in reports)
        if options['report']:
            with open(options['report'], 'w') as handle:
                json.dump({'passed': passed, 'suites': [report.to_json(options['timings']) for report in reports]},
                          handle, indent=2, default=str)
            self.stdout.write('Wrote {}'.format(options['report']))
        if not passed:
            raise CommandError('verification failed', returncode=1)
