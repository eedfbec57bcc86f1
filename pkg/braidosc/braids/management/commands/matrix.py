from django.core.management.base import BaseCommand

from braidosc.algebra import conf
from braidosc.algebra.exceptions import BraidOscError

from ...command_mixins import RunConfigCommandMixin
from ...exports import dumps_csv, dumps_json, dumps_text
from ...matrices import build_matrix


class Command(RunConfigCommandMixin, BaseCommand):
    help = 'Writes the braid generator matrices of a lowest-weight space.'

    def add_arguments(self, parser):
        self.add_config_arguments(parser)

    def handle(self, *args, **options):
        config = self.get_run_config(options)
        try:
            with conf.override_tolerances(**config.tolerances):
                context = config.context()
                matrices = build_matrix(config.n, config.N, context, route=config.route, inverse=config.inverse,
                                        apply_phase=config.apply_phase, binomial=config.binomial)
        except BraidOscError as error:
            self.fail(error)

        if config.format == 'csv':
            text = dumps_csv(matrices)
        elif config.format == 'text':
            text = dumps_text(matrices, [entry['name'] for entry in matrices[0].basis.get('basis', [])])
        else:
            text = dumps_json(matrices, context, config.route, config.N) + '\n'
        self.emit(text, config.output)
