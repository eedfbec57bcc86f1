import json

from django.core.management.base import BaseCommand

from braidosc.algebra import conf
from braidosc.algebra.exceptions import BraidOscError
from braidosc.algebra.scalars import scalar_to_json

from ...command_mixins import RunConfigCommandMixin
from ...exports import render_entries
from ...matrices import build_matrix
from ...words import evaluate_word, is_identity, trace


class Command(RunConfigCommandMixin, BaseCommand):
    help = 'Evaluates a braid word, e.g. "1 2 -1", as a product of generator matrices.'

    def add_arguments(self, parser):
        parser.add_argument('letters', nargs='+', help='signed generator indices')
        self.add_config_arguments(parser)

    def handle(self, *args, **options):
        options['word'] = ' '.join(options.pop('letters'))
        config = self.get_run_config(options)
        try:
            with conf.override_tolerances(**config.tolerances):
                context = config.context()
                kwargs = dict(route=config.route, apply_phase=config.apply_phase, binomial=config.binomial)
                forward = build_matrix(config.n, config.N, context, **kwargs)
                inverse = build_matrix(config.n, config.N, context, inverse=True, **kwargs)
                product = evaluate_word(config.word, [m.entries for m in forward], [m.entries for m in inverse])
                identity = is_identity(product, conf.tolerance('identity'))
        except BraidOscError as error:
            self.fail(error)

        if config.format == 'json':
            text = json.dumps({
                'word': config.word,
                'entries': [[scalar_to_json(value) for value in row] for row in product],
                'trace': scalar_to_json(trace(product)),
                'identity': identity,
            }, indent=2) + '\n'
        else:
            text = render_entries('word {}'.format(' '.join(str(letter) for letter in config.word)), product)
            text += 'trace: {}\n'.format(trace(product))
        self.emit(text, config.output)
