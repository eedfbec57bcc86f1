from dataclasses import dataclass, field

from django import forms
from django.core.exceptions import ValidationError

from braidosc.algebra import conf
from braidosc.algebra.backends import BINOMIAL_RULES, SERIES, LaurentBackend, NumericBackend
from braidosc.algebra.oscillator import Context, RepLabel
from braidosc.algebra.validators import (
    GeneratorIndexValidator, finite_validator, gamma_validator, labels_validator, parse_labels, parse_word,
    q_validator,
)

from .matrices import REWRITE, ROUTES

FORMATS = ('json', 'csv', 'text')


@dataclass
class RunConfig:
    n: int
    N: int
    labels: list
    q: float
    backend: str = 'numeric'
    route: str = REWRITE
    format: str = 'json'
    output: str = ''
    seed: int = 42
    inverse: bool = False
    apply_phase: bool = False
    binomial: str = SERIES
    tolerances: dict = field(default_factory=dict)
    word: list = field(default_factory=list)

    def context(self):
        backend = LaurentBackend() if self.backend == LaurentBackend.name else NumericBackend(self.q)
        return Context(self.labels, backend)


def parse_tolerances(value):
    """"route=1e-6,braid=1e-8" -> {'route': 1e-6, 'braid': 1e-8}"""
    overrides = {}
    for chunk in (value or '').split(','):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, _, number = chunk.partition('=')
        key = key.strip()
        if key not in conf.DEFAULT_TOLERANCES:
            raise ValidationError('Unknown tolerance "{}".'.format(key))
        try:
            overrides[key] = float(number)
        except ValueError:
            raise ValidationError('Tolerance "{}" needs a number.'.format(key))
    return overrides


class RunConfigForm(forms.Form):
    n = forms.IntegerField(min_value=2)
    N = forms.IntegerField(min_value=0, initial=1)
    homogeneous = forms.BooleanField(required=False)
    het = forms.BooleanField(required=False)
    labels = forms.CharField(required=False, validators=[labels_validator])
    gamma = forms.FloatField(initial=1.0, required=False, validators=[gamma_validator])
    c = forms.FloatField(initial=0.5, required=False, validators=[finite_validator])
    gamma2 = forms.FloatField(initial=1.5, required=False, validators=[gamma_validator])
    c2 = forms.FloatField(initial=0.8, required=False, validators=[finite_validator])
    q = forms.FloatField(initial=0.6, required=False, validators=[q_validator])
    backend = forms.ChoiceField(choices=[(name, name) for name in ('numeric', 'laurent')], initial='numeric',
                                required=False)
    route = forms.ChoiceField(choices=[(route, route) for route in ROUTES], initial=REWRITE, required=False)
    format = forms.ChoiceField(choices=[(name, name) for name in FORMATS], initial='json', required=False)
    output = forms.CharField(required=False)
    seed = forms.IntegerField(required=False)
    inverse = forms.BooleanField(required=False)
    apply_phase = forms.BooleanField(required=False)
    binomial = forms.ChoiceField(choices=[(rule, rule) for rule in BINOMIAL_RULES], initial=SERIES, required=False)
    tolerances = forms.CharField(required=False)
    word = forms.CharField(required=False)

    def _value(self, name):
        value = self.cleaned_data.get(name)
        if value in (None, ''):
            return self.fields[name].initial
        return value

    def clean_tolerances(self):
        return parse_tolerances(self.cleaned_data.get('tolerances'))

    def clean_word(self):
        return parse_word(self.cleaned_data.get('word') or '')

    def clean(self):
        cleaned = super().clean()
        n = cleaned.get('n')
        if n is None:
            return cleaned
        if cleaned.get('homogeneous') and cleaned.get('het'):
            raise ValidationError('Choose either --homogeneous or --het.')
        if cleaned.get('labels'):
            pairs = parse_labels(cleaned['labels'])
        elif cleaned.get('het'):
            pairs = [(self._value('gamma'), self._value('c'))] * (n - 1) + [(self._value('gamma2'), self._value('c2'))]
        else:
            pairs = [(self._value('gamma'), self._value('c'))] * n
        if len(pairs) != n:
            raise ValidationError('Expected {} labels, got {}.'.format(n, len(pairs)), code='labels')
        cleaned['label_list'] = [RepLabel(gamma, c) for gamma, c in pairs]
        if self._value('backend') == LaurentBackend.name and len(set(cleaned['label_list'])) > 1:
            raise ValidationError('The laurent backend requires homogeneous labels.', code='backend')
        if cleaned.get('word'):
            GeneratorIndexValidator(n - 1)(cleaned['word'])
        return cleaned

    def run_config(self):
        data = self.cleaned_data
        seed = data.get('seed')
        return RunConfig(
            n=data['n'],
            N=self._value('N'),
            labels=data['label_list'],
            q=self._value('q'),
            backend=self._value('backend'),
            route=self._value('route'),
            format=self._value('format'),
            output=data.get('output') or '',
            seed=conf.seed() if seed is None else seed,
            inverse=bool(data.get('inverse')),
            apply_phase=bool(data.get('apply_phase')),
            binomial=self._value('binomial'),
            tolerances=data.get('tolerances') or {},
            word=data.get('word') or [],
        )
