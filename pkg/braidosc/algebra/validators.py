import math

from django.core.validators import BaseValidator, ValidationError
from django.utils.translation import ngettext_lazy


def finite_validator(value):
    if not math.isfinite(value):
        raise ValidationError('Value must be a finite real number.')


def gamma_validator(value):
    finite_validator(value)
    if value == 0:
        raise ValidationError('gamma must be nonzero ([0]_q vanishes).')


def q_validator(value):
    finite_validator(value)
    if value <= 0:
        raise ValidationError('q must be positive.')
    if value == 1:
        raise ValidationError('q = 1 is the classical limit; [gamma]_q is singular there.')


def parse_labels(value):
    """Parse "gamma:c,gamma:c,..." into a list of (gamma, c) float pairs."""
    pairs = []
    for chunk in value.split(','):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            gamma, c = chunk.split(':')
            pairs.append((float(gamma), float(c)))
        except ValueError:
            raise ValidationError('Invalid label "{}": expected gamma:c.'.format(chunk))
    return pairs


def labels_validator(value):
    for gamma, c in parse_labels(value):
        gamma_validator(gamma)
        finite_validator(c)


def parse_word(value):
    if isinstance(value, str):
        value = value.replace(',', ' ').split()
    try:
        return [int(letter) for letter in value]
    except ValueError:
        raise ValidationError('Braid words are sequences of signed generator indices.')


class GeneratorIndexValidator(BaseValidator):
    """Every letter of a braid word must lie in +-{1..n-1}."""
    message = ngettext_lazy(
        'Ensure every generator index is in 1..%(limit_value)d (found %(show_value)d invalid letter).',
        'Ensure every generator index is in 1..%(limit_value)d (found %(show_value)d invalid letters).',
        'show_value'
    )
    code = 'generator_index'

    def compare(self, value, limit):
        return value > 0

    def clean(self, x):
        return sum(1 for letter in parse_word(x) if letter == 0 or abs(letter) > self.limit_value)
