"""
Coefficient domains.

NumericScalar wraps a native double, or an mpmath number when the configured
precision exceeds 15 digits. LaurentScalar is an exact sparse Laurent
polynomial in the formal variable x = q^(-gamma) with rational coefficients.
GlobalPhase carries the overall factors q^(-2 c gamma) that matrices are
emitted without.
"""
from fractions import Fraction

import mpmath
import sympy

from . import conf
from .exceptions import ScalarError


def real(value):
    """Coerce ``value`` to the configured real type (float or mpmath.mpf)."""
    if isinstance(value, NumericScalar):
        value = value.value
    if conf.extended_precision():
        if isinstance(value, Fraction):
            return mpmath.mpf(value.numerator) / value.denominator
        return mpmath.mpf(value)
    return float(value)


class NumericScalar:
    __slots__ = ('_value',)

    def __init__(self, value):
        object.__setattr__(self, '_value', real(value))

    def __setattr__(self, name, value):
        raise AttributeError('NumericScalar is immutable')

    @property
    def value(self):
        return self._value

    @staticmethod
    def _coerce(other):
        if isinstance(other, NumericScalar):
            return other._value
        if isinstance(other, (int, float, Fraction, mpmath.mpf)):
            return real(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumericScalar(self._value + other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumericScalar(self._value - other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumericScalar(other - self._value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumericScalar(self._value * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if abs(other) < conf.tolerance('zero_abs'):
            raise ScalarError('Division by a value below the zero threshold: {!r}'.format(other))
        return NumericScalar(self._value / other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NumericScalar(other) / self

    def __pow__(self, exponent):
        exponent = self._coerce(exponent)
        if exponent is NotImplemented:
            return exponent
        return NumericScalar(self._value ** exponent)

    def __rpow__(self, base):
        base = self._coerce(base)
        if base is NotImplemented:
            return base
        return NumericScalar(base ** self._value)

    def __neg__(self):
        return NumericScalar(-self._value)

    def __pos__(self):
        return self

    def __abs__(self):
        return NumericScalar(abs(self._value))

    def __float__(self):
        return float(self._value)

    def __bool__(self):
        return self._value != 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._value == other

    def __hash__(self):
        return hash(float(self._value))

    def __lt__(self, other):
        return self._value < self._coerce(other)

    def __le__(self, other):
        return self._value <= self._coerce(other)

    def __gt__(self, other):
        return self._value > self._coerce(other)

    def __ge__(self, other):
        return self._value >= self._coerce(other)

    def sqrt(self):
        if self._value < 0:
            raise ScalarError('Square root of a negative value: {!r}'.format(self._value))
        if isinstance(self._value, mpmath.mpf):
            return NumericScalar(mpmath.sqrt(self._value))
        return NumericScalar(self._value ** 0.5)

    def is_zero(self, scale=None):
        """Zero test against the configured absolute/relative tolerance pair."""
        threshold = conf.tolerance('zero_abs')
        if scale is not None:
            threshold = max(threshold, conf.tolerance('zero_rel') * abs(real(scale)))
        return abs(self._value) <= threshold

    def isclose(self, other, rel=None, abs_tol=None):
        rel = conf.tolerance('zero_rel') if rel is None else rel
        abs_tol = conf.tolerance('zero_abs') if abs_tol is None else abs_tol
        other = self._coerce(other)
        return abs(self._value - other) <= max(abs_tol, rel * max(abs(self._value), abs(other)))

    def to_json(self):
        if isinstance(self._value, mpmath.mpf):
            return mpmath.nstr(self._value, mpmath.mp.dps, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
        return repr(self._value)

    @classmethod
    def from_json(cls, data):
        if conf.extended_precision():
            return cls(mpmath.mpf(data))
        return cls(float(data))

    def __repr__(self):
        return 'NumericScalar({})'.format(self.to_json())

    __str__ = to_json


class LaurentScalar:
    """Exact Laurent polynomial sum(c_e x^e); the zero polynomial has no terms."""
    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        accumulated = {}
        for exponent, coefficient in items:
            exponent = int(exponent)
            accumulated[exponent] = accumulated.get(exponent, Fraction(0)) + Fraction(coefficient)
        object.__setattr__(
            self, '_terms',
            tuple(sorted((e, c) for e, c in accumulated.items() if c != 0)),
        )

    def __setattr__(self, name, value):
        raise AttributeError('LaurentScalar is immutable')

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def variable(cls):
        return cls({1: 1})

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, exponent):
        return dict(self._terms).get(exponent, Fraction(0))

    def is_monomial(self):
        return len(self._terms) == 1

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, LaurentScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentScalar(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar([(e, -c) for e, c in self._terms])

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                product[e1 + e2] = product.get(e1 + e2, Fraction(0)) + c1 * c2
        return LaurentScalar(product)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.is_monomial():
                raise ScalarError('Only monomials are invertible in the Laurent ring: {}'.format(self))
            (e, c), = self._terms
            return LaurentScalar({-e * -exponent: Fraction(1) / c ** -exponent})
        result = LaurentScalar.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.is_monomial():
            raise ScalarError('Exact division by a non-monomial: {}'.format(other))
        return self * other ** -1

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self, scale=None):
        return not self._terms

    def invert_variable(self):
        """The substitution x -> 1/x, i.e. q -> 1/q."""
        return LaurentScalar([(-e, c) for e, c in self._terms])

    def evaluate(self, x):
        x = NumericScalar(x)
        total = NumericScalar(0)
        for exponent, coefficient in self._terms:
            total = total + NumericScalar(coefficient) * x ** exponent
        return total

    def to_json(self):
        return {'terms': [[e, '{}/{}'.format(c.numerator, c.denominator)] for e, c in self._terms]}

    @classmethod
    def from_json(cls, data):
        return cls([(e, Fraction(c)) for e, c in data['terms']])

    def to_sympy(self, symbol):
        return sum((sympy.Rational(c.numerator, c.denominator) * symbol ** e for e, c in self._terms),
                   sympy.Integer(0))

    @classmethod
    def from_sympy(cls, expression, symbol):
        """Convert a rational function of ``symbol`` whose denominator is a monomial."""
        numerator, denominator = sympy.fraction(sympy.cancel(sympy.together(expression)))
        if numerator == 0:
            return cls.zero()
        denominator_terms = sympy.Poly(denominator, symbol).terms()
        if len(denominator_terms) != 1:
            raise ScalarError('Not a Laurent polynomial: {}'.format(expression))
        ((shift,), scale), = denominator_terms
        scale = Fraction(int(sympy.Rational(scale).p), int(sympy.Rational(scale).q))
        terms = {}
        for (exponent,), coefficient in sympy.Poly(numerator, symbol).terms():
            coefficient = sympy.Rational(coefficient)
            terms[exponent - shift] = Fraction(int(coefficient.p), int(coefficient.q)) / scale
        return cls(terms)

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for exponent, coefficient in reversed(self._terms):
            if exponent == 0:
                body = str(abs(coefficient))
            else:
                power = 'x' if exponent == 1 else 'x^{}'.format(exponent)
                body = power if abs(coefficient) == 1 else '{}*{}'.format(abs(coefficient), power)
            parts.append(('-' if coefficient < 0 else '+', body))
        text = ('-' if parts[0][0] == '-' else '') + parts[0][1]
        for sign, body in parts[1:]:
            text += ' {} {}'.format(sign, body)
        return text

    def __repr__(self):
        return 'LaurentScalar({})'.format(self)


def laurent_add(a, b):
    return a + b


def laurent_mul(a, b):
    return a * b


def laurent_eq(a, b):
    return a == b


class GlobalPhase:
    """
    Overall factor q^(-2 c gamma * exponent) split off a braid matrix.

    ``value`` is the numeric evaluation when known (numeric backends); the
    Laurent backend only tracks the exponent.
    """
    __slots__ = ('exponent', 'value')

    def __init__(self, exponent=0, value=None):
        object.__setattr__(self, 'exponent', Fraction(exponent))
        object.__setattr__(self, 'value', None if value is None else NumericScalar(value))

    def __setattr__(self, name, value):
        raise AttributeError('GlobalPhase is immutable')

    def _numeric(self):
        if self.value is not None:
            return self.value
        if self.exponent == 0:
            return NumericScalar(1)
        return None

    def __mul__(self, other):
        if not isinstance(other, GlobalPhase):
            return NotImplemented
        left, right = self._numeric(), other._numeric()
        value = None if left is None or right is None else left * right
        return GlobalPhase(self.exponent + other.exponent, value)

    def inverse(self):
        value = self._numeric()
        return GlobalPhase(-self.exponent, None if value is None else 1 / value)

    @property
    def is_trivial(self):
        value = self._numeric()
        return self.exponent == 0 and value is not None and value == 1

    def evaluate(self, q=None, gamma=None, c=None):
        value = self._numeric()
        if value is not None:
            return value
        return NumericScalar(q) ** (-2 * NumericScalar(c) * NumericScalar(gamma) * NumericScalar(self.exponent))

    def __eq__(self, other):
        if not isinstance(other, GlobalPhase):
            return NotImplemented
        return self.exponent == other.exponent and self._numeric() == other._numeric()

    def __hash__(self):
        return hash(self.exponent)

    def to_json(self):
        value = self._numeric()
        return {
            'exponent': '{}/{}'.format(self.exponent.numerator, self.exponent.denominator),
            'value': None if value is None else value.to_json(),
        }

    @classmethod
    def from_json(cls, data):
        value = data.get('value')
        return cls(Fraction(data['exponent']), None if value is None else NumericScalar.from_json(value))

    def __repr__(self):
        return 'GlobalPhase(exponent={}, value={})'.format(self.exponent, self.value)


def q_number(gamma, q, classical=False):
    """[gamma]_q = (q^gamma - q^-gamma) / (q - q^-1)."""
    q = NumericScalar(q)
    gamma = NumericScalar(gamma)
    if q <= 0:
        raise ScalarError('q must be positive, got {}'.format(q))
    if q == 1:
        if classical:
            return gamma
        raise ScalarError('[gamma]_q is singular at q = 1; pass classical=True for the limit value gamma')
    return (q ** gamma - q ** (-gamma)) / (q - 1 / q)


def scalar_to_json(value):
    if isinstance(value, LaurentScalar):
        return value.to_json()
    return NumericScalar(value).to_json()


def scalar_from_json(data):
    if isinstance(data, dict):
        return LaurentScalar.from_json(data)
    return NumericScalar.from_json(data)
