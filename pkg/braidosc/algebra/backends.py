"""
Coefficient providers.

Every operator of the library is written once against this interface; the
backend decides which numbers the occupation-basis coefficients are.

NumericBackend works in the orthonormal occupation basis h_m with general
labels. LaurentBackend (homogeneous labels only) works in the rescaled basis
h'_m = ([gamma]_q^m m!)^(1/2) h_m, where each operator, up to an overall
scalar, has coefficients in Z[x, 1/x] with x = q^(-gamma):

    alpha+            ->  shift
    alpha- / [gamma]  ->  m * shift
    Delta alpha+-     ->  sum_j x^j (.)_j             (times q^((n+1) gamma / 2))
    O_k               ->  x alpha+_k - alpha+_(k+1)   (times q^(gamma / 2))
    R h'_m h'_m'      ->  x^(m+m') sum_k C(m,k) (1/x - x)^k h'_(m-k) h'_(m'+k)
                                                      (times q^(-2 c gamma))
"""
import math

from .exceptions import BackendError, ScalarError
from .scalars import GlobalPhase, LaurentScalar, NumericScalar, q_number

SERIES = 'series'
PRINTED = 'printed'
BINOMIAL_RULES = (SERIES, PRINTED)


def binomial_weight(m1, m2, k, rule=SERIES):
    """Combinatorial factor (before the square root) of the k-th exchange term."""
    if rule == SERIES:
        return math.comb(m1, k) * math.comb(m2 + k, m2)
    if rule == PRINTED:
        first = 1 if m1 == 0 else math.comb(m1 + k - 1, m1 - 1)
        return first * math.comb(m2 + k, m2)
    raise ValueError('Unknown binomial rule: {}'.format(rule))


class NumericBackend:
    exact = False
    name = 'numeric'

    def __init__(self, q):
        q = NumericScalar(q)
        if q <= 0 or q == 1:
            raise ScalarError('q must be positive and different from 1, got {}'.format(q))
        self.q = q

    def __eq__(self, other):
        return isinstance(other, NumericBackend) and self.q == other.q

    def __hash__(self):
        return hash((self.name, self.q))

    def __repr__(self):
        return 'NumericBackend(q={})'.format(self.q)

    def inverted(self):
        return NumericBackend(1 / self.q)

    def zero(self):
        return NumericScalar(0)

    def one(self):
        return NumericScalar(1)

    def scalar(self, value):
        return NumericScalar(value)

    def power(self, exponent, inverse=False):
        q = 1 / self.q if inverse else self.q
        return q ** exponent

    def q_number(self, gamma):
        return q_number(gamma, self.q)

    def sqrt_q_number(self, gamma):
        value = self.q_number(gamma)
        if value <= 0:
            raise ScalarError('[{}]_q = {} is not positive; square roots of the irreps are undefined'.format(
                gamma, value))
        return value.sqrt()

    def raise_coefficient(self, label, m):
        return self.sqrt_q_number(label.gamma) * NumericScalar(m + 1).sqrt()

    def lower_coefficient(self, label, m):
        if m == 0:
            return self.zero()
        return self.sqrt_q_number(label.gamma) * NumericScalar(m).sqrt()

    def epsilon_coefficient(self, label, m):
        return NumericScalar(m) + label.c

    def half_gamma(self, label, sign):
        return self.q ** (sign * NumericScalar(label.gamma) / 2)

    def coproduct_weight(self, slot_labels, j):
        """q^(-Gamma/2) on slots before j and q^(+Gamma/2) on slots after j (0-based)."""
        weight = self.one()
        for slot, label in enumerate(slot_labels):
            if slot < j:
                weight = weight * self.half_gamma(label, -1)
            elif slot > j:
                weight = weight * self.half_gamma(label, +1)
        return weight

    def ladder_pair(self, left, right):
        """(A, B) with O = A alpha+ (x) 1 - B 1 (x) alpha+ on slots carrying ``left``, ``right``."""
        ratio = self.sqrt_q_number(right.gamma) / self.sqrt_q_number(left.gamma)
        return self.half_gamma(left, -1) * ratio, self.half_gamma(right, +1) / ratio

    def r_matrix_terms(self, first, second, m1, m2, inverse=False, binomial=SERIES):
        """
        R h^(1)_m1 (x) h^(2)_m2 = sum_k coeff_k h^(1)_(m1-k) (x) h^(2)_(m2+k), closed form.

        With ``inverse`` every q is replaced by 1/q.
        """
        q = 1 / self.q if inverse else self.q
        prefactor = q ** -((m1 + NumericScalar(first.c)) * second.gamma + (m2 + NumericScalar(second.c)) * first.gamma)
        roots = (q_number(first.gamma, q) * q_number(second.gamma, q))
        if roots <= 0:
            raise ScalarError('Non-positive q-numbers for labels {} and {}'.format(first, second))
        t = (q - 1 / q) * q ** ((NumericScalar(second.gamma) - first.gamma) / 2) * roots.sqrt()
        return [
            (k, prefactor * t ** k * NumericScalar(binomial_weight(m1, m2, k, binomial)).sqrt())
            for k in range(m1 + 1)
        ]

    def vacuum_phase(self, first, second, inverse=False):
        sign = 1 if inverse else -1
        return self.q ** (sign * (NumericScalar(first.c) * second.gamma + NumericScalar(second.c) * first.gamma))

    def conjugate_ladder(self, after, i, k, inverse=False):
        """
        sigma_i O_k sigma_i^-1 as {index: coefficient}; ``after`` holds the slot labels
        once sigma_i has acted, indices are 1-based.
        """
        q = 1 / self.q if inverse else self.q

        def gamma(slot):
            return NumericScalar(after[slot - 1].gamma)

        def root(slot):
            return self.sqrt_q_number(after[slot - 1].gamma)

        if k == i:
            return {i: -(q ** -(gamma(i) + gamma(i + 1)))}
        if k == i + 1:
            return {
                i: q ** -gamma(i + 1) * root(i + 2) / root(i + 1),
                i + 1: root(i) / root(i + 1),
            }
        if k == i - 1:
            return {
                i - 1: root(i + 1) / root(i),
                i: q ** -gamma(i) * root(i - 1) / root(i),
            }
        return {k: self.one()}

    def global_phase(self, label, inverse=False):
        sign = -1 if inverse else 1
        return GlobalPhase(sign, self.vacuum_phase(label, label, inverse))


class LaurentBackend:
    exact = True
    name = 'laurent'

    def __eq__(self, other):
        return isinstance(other, LaurentBackend)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return 'LaurentBackend()'

    def zero(self):
        return LaurentScalar.zero()

    def one(self):
        return LaurentScalar.one()

    def scalar(self, value):
        if isinstance(value, LaurentScalar):
            return value
        return LaurentScalar.constant(value)

    def variable(self, inverse=False):
        return LaurentScalar.monomial(-1 if inverse else 1)

    def _numeric_only(self, what):
        raise BackendError('{} has no Laurent-polynomial form; use the numeric backend'.format(what))

    def power(self, exponent, inverse=False):
        self._numeric_only('q^e')

    def q_number(self, gamma):
        self._numeric_only('[gamma]_q')

    def raise_coefficient(self, label, m):
        return self.one()

    def lower_coefficient(self, label, m):
        return LaurentScalar.constant(m)

    def epsilon_coefficient(self, label, m):
        self._numeric_only('epsilon')

    def half_gamma(self, label, sign):
        self._numeric_only('q^(+-Gamma/2)')

    def coproduct_weight(self, slot_labels, j):
        return LaurentScalar.monomial(j + 1)

    def ladder_pair(self, left, right):
        return self.variable(), self.one()

    def r_matrix_terms(self, first, second, m1, m2, inverse=False, binomial=SERIES):
        if binomial != SERIES:
            raise BackendError('The printed binomial rule has no Laurent form; use the numeric backend')
        x = self.variable(inverse)
        exchange = x ** -1 - x
        diagonal = x ** (m1 + m2)
        return [(k, diagonal * math.comb(m1, k) * exchange ** k) for k in range(m1 + 1)]

    def vacuum_phase(self, first, second, inverse=False):
        return self.one()

    def conjugate_ladder(self, after, i, k, inverse=False):
        x = self.variable(inverse)
        if k == i:
            return {i: -(x ** 2)}
        if k == i + 1:
            return {i: x, i + 1: self.one()}
        if k == i - 1:
            return {i - 1: self.one(), i: x}
        return {k: self.one()}

    def global_phase(self, label, inverse=False):
        return GlobalPhase(-1 if inverse else 1)


def get_backend(name, q=None):
    if name == NumericBackend.name:
        if q is None:
            raise BackendError('The numeric backend needs a value of q')
        return NumericBackend(q)
    if name == LaurentBackend.name:
        return LaurentBackend()
    raise BackendError('Unknown backend: {}'.format(name))
