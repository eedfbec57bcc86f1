"""
Braid generators on tensor coordinates.

sigma_i = P R on slots (i, i+1). ``apply_sigma_direct`` uses the closed-form
action of P R on h_m (x) h_m'; ``apply_sigma_series`` expands the exponential
of the universal R-matrix term by term and serves as its oracle.
"""
import logging
import math
from dataclasses import dataclass

from braidosc.algebra import conf
from braidosc.algebra.backends import PRINTED, SERIES
from braidosc.algebra.exceptions import BackendError, InvalidParameter, InvariantViolation
from braidosc.algebra.oscillator import (
    Generator, TensorState, WeightVector, apply_generator, casimir_action, total_gamma,
)
from braidosc.algebra.scalars import NumericScalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BraidGenerator:
    i: int
    inverse: bool = False

    def __post_init__(self):
        if self.i < 1:
            raise InvalidParameter('Generator index must be at least 1, got {}'.format(self.i))

    @classmethod
    def from_letter(cls, letter):
        if letter == 0:
            raise InvalidParameter('0 is not a braid generator')
        return cls(abs(letter), letter < 0)

    def validate(self, n):
        if not 1 <= self.i <= n - 1:
            raise InvalidParameter('Generator sigma_{} does not exist in B_{}'.format(self.i, n))
        return self

    def inverted(self):
        return BraidGenerator(self.i, not self.inverse)

    @property
    def letter(self):
        return -self.i if self.inverse else self.i

    def __str__(self):
        return 's{}{}'.format(self.i, '^-1' if self.inverse else '')


def swap(sequence, a, b):
    sequence = list(sequence)
    sequence[a], sequence[b] = sequence[b], sequence[a]
    return tuple(sequence)


def apply_sigma_direct(generator, v, binomial=SERIES):
    """sigma_i (or its inverse) on every term of ``v`` via the closed-form P R action."""
    context = v.context
    generator.validate(context.n)
    backend = context.backend
    a, b = generator.i - 1, generator.i
    result = []
    for state, coefficient in v:
        labels = context.slot_labels(state.assignment)
        assignment = swap(state.assignment, a, b)
        m_a, m_b = state.occupations[a], state.occupations[b]
        if not generator.inverse:
            # R on (a: m_a, b: m_b), then the swap
            for k, factor in backend.r_matrix_terms(labels[a], labels[b], m_a, m_b, binomial=binomial):
                occupations = list(state.occupations)
                occupations[a], occupations[b] = m_b + k, m_a - k
                result.append((TensorState(assignment, tuple(occupations)), coefficient * factor))
        else:
            # the swap, then R at 1/q on (b: m_b, a: m_a)
            for k, factor in backend.r_matrix_terms(labels[b], labels[a], m_b, m_a, inverse=True,
                                                    binomial=binomial):
                occupations = list(state.occupations)
                occupations[a], occupations[b] = m_b - k, m_a + k
                result.append((TensorState(assignment, tuple(occupations)), coefficient * factor))
    return WeightVector(context, result)


def _series_r(v, first, second, q):
    """exp[(q - 1/q)(K (x) K^-1) alpha- (x) alpha+] then q^-(eps (x) Gamma + Gamma (x) eps) on slots first, second."""
    context = v.context
    result = WeightVector(context)
    term = v
    k = 0
    while term:
        for state, coefficient in term:
            labels = context.slot_labels(state.assignment)
            ratio = q ** ((NumericScalar(labels[first].gamma) - labels[second].gamma) / 2)
            weight = (q - 1 / q) ** k * ratio ** k / math.factorial(k)
            exponent = (state.occupations[first] + NumericScalar(labels[first].c)) * labels[second].gamma + \
                (state.occupations[second] + NumericScalar(labels[second].c)) * labels[first].gamma
            result = result + WeightVector(context, {state: coefficient * weight * q ** -exponent})
        term = apply_generator(Generator.RAISE, second + 1, apply_generator(Generator.LOWER, first + 1, term))
        k += 1
    return result


def _permute(v, a, b):
    return WeightVector(v.context, [
        (TensorState(swap(state.assignment, a, b), swap(state.occupations, a, b)), coefficient)
        for state, coefficient in v
    ])


def apply_sigma_series(generator, v):
    """sigma_i from the series expansion of the universal R-matrix; numeric only."""
    context = v.context
    generator.validate(context.n)
    if context.backend.exact:
        raise BackendError('The series oracle runs on the numeric backend only')
    a, b = generator.i - 1, generator.i
    q = context.backend.q
    if not generator.inverse:
        return _permute(_series_r(v, a, b, q), a, b)
    return _series_r(_permute(v, a, b), a, b, 1 / q)


def _raise_hat(slot, v):
    """[Gamma]_q^(-1/2) alpha+ on ``slot``."""
    context = v.context
    result = []
    for state, coefficient in apply_generator(Generator.RAISE, slot, v):
        label = context.slot_labels(state.assignment)[slot - 1]
        result.append((state, coefficient / context.backend.sqrt_q_number(label.gamma)))
    return WeightVector(context, result)


def conjugation_residual(i, v):
    """
    Residual of the single-slot exchange rules, with gamma_i, gamma_(i+1) the labels
    sitting in slots i, i+1 of each term before sigma_i acts:

        sigma_i a_(i+1) = q^-gamma_i a_i sigma_i
        sigma_i a_i = (q^-gamma_(i+1) a_(i+1)
                       + (q - 1/q) q^-(gamma_i + gamma_(i+1))/2 [gamma_i]^(1/2) [gamma_(i+1)]^(1/2) a_i) sigma_i

    where a = [Gamma]_q^(-1/2) alpha+.
    """
    context = v.context
    backend = context.backend
    if backend.exact:
        raise BackendError('The exchange rules are checked numerically only')
    generator = BraidGenerator(i).validate(context.n)
    q = backend.q
    worst = 0.0
    for state, coefficient in v:
        single = WeightVector(context, {state: coefficient})
        labels = context.slot_labels(state.assignment)
        g_i, g_j = NumericScalar(labels[i - 1].gamma), NumericScalar(labels[i].gamma)
        image = apply_sigma_direct(generator, single)

        lhs = apply_sigma_direct(generator, _raise_hat(i + 1, single))
        rhs = _raise_hat(i, image).scale(q ** -g_i)
        worst = max(worst, (lhs - rhs).residual())

        mixing = (q - 1 / q) * q ** (-(g_i + g_j) / 2) * \
            backend.sqrt_q_number(labels[i - 1].gamma) * backend.sqrt_q_number(labels[i].gamma)
        lhs = apply_sigma_direct(generator, _raise_hat(i, single))
        rhs = _raise_hat(i + 1, image).scale(q ** -g_j) + _raise_hat(i, image).scale(mixing)
        worst = max(worst, (lhs - rhs).residual())
    return worst


def casimir_commutation_residual(generator, states, context):
    """max ||sigma C v - C sigma v|| over tensor basis ``states``."""
    if context.backend.exact:
        raise BackendError('The Casimir is numeric only')
    worst = 0.0
    for state in states:
        v = context.basis_vector(state)
        difference = apply_sigma_direct(generator, casimir_action(v)) - casimir_action(apply_sigma_direct(generator, v))
        worst = max(worst, difference.residual())
    return worst / max(1.0, abs(float(context.backend.q_number(total_gamma(context)))))


def compare_binomial_rules(n, N, labels, backend=None):
    """
    Direct-route matrices built with the series binomial factor against the
    printed one: the first differing element and the braid-relation residual of each.

    A rule whose images leave the O-monomial span is reported with that span
    error and compared through its least-squares projection.
    """
    from .matrices import build_matrix, check_braid_relations, first_difference

    built, span_errors = {}, {}
    for rule in (SERIES, PRINTED):
        try:
            built[rule] = build_matrix(n, N, labels, route='direct', backend=backend, binomial=rule)
        except InvariantViolation as error:
            span_errors[rule] = str(error)
            with conf.override_tolerances(span=float('inf')):
                built[rule] = build_matrix(n, N, labels, route='direct', backend=backend, binomial=rule)
    difference = None
    for left, right in zip(built[SERIES], built[PRINTED]):
        difference = first_difference(left, right)
        if difference is not None:
            break
    report = {
        'n': n,
        'N': N,
        'first_difference': difference,
        'braid_residual': {rule: check_braid_relations(matrices) for rule, matrices in built.items()},
        'span_errors': span_errors,
    }
    if difference is not None:
        logger.warning('binomial rules differ at %s[%d][%d]: %s vs %s', difference['generator'],
                       difference['row'], difference['column'], difference['left'], difference['right'])
    return report
