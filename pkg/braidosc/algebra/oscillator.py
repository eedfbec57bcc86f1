"""
The q-oscillator algebra on tensor products of its irreducible representations.

A representation H^(gamma, c) has the occupation basis h_m, m >= 0:

    alpha+ h_m = [gamma]^(1/2) (m+1)^(1/2) h_(m+1)
    alpha- h_m = [gamma]^(1/2) m^(1/2) h_(m-1)
    epsilon h_m = (m + c) h_m
    q^(+-Gamma/2) h_m = q^(+-gamma/2) h_m

Tensor states carry their sector explicitly: ``assignment[slot]`` is the id
of the label sitting in that slot, ids being assigned by first appearance in
the context's label list. Slots, ladder indices and generator indices are
1-based in every public function.
"""
import enum
import itertools
import logging
from collections import namedtuple
from dataclasses import dataclass

from django.core.exceptions import ValidationError

from . import linalg
from .exceptions import BackendError, ContextMismatch, InvalidParameter, InvariantViolation
from .scalars import LaurentScalar, NumericScalar, scalar_from_json, scalar_to_json
from .validators import finite_validator, gamma_validator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RepLabel:
    gamma: float
    c: float

    def __post_init__(self):
        try:
            gamma_validator(self.gamma)
            finite_validator(self.c)
        except ValidationError as error:
            raise InvalidParameter('Invalid representation label ({}, {}): {}'.format(
                self.gamma, self.c, ' '.join(error.messages)))

    def to_json(self):
        return {'gamma': self.gamma, 'c': self.c}

    def __str__(self):
        return '({:g}, {:g})'.format(self.gamma, self.c)


class Generator(enum.Enum):
    RAISE = 'alpha+'
    LOWER = 'alpha-'
    EPSILON = 'epsilon'
    K_PLUS = 'q^(Gamma/2)'
    K_MINUS = 'q^(-Gamma/2)'


ADJOINTS = {
    Generator.RAISE: Generator.LOWER,
    Generator.LOWER: Generator.RAISE,
    Generator.EPSILON: Generator.EPSILON,
    Generator.K_PLUS: Generator.K_PLUS,
    Generator.K_MINUS: Generator.K_MINUS,
}


class TensorState(namedtuple('TensorState', ['assignment', 'occupations'])):
    __slots__ = ()

    @property
    def total(self):
        return sum(self.occupations)

    def to_json(self):
        return {'assignment': list(self.assignment), 'occ': list(self.occupations)}


def label_ids(labels):
    """Distinct labels in order of first appearance, and the id of each input label."""
    distinct = []
    for label in labels:
        if label not in distinct:
            distinct.append(label)
    return tuple(distinct), tuple(distinct.index(label) for label in labels)


class Context:
    """Labels of the tensor factors plus the coefficient backend."""

    def __init__(self, labels, backend):
        labels = tuple(label if isinstance(label, RepLabel) else RepLabel(*label) for label in labels)
        if not labels:
            raise InvalidParameter('A context needs at least one representation label')
        self.labels = labels
        self.distinct, self.initial_sector = label_ids(labels)
        self.backend = backend
        if backend.exact and len(self.distinct) > 1:
            raise BackendError('The Laurent backend requires homogeneous labels, got {} distinct'.format(
                len(self.distinct)))

    @property
    def n(self):
        return len(self.labels)

    @property
    def homogeneous(self):
        return len(self.distinct) == 1

    @property
    def q(self):
        return getattr(self.backend, 'q', None)

    def _key(self):
        return self.distinct, tuple(sorted(self.initial_sector)), self.backend

    def __eq__(self, other):
        return isinstance(other, Context) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def slot_labels(self, assignment):
        return tuple(self.distinct[index] for index in assignment)

    def sectors(self):
        """All distinct arrangements of the labels, in ascending id-tuple order."""
        return sorted(set(itertools.permutations(self.initial_sector)))

    def vacuum(self, sector=None):
        sector = self.initial_sector if sector is None else tuple(sector)
        return WeightVector(self, {TensorState(sector, (0,) * self.n): self.backend.one()})

    def basis_vector(self, state):
        return WeightVector(self, {TensorState(tuple(state[0]), tuple(state[1])): self.backend.one()})

    def zero_vector(self):
        return WeightVector(self)

    def to_json(self):
        return {
            'labels': [label.to_json() for label in self.labels],
            'distinct': [label.to_json() for label in self.distinct],
            'backend': self.backend.name,
            'q': None if self.q is None else self.q.to_json(),
        }

    def __repr__(self):
        return 'Context({}, {!r})'.format(', '.join(str(label) for label in self.labels), self.backend)


class WeightVector:
    """Finite linear combination of TensorStates of one total occupation."""
    __slots__ = ('context', '_terms')

    def __init__(self, context, terms=None):
        self.context = context
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        accumulated = {}
        for state, coefficient in items:
            if not isinstance(state, TensorState):
                state = TensorState(tuple(state[0]), tuple(state[1]))
            if state in accumulated:
                accumulated[state] = accumulated[state] + coefficient
            else:
                accumulated[state] = coefficient
        self._terms = {state: coefficient for state, coefficient in accumulated.items() if coefficient}
        self._validate()

    def _validate(self):
        totals = set()
        labels = sorted(self.context.initial_sector)
        for state in self._terms:
            if len(state.assignment) != self.context.n or len(state.occupations) != self.context.n:
                raise InvariantViolation('State {} does not have {} slots'.format(state, self.context.n))
            if sorted(state.assignment) != labels:
                raise InvariantViolation('State {} does not carry the context labels'.format(state))
            if min(state.occupations) < 0:
                raise InvariantViolation('Negative occupation in {}'.format(state))
            totals.add(state.total)
        if len(totals) > 1:
            raise InvariantViolation('Mixed total occupations {} in one weight vector'.format(sorted(totals)))

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def states(self):
        return sorted(self._terms)

    def coefficient(self, state):
        return self._terms.get(state, self.context.backend.zero())

    @property
    def total_occupation(self):
        for state in self._terms:
            return state.total
        return None

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def _check(self, other):
        if not isinstance(other, WeightVector):
            return False
        if other.context != self.context:
            raise ContextMismatch('Weight vectors over different contexts: {!r} and {!r}'.format(
                self.context, other.context))
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return WeightVector(self.context, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return WeightVector(self.context, {s: -c for s, c in self._terms.items()})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def scale(self, factor):
        return WeightVector(self.context, {s: c * factor for s, c in self._terms.items()})

    def __mul__(self, factor):
        if isinstance(factor, WeightVector):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    __hash__ = None

    def residual(self):
        """Largest coefficient magnitude; exact vectors report 0 or 1."""
        if self.context.backend.exact:
            return 0.0 if not self._terms else 1.0
        return float(max((abs(c) for c in self._terms.values()), default=NumericScalar(0)))

    def to_json(self):
        return {
            'context': self.context.to_json(),
            'terms': [
                dict(state.to_json(), coeff=scalar_to_json(self._terms[state]))
                for state in self.states()
            ],
        }

    @classmethod
    def from_json(cls, context, data):
        return cls(context, [
            (TensorState(tuple(term['assignment']), tuple(term['occ'])), scalar_from_json(term['coeff']))
            for term in data['terms']
        ])

    def __repr__(self):
        return 'WeightVector({})'.format(', '.join(
            '{}*{}{}'.format(self._terms[s], list(s.assignment), list(s.occupations)) for s in self.states()))


def _single_slot(generator, label, m, backend):
    """[(new occupation, coefficient)] for ``generator`` on h_m of one irrep."""
    if generator is Generator.RAISE:
        return [(m + 1, backend.raise_coefficient(label, m))]
    if generator is Generator.LOWER:
        return [] if m == 0 else [(m - 1, backend.lower_coefficient(label, m))]
    if generator is Generator.EPSILON:
        return [(m, backend.epsilon_coefficient(label, m))]
    if generator is Generator.K_PLUS:
        return [(m, backend.half_gamma(label, +1))]
    if generator is Generator.K_MINUS:
        return [(m, backend.half_gamma(label, -1))]
    raise InvalidParameter('Unknown generator: {!r}'.format(generator))


def _replace(occupations, slot, value):
    occupations = list(occupations)
    occupations[slot] = value
    return tuple(occupations)


def _check_slot(slot, n, upper=None):
    upper = n if upper is None else upper
    if not 1 <= slot <= upper:
        raise InvalidParameter('Index {} outside 1..{}'.format(slot, upper))


def apply_generator(generator, slot, v):
    """Single-slot action of ``generator`` on slot ``slot``."""
    context = v.context
    _check_slot(slot, context.n)
    index = slot - 1
    result = []
    for state, coefficient in v:
        label = context.slot_labels(state.assignment)[index]
        for m, factor in _single_slot(generator, label, state.occupations[index], context.backend):
            result.append((TensorState(state.assignment, _replace(state.occupations, index, m)), coefficient * factor))
    return WeightVector(context, result)


def coproduct_action(generator, v):
    """Action of the iterated coproduct Delta^(n) of ``generator``."""
    context = v.context
    backend = context.backend
    result = []
    for state, coefficient in v:
        labels = context.slot_labels(state.assignment)
        if generator in (Generator.K_PLUS, Generator.K_MINUS):
            sign = 1 if generator is Generator.K_PLUS else -1
            factor = backend.one()
            for label in labels:
                factor = factor * backend.half_gamma(label, sign)
            result.append((state, coefficient * factor))
            continue
        for j, label in enumerate(labels):
            weight = backend.one() if generator is Generator.EPSILON else backend.coproduct_weight(labels, j)
            for m, factor in _single_slot(generator, label, state.occupations[j], backend):
                new_state = TensorState(state.assignment, _replace(state.occupations, j, m))
                result.append((new_state, coefficient * weight * factor))
    return WeightVector(context, result)


def total_gamma(context):
    return sum(label.gamma for label in context.labels)


def total_c(context):
    return sum(label.c for label in context.labels)


def casimir_action(v):
    """Delta^(n) C_q = [Delta Gamma]_q Delta epsilon - Delta alpha+ Delta alpha-."""
    backend = v.context.backend
    if backend.exact:
        raise BackendError('The Casimir needs epsilon, which has no Laurent form')
    gamma = backend.q_number(total_gamma(v.context))
    return coproduct_action(Generator.EPSILON, v).scale(gamma) - \
        coproduct_action(Generator.RAISE, coproduct_action(Generator.LOWER, v))


def apply_O(k, v):
    """Ladder operator O_k on slots (k, k+1)."""
    context = v.context
    _check_slot(k, context.n, context.n - 1)
    backend = context.backend
    a, b = k - 1, k
    result = []
    for state, coefficient in v:
        labels = context.slot_labels(state.assignment)
        left, right = backend.ladder_pair(labels[a], labels[b])
        m_a, m_b = state.occupations[a], state.occupations[b]
        result.append((
            TensorState(state.assignment, _replace(state.occupations, a, m_a + 1)),
            coefficient * left * backend.raise_coefficient(labels[a], m_a),
        ))
        result.append((
            TensorState(state.assignment, _replace(state.occupations, b, m_b + 1)),
            -(coefficient * right * backend.raise_coefficient(labels[b], m_b)),
        ))
    return WeightVector(context, result)


def apply_O_monomial(exponents, v):
    """O_1^j1 ... O_(n-1)^j(n-1) v."""
    for k in reversed(range(1, len(exponents) + 1)):
        for _ in range(exponents[k - 1]):
            v = apply_O(k, v)
    return v


def inner_product(u, v):
    """Bilinear pairing in which distinct TensorStates are orthonormal."""
    if u.context != v.context:
        raise ContextMismatch('Inner product of vectors over different contexts')
    total = u.context.backend.zero()
    small, large = (u, v) if len(u) <= len(v) else (v, u)
    for state, coefficient in small:
        if state in large._terms:
            total = total + coefficient * large._terms[state]
    return total


def norm(v):
    return inner_product(v, v).sqrt()


def coordinates(vectors, states):
    """Column-per-vector coordinate matrix, rows indexed by ``states``."""
    return [[vector.coefficient(state) for vector in vectors] for state in states]


def from_coordinates(context, states, column):
    return WeightVector(context, [(state, NumericScalar(value)) for state, value in zip(states, column)])


def commutator(op_a, op_b, v):
    return op_a(op_b(v)) - op_b(op_a(v))


def _orthonormal_blocks(vectors):
    """Orthonormalize within each total occupation; different occupations are orthogonal."""
    context = vectors[0].context
    by_total = {}
    for vector in vectors:
        if vector:
            by_total.setdefault(vector.total_occupation, []).append(vector)
    basis = []
    for total in sorted(by_total):
        group = by_total[total]
        states = sorted({state for vector in group for state in vector.states()})
        columns = [[vector.coefficient(state) for state in states] for vector in group]
        if linalg.columns_rank(columns) < len(columns):
            raise InvariantViolation('Subspace vectors of occupation {} are linearly dependent'.format(total))
        for column in linalg.orthonormal_columns(columns):
            basis.append(from_coordinates(context, states, column))
    return basis


def star_adjoint_residual(generator, subspace):
    """max |<Q_r, g Q_s> - <Q_s, g* Q_r>| over an orthonormalized copy Q of ``subspace``."""
    if not subspace:
        return 0.0
    if subspace[0].context.backend.exact:
        raise BackendError('The star structure is checked numerically only')
    basis = _orthonormal_blocks(list(subspace))
    adjoint = ADJOINTS[generator]
    forward = [coproduct_action(generator, vector) for vector in basis]
    backward = [coproduct_action(adjoint, vector) for vector in basis]
    worst = 0.0
    for r, row_vector in enumerate(basis):
        for s, column_vector in enumerate(basis):
            difference = inner_product(row_vector, forward[s]) - inner_product(column_vector, backward[r])
            worst = max(worst, float(abs(difference)))
    return worst


def star_adjoint_check(generator, subspace, tolerance=1e-10):
    """True when the matrix of ``generator`` on the subspace is the transpose of its adjoint's."""
    worst = star_adjoint_residual(generator, subspace)
    logger.debug('star check for %s: residual %.3e', generator.value, worst)
    return worst <= tolerance


# Hopf structure on generators. None stands for the unit.

COUNIT = {
    Generator.RAISE: 0,
    Generator.LOWER: 0,
    Generator.EPSILON: 0,
    Generator.K_PLUS: 1,
    Generator.K_MINUS: 1,
}

ANTIPODE = {
    Generator.RAISE: (-1, Generator.RAISE),
    Generator.LOWER: (-1, Generator.LOWER),
    Generator.EPSILON: (-1, Generator.EPSILON),
    Generator.K_PLUS: (1, Generator.K_MINUS),
    Generator.K_MINUS: (1, Generator.K_PLUS),
}

COPRODUCT = {
    Generator.RAISE: ((Generator.RAISE, Generator.K_PLUS), (Generator.K_MINUS, Generator.RAISE)),
    Generator.LOWER: ((Generator.LOWER, Generator.K_PLUS), (Generator.K_MINUS, Generator.LOWER)),
    Generator.EPSILON: ((Generator.EPSILON, None), (None, Generator.EPSILON)),
    Generator.K_PLUS: ((Generator.K_PLUS, Generator.K_PLUS),),
    Generator.K_MINUS: ((Generator.K_MINUS, Generator.K_MINUS),),
}


def counit(generator):
    return COUNIT[generator]


def antipode(generator):
    """S(g) as (sign, generator)."""
    return ANTIPODE[generator]


def _act(generator, v):
    if generator is None:
        return v
    return apply_generator(generator, 1, v)


def _act_antipode(generator, v):
    if generator is None:
        return v
    sign, image = antipode(generator)
    return _act(image, v).scale(sign)


def _single_irrep_states(label, backend, m_max):
    context = Context([label], backend)
    return context, [context.basis_vector(((0,), (m,))) for m in range(m_max + 1)]


def hopf_axiom_residuals(label, backend, m_max=4):
    """
    Residuals of m (S (x) id) Delta = eta epsilon and (epsilon (x) id) Delta = id
    on the generators, evaluated on h_0..h_m_max of one irrep.
    """
    context, states = _single_irrep_states(label, backend, m_max)
    antipode_worst, counit_worst = 0.0, 0.0
    for generator, terms in COPRODUCT.items():
        for v in states:
            via_antipode = context.zero_vector()
            via_counit = context.zero_vector()
            for left, right in terms:
                via_antipode = via_antipode + _act_antipode(left, _act(right, v))
                weight = 1 if left is None else counit(left)
                if weight:
                    via_counit = via_counit + _act(right, v).scale(weight)
            antipode_worst = max(antipode_worst, (via_antipode - v.scale(counit(generator))).residual())
            counit_worst = max(counit_worst, (via_counit - _act(generator, v)).residual())
    return {'antipode': antipode_worst, 'counit': counit_worst}


def antipode_commutator_residual(label, backend, m_max=4):
    """
    S is an anti-homomorphism: S(b) S(a) - S(a) S(b) = S([a, b]) for the defining
    commutators [epsilon, alpha+-] = +-alpha+- and [alpha-, alpha+] = [Gamma]_q.
    """
    context, states = _single_irrep_states(label, backend, m_max)
    gamma = backend.q_number(label.gamma)
    worst = 0.0
    for v in states:
        for sign, raising in ((1, Generator.RAISE), (-1, Generator.LOWER)):
            lhs = _act_antipode(raising, _act_antipode(Generator.EPSILON, v)) - \
                _act_antipode(Generator.EPSILON, _act_antipode(raising, v))
            worst = max(worst, (lhs - _act_antipode(raising, v).scale(sign)).residual())
        lhs = _act_antipode(Generator.RAISE, _act_antipode(Generator.LOWER, v)) - \
            _act_antipode(Generator.LOWER, _act_antipode(Generator.RAISE, v))
        # S([Gamma]_q) = [-Gamma]_q = -[Gamma]_q
        worst = max(worst, (lhs + v.scale(gamma)).residual())
    return worst


__all__ = [
    'RepLabel', 'Generator', 'TensorState', 'Context', 'WeightVector', 'LaurentScalar',
    'apply_generator', 'coproduct_action', 'casimir_action', 'apply_O', 'apply_O_monomial',
    'inner_product', 'star_adjoint_check', 'counit', 'antipode',
]
