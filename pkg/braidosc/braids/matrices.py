"""
Matrices of the braid generators on lowest-weight spaces.

Three routes produce the same matrices on the O-monomial basis:

* ``direct``: sigma_i on tensor coordinates, re-expressed in the monomial basis;
* ``rewrite``: sigma_i pushed through the O-monomials;
* ``closed_form``: the Burau (N=1), LKB (N=2) and one-distinguished-label N=1 families.
"""
import functools
import logging
from dataclasses import dataclass, field

import sympy

from braidosc.algebra import conf, linalg
from braidosc.algebra.backends import SERIES
from braidosc.algebra.exceptions import BackendError, InvalidParameter, InvariantViolation, RouteDisagreement
from braidosc.algebra.parallel import parallel_map
from braidosc.algebra.scalars import GlobalPhase, LaurentScalar, NumericScalar, scalar_from_json, scalar_to_json
from braidosc.spaces.weightspace import ALL_SECTORS, as_context, lowest_weight_monomials

from . import closed_forms
from .generators import BraidGenerator, apply_sigma_direct, apply_sigma_series
from .rewriting import OMonomial, rewrite_sigma
from .words import deviation, identity_like, matmul

logger = logging.getLogger(__name__)

DIRECT = 'direct'
REWRITE = 'rewrite'
CLOSED_FORM = 'closed_form'
SERIES_ROUTE = 'series'
ROUTES = (DIRECT, REWRITE, CLOSED_FORM, SERIES_ROUTE)


@dataclass
class BraidMatrix:
    generator: BraidGenerator
    entries: list
    basis: dict
    phase: GlobalPhase = field(default_factory=GlobalPhase)
    route: str = REWRITE
    phase_applied: bool = False

    @property
    def dimension(self):
        return len(self.entries)

    @property
    def exact(self):
        return bool(self.entries) and isinstance(self.entries[0][0], LaurentScalar)

    def __matmul__(self, other):
        return matmul(self.entries, other.entries)

    def evaluate(self, gamma, q):
        """Numeric entries of an exact matrix at x = q^-gamma."""
        if not self.exact:
            return self.entries
        x = NumericScalar(q) ** -NumericScalar(gamma)
        return [[entry.evaluate(x) for entry in row] for row in self.entries]

    def to_json(self):
        return {
            'generator': self.generator.letter,
            'entries': [[scalar_to_json(value) for value in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data, basis=None, phase=None, route=REWRITE):
        return cls(
            BraidGenerator.from_letter(data['generator']),
            [[scalar_from_json(value) for value in row] for row in data['entries']],
            basis or {},
            phase or GlobalPhase(),
            route,
        )


def _phase(context, inverse):
    if context.homogeneous:
        return context.backend.global_phase(context.labels[0], inverse)
    return GlobalPhase()


def _renormalize(entries, phase, context, apply_phase):
    """Divide the homogeneous vacuum phase out of numeric entries."""
    if context.backend.exact:
        if apply_phase:
            raise BackendError('The Laurent backend tracks the phase exponent only; use the numeric backend')
        return entries
    if apply_phase or phase.value is None or phase.is_trivial:
        return entries
    return [[value / phase.value for value in row] for row in entries]


def _monomial_basis(context, N):
    return lowest_weight_monomials(context.n, N, context, sector=ALL_SECTORS)


def _solve_exact(basis_columns, targets):
    symbol = sympy.Symbol('x')
    b = sympy.Matrix([[entry.to_sympy(symbol) for entry in column] for column in basis_columns]).T
    t = sympy.Matrix([[entry.to_sympy(symbol) for entry in column] for column in targets]).T
    gram = b.T * b
    if sympy.cancel(gram.det()) == 0:
        raise InvariantViolation('Singular Gram matrix in the monomial basis')
    solution = gram.LUsolve(b.T * t).applyfunc(sympy.cancel)
    residual = (b * solution - t).applyfunc(sympy.cancel)
    if any(entry != 0 for entry in residual):
        raise InvariantViolation('sigma maps out of the span of the O-monomials')
    return [[LaurentScalar.from_sympy(solution[r, c], symbol) for c in range(solution.cols)]
            for r in range(solution.rows)]


def _direct_entries(generator, basis, apply_sigma):
    context = basis.context
    images = parallel_map(lambda vector: apply_sigma(generator, vector), basis.vectors)
    states = sorted({state for vector in list(basis.vectors) + images for state in vector.states()})
    basis_columns = [[vector.coefficient(state) for state in states] for vector in basis.vectors]
    targets = [[image.coefficient(state) for state in states] for image in images]
    if context.backend.exact:
        return _solve_exact(basis_columns, targets)
    coordinates, residual = linalg.solve_gram(basis_columns, targets)
    if residual > conf.tolerance('span'):
        raise InvariantViolation('sigma maps out of the span of the O-monomials (residual {:.3e})'.format(
            float(residual)), residual=float(residual))
    # coordinates come back one list per target, i.e. per column
    return [[NumericScalar(coordinates[c][r]) for c in range(len(targets))] for r in range(len(basis))]


def _rewrite_entries(generator, basis):
    context = basis.context
    position = {key: index for index, key in enumerate(basis.monomial_index)}
    zero = context.backend.zero()
    entries = [[zero] * len(basis) for _ in range(len(basis))]
    for column, (exponents, sector) in enumerate(basis.monomial_index):
        for term in rewrite_sigma(generator, OMonomial(exponents, context.backend.one(), sector), context):
            entries[position[term.key]][column] = entries[position[term.key]][column] + term.coefficient
    return entries


def _closed_form_entries(generator, basis, N):
    context = basis.context
    n = context.n
    if context.homogeneous and N in (1, 2):
        family = closed_forms.burau_matrix if N == 1 else closed_forms.lkb_matrix
        entries = family(n, generator.i)
        if generator.inverse:
            entries = closed_forms.invert_variable(entries)
        if context.backend.exact:
            return entries
        x = context.q ** -NumericScalar(context.labels[0].gamma)
        return closed_forms.evaluate_matrix(entries, x)
    if not context.homogeneous and N == 1 and len(context.distinct) == 2:
        ids = sorted(context.initial_sector)
        common, distinguished = (0, 1) if ids.count(1) == 1 else (1, 0)
        if ids.count(distinguished) != 1:
            raise InvalidParameter('The inhomogeneous closed form needs exactly one distinguished label')
        q = context.q if not generator.inverse else 1 / context.q
        matrices = closed_forms.closed_form_inhomogeneous(
            n, context.distinct[common], context.distinct[distinguished], q)
        return _reorder_inhomogeneous(matrices[generator.i - 1], basis, distinguished)
    raise InvalidParameter('No closed form for n={}, N={} with {} distinct labels'.format(n, N, len(context.distinct)))


def _reorder_inhomogeneous(matrix, basis, distinguished):
    """Map the closed form's (k, slot of the distinguished label) order onto the basis order."""
    n = basis.context.n
    slots = list(range(n, 0, -1))
    order = []
    for exponents, sector in basis.monomial_index:
        k = exponents.index(1) + 1
        j = sector.index(distinguished) + 1
        order.append((k - 1) * n + slots.index(j))
    return [[matrix[r][c] for c in order] for r in order]


def build_matrix(n, N, labels, route=REWRITE, backend=None, inverse=False, apply_phase=False, binomial=SERIES):
    """One BraidMatrix per generator sigma_1 .. sigma_(n-1) (or their inverses)."""
    if route not in ROUTES:
        raise InvalidParameter('Unknown route: {}'.format(route))
    context = as_context(n, labels, backend)
    if apply_phase and context.backend.exact:
        raise BackendError('The Laurent backend tracks the phase exponent only; use the numeric backend')
    basis = _monomial_basis(context, N)
    phase = _phase(context, inverse)
    metadata = dict(basis.metadata(), n=n, N=N)
    matrices = []
    for i in range(1, n):
        generator = BraidGenerator(i, inverse)
        if route == DIRECT:
            entries = _direct_entries(generator, basis, functools.partial(apply_sigma_direct, binomial=binomial))
        elif route == SERIES_ROUTE:
            entries = _direct_entries(generator, basis, apply_sigma_series)
        elif route == REWRITE:
            entries = _rewrite_entries(generator, basis)
        else:
            entries = _closed_form_entries(generator, basis, N)
        if route == CLOSED_FORM:
            # closed forms come renormalized
            if apply_phase and phase.value is not None:
                entries = [[value * phase.value for value in row] for row in entries]
        else:
            entries = _renormalize(entries, phase, context, apply_phase)
        matrices.append(BraidMatrix(generator, entries, metadata, phase, route, apply_phase))
    logger.debug('built %d matrices of size %d by %s', len(matrices), len(basis), route)
    return matrices


def check_braid_relations(matrices):
    """Worst residual of sigma_i sigma_(i+1) sigma_i = sigma_(i+1) sigma_i sigma_(i+1) and far commutation."""
    worst = 0.0
    entries = [matrix.entries for matrix in matrices]
    for i in range(len(entries) - 1):
        a, b = entries[i], entries[i + 1]
        worst = max(worst, deviation(matmul(matmul(a, b), a), matmul(matmul(b, a), b)))
    for i in range(len(entries)):
        for j in range(i + 2, len(entries)):
            worst = max(worst, deviation(matmul(entries[i], entries[j]), matmul(entries[j], entries[i])))
    return worst


def check_inverse(forward, inverse):
    """Worst deviation of sigma_i sigma_i^-1 (both orders) from the identity."""
    worst = 0.0
    for a, b in zip(forward, inverse):
        identity = identity_like(a.entries)
        worst = max(worst, deviation(a @ b, identity), deviation(b @ a, identity))
    return worst


def first_difference(left, right, tolerance=None):
    """First (row, column) where two matrices differ beyond ``tolerance``, or None."""
    tolerance = conf.tolerance('route') if tolerance is None else tolerance
    for r, (row_l, row_r) in enumerate(zip(left.entries, right.entries)):
        for c, (a, b) in enumerate(zip(row_l, row_r)):
            if isinstance(a, LaurentScalar) or isinstance(b, LaurentScalar):
                differs = a != b
                amount = 0.0 if not differs else 1.0
            else:
                amount = abs(float(a - b)) / max(1.0, abs(float(a)), abs(float(b)))
                differs = amount > tolerance
            if differs:
                return {
                    'generator': str(left.generator),
                    'row': r,
                    'column': c,
                    'left': str(a),
                    'right': str(b),
                    'deviation': amount,
                }
    return None


def compare_routes(first, second, tolerance=None):
    """Raise RouteDisagreement at the first entry where two matrix families differ."""
    worst = 0.0
    for left, right in zip(first, second):
        if left.dimension != right.dimension:
            raise RouteDisagreement('Routes produced different dimensions', generator=str(left.generator))
        difference = first_difference(left, right, tolerance)
        if difference is not None:
            logger.warning('routes %s and %s disagree at %s', left.route, right.route, difference)
            raise RouteDisagreement(
                '{} and {} disagree for {} at ({}, {})'.format(
                    left.route, right.route, left.generator, difference['row'], difference['column']),
                generator=difference['generator'], row=difference['row'], column=difference['column'],
                left=difference['left'], right=difference['right'], deviation=difference['deviation'])
        worst = max(worst, deviation(left.entries, right.entries))
    return worst


__all__ = [
    'BraidMatrix', 'build_matrix', 'check_braid_relations', 'check_inverse', 'compare_routes',
    'first_difference', 'DIRECT', 'REWRITE', 'CLOSED_FORM', 'ROUTES',
]
