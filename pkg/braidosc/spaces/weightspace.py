"""
Weight spaces of H^(1) (x) ... (x) H^(n) and their lowest-weight subspaces.

A weight space W is spanned by the tensor states of one sector whose
occupations sum to N. Its lowest-weight part V = ker(Delta alpha-) | W is
computed twice: as a kernel (numeric SVD or exact sympy null space) and as
the span of O-monomials O_1^j1 ... O_(n-1)^j(n-1) applied to the vacuum.
"""
import functools
import itertools
import logging
import math
from dataclasses import dataclass, field

import sympy

from braidosc.algebra import conf, linalg
from braidosc.algebra.exceptions import BackendError, InvalidParameter, InvariantViolation
from braidosc.algebra.oscillator import (
    Context, Generator, TensorState, WeightVector, apply_O_monomial, casimir_action, coproduct_action,
    from_coordinates, inner_product, total_c, total_gamma,
)
from braidosc.algebra.parallel import parallel_map
from braidosc.algebra.scalars import LaurentScalar, NumericScalar, scalar_to_json

logger = logging.getLogger(__name__)

ALL_SECTORS = 'all'

KERNEL = 'kernel'
MONOMIAL = 'monomial'


def counts(n, N):
    """(N_(n,N), [M_(n,0), ..., M_(n,N)])."""
    if n < 2:
        raise InvalidParameter('n must be at least 2, got {}'.format(n))
    if N < 0:
        raise InvalidParameter('N must be nonnegative, got {}'.format(N))
    return math.comb(n + N - 1, n - 1), [math.comb(n + j - 2, n - 2) for j in range(N + 1)]


def compositions(n, N):
    """All occupation vectors of length n summing to N, ascending lexicographically."""
    result = []
    for bars in itertools.combinations(range(N + n - 1), n - 1):
        edges = (-1,) + bars + (N + n - 1,)
        result.append(tuple(edges[i + 1] - edges[i] - 1 for i in range(n)))
    return sorted(result)


def monomial_exponents(n, N):
    """
    Exponent vectors (j_1, ..., j_(n-1)) of degree N, ordered by their
    nondecreasing index word: w_1, w_2, ... for N=1, w_11, w_12, ..., w_22, ... for N=2.
    """
    return [
        tuple(word.count(k) for k in range(1, n))
        for word in itertools.combinations_with_replacement(range(1, n), N)
    ]


def monomial_word(exponents):
    return ''.join(str(k) * j for k, j in enumerate(exponents, start=1))


def as_context(n, labels, backend=None):
    if isinstance(labels, Context):
        context = labels
    else:
        if backend is None:
            raise InvalidParameter('A backend is required when passing bare labels')
        context = Context(labels, backend)
    if context.n != n:
        raise InvalidParameter('Expected {} labels, got {}'.format(n, context.n))
    if n < 2:
        raise InvalidParameter('n must be at least 2, got {}'.format(n))
    return context


def sector_list(context, sector=None):
    if sector is None:
        return [context.initial_sector]
    if sector == ALL_SECTORS:
        return context.sectors()
    sector = tuple(sector)
    if sorted(sector) != sorted(context.initial_sector):
        raise InvalidParameter('Sector {} is not an arrangement of the context labels'.format(sector))
    return [sector]


@dataclass
class WeightSpaceBasis:
    context: Context
    N: int
    sectors: list
    states: list

    @property
    def n(self):
        return self.context.n

    def __len__(self):
        return len(self.states)

    @functools.cached_property
    def positions(self):
        return {state: index for index, state in enumerate(self.states)}

    def index(self, state):
        return self.positions[state]

    def coordinates(self, vector):
        return [vector.coefficient(state) for state in self.states]

    def to_json(self):
        return {
            'n': self.n,
            'N': self.N,
            'order': 'sector, then occupations ascending',
            'states': [state.to_json() for state in self.states],
        }


@dataclass
class LowestWeightBasis:
    context: Context
    N: int
    sectors: list
    vectors: list
    kind: str
    monomial_index: list = field(default_factory=list)
    gram: list = field(default_factory=list)

    @property
    def n(self):
        return self.context.n

    def __len__(self):
        return len(self.vectors)

    def labels(self):
        """Human-readable names w_<word>^<sector> of the basis vectors."""
        if self.kind != MONOMIAL:
            return ['v{}'.format(i + 1) for i in range(len(self.vectors))]
        names = []
        for exponents, sector in self.monomial_index:
            name = 'w{}'.format(monomial_word(exponents) or '0')
            if not self.context.homogeneous:
                name += '^' + ''.join(str(i) for i in sector)
            names.append(name)
        return names

    def metadata(self):
        return {
            'kind': self.kind,
            'order': 'monomial words ascending, then sectors ascending',
            'basis': [
                {'name': name, 'exponents': list(exponents), 'sector': list(sector)}
                for name, (exponents, sector) in zip(self.labels(), self.monomial_index)
            ],
        }

    def to_json(self):
        data = {
            'n': self.n,
            'N': self.N,
            'context': self.context.to_json(),
            'vectors': [vector.to_json()['terms'] for vector in self.vectors],
            'gram': [[scalar_to_json(value) for value in row] for row in self.gram],
        }
        data.update(self.metadata())
        return data


def enumerate_weight_basis(n, N, labels, sector=None, backend=None):
    context = as_context(n, labels, backend)
    if N < 0:
        raise InvalidParameter('N must be nonnegative, got {}'.format(N))
    sectors = sector_list(context, sector)
    states = [TensorState(s, occupations) for s in sectors for occupations in compositions(n, N)]
    expected = counts(n, N)[0] * len(sectors)
    if len(states) != expected:
        raise InvariantViolation('Weight space has {} states, expected {}'.format(len(states), expected))
    return WeightSpaceBasis(context, N, sectors, states)


def operator_matrix(operator, source, target):
    """Matrix (rows over ``target`` states) of ``operator`` on the states of ``source``."""
    context = source.context
    zero = context.backend.zero()
    rows = [[zero] * len(source) for _ in range(len(target))]
    for column, state in enumerate(source.states):
        for image_state, coefficient in operator(context.basis_vector(state)):
            rows[target.index(image_state)][column] = coefficient
    return rows


def _lowering(vector):
    return coproduct_action(Generator.LOWER, vector)


def _check_dimension(found, context, N, sectors, what):
    expected = counts(context.n, N)[1][N] * len(sectors)
    if found != expected:
        raise InvariantViolation(
            '{} has dimension {}, expected M_({},{}) = {}'.format(what, found, context.n, N, expected),
            found=found, expected=expected)


def _relative_residual(image, vector):
    if vector.context.backend.exact:
        return image.residual()
    return image.residual() / max(vector.residual(), conf.tolerance('zero_abs'))


def _exact_null_space(rows, n_cols):
    symbol = sympy.Symbol('x')
    if not rows:
        return [[LaurentScalar.one() if i == j else LaurentScalar.zero() for i in range(n_cols)]
                for j in range(n_cols)]
    matrix = sympy.Matrix(len(rows), n_cols, lambda r, c: rows[r][c].to_sympy(symbol))
    columns = []
    for vector in matrix.nullspace():
        denominators = [sympy.fraction(sympy.cancel(entry))[1] for entry in vector]
        scale = functools.reduce(sympy.lcm, denominators, sympy.Integer(1))
        columns.append([LaurentScalar.from_sympy(sympy.cancel(entry * scale), symbol) for entry in vector])
    return columns


def gram_matrix(vectors):
    return [[inner_product(u, v) for v in vectors] for u in vectors]


def check_gram(gram, what='Gram matrix'):
    """Raise unless the Gram matrix is nonsingular (positive definite in numeric mode)."""
    if not gram:
        return
    if isinstance(gram[0][0], LaurentScalar):
        symbol = sympy.Symbol('x')
        matrix = sympy.Matrix(len(gram), len(gram), lambda r, c: gram[r][c].to_sympy(symbol))
        if sympy.cancel(matrix.det()) == 0:
            raise InvariantViolation('{} is singular'.format(what))
        return
    values = linalg.eigvalsh(gram)
    if values[0] <= conf.tolerance('rank_rel') * values[-1]:
        raise InvariantViolation('{} is not positive definite (eigenvalues {:.3e}..{:.3e})'.format(
            what, float(values[0]), float(values[-1])), eigenvalues=[float(v) for v in values])


def lowest_weight_kernel(n, N, labels, sector=None, backend=None):
    """
    Basis of ker(Delta alpha-) on the weight space. Numeric bases are
    orthonormal; exact bases have polynomial coordinates with cleared denominators.
    """
    source = enumerate_weight_basis(n, N, labels, sector, backend)
    context = source.context
    if N == 0:
        rows = []
    else:
        target = enumerate_weight_basis(n, N - 1, context, sector)
        rows = operator_matrix(_lowering, source, target)
    if context.backend.exact:
        columns = _exact_null_space(rows, len(source))
        vectors = [WeightVector(context, zip(source.states, column)) for column in columns]
    else:
        columns = linalg.null_space(rows, len(source))
        vectors = [from_coordinates(context, source.states, column) for column in columns]
    _check_dimension(len(vectors), context, N, source.sectors, 'ker(Delta alpha-)')
    for vector in vectors:
        residual = _lowering(vector).residual()
        if not context.backend.exact and residual > conf.tolerance('kernel_residual'):
            raise InvariantViolation('Kernel vector fails Delta alpha- v = 0 (residual {:.3e})'.format(residual))
    logger.debug('kernel n=%d N=%d: %d vectors from %d states', n, N, len(vectors), len(source))
    return LowestWeightBasis(context, N, source.sectors, vectors, KERNEL, gram=gram_matrix(vectors))


def monomial_norm(context, N):
    """([gamma]_q^N N!)^(1/2) with gamma the total Gamma eigenvalue."""
    gamma = context.backend.q_number(total_gamma(context))
    return (gamma ** N * math.factorial(N)).sqrt()


def lowest_weight_monomials(n, N, labels, sector=ALL_SECTORS, backend=None, normalized=False):
    """
    O-monomials of degree N on the vacuum of every sector, monomial-major.
    ``normalized`` divides by ([gamma]_q^N N!)^(1/2), which makes the n=2 vectors unit length.
    """
    context = as_context(n, labels, backend)
    if N < 0:
        raise InvalidParameter('N must be nonnegative, got {}'.format(N))
    sectors = sector_list(context, sector)
    if normalized and context.backend.exact:
        raise BackendError('Normalized monomials involve square roots; use the numeric backend')
    index = [(exponents, s) for exponents in monomial_exponents(n, N) for s in sectors]

    def build(entry):
        exponents, s = entry
        vector = apply_O_monomial(exponents, context.vacuum(s))
        if normalized:
            vector = vector.scale(1 / monomial_norm(context, N))
        residual = _relative_residual(_lowering(vector), vector)
        if residual > conf.tolerance('kernel_residual'):
            raise InvariantViolation('O-monomial {} is not lowest weight (residual {:.3e})'.format(
                monomial_word(exponents), residual))
        return vector

    vectors = parallel_map(build, index)
    _check_dimension(len(vectors), context, N, sectors, 'O-monomial basis')
    gram = gram_matrix(vectors)
    check_gram(gram, 'Gram matrix of the O-monomials')
    return LowestWeightBasis(context, N, sectors, vectors, MONOMIAL, index, gram)


def _columns(vectors, states):
    return [[vector.coefficient(state) for state in states] for vector in vectors]


def projection_residual(basis_vectors, targets):
    """Worst relative residual of projecting ``targets`` onto span(``basis_vectors``)."""
    if not targets:
        return 0.0
    states = sorted({state for vector in list(basis_vectors) + list(targets) for state in vector.states()})
    _, worst = linalg.solve_gram(_columns(basis_vectors, states), _columns(targets, states))
    return float(worst)


def mutual_projection_residual(first, second):
    """Span-equality measure of two numeric lowest-weight bases."""
    if len(first) != len(second):
        return float('inf')
    return max(projection_residual(first.vectors, second.vectors),
               projection_residual(second.vectors, first.vectors))


def descendant(v0, m):
    """v_m = ([gamma]_q^m m!)^(-1/2) (Delta alpha+)^m v0 for a unit lowest-weight v0."""
    context = v0.context
    if context.backend.exact:
        raise BackendError('Descendants are normalized with square roots; use the numeric backend')
    vector = v0
    for _ in range(m):
        vector = coproduct_action(Generator.RAISE, vector)
    return vector.scale(1 / monomial_norm(context, m))


def descendant_residual(v0, m):
    """Residual of Delta alpha- v_m = [gamma]_q^(1/2) m^(1/2) v_(m-1)."""
    if m == 0:
        return _lowering(v0).residual()
    gamma = v0.context.backend.q_number(total_gamma(v0.context))
    expected = descendant(v0, m - 1).scale((gamma * m).sqrt())
    return (_lowering(descendant(v0, m)) - expected).residual()


def orthonormality_deviation(context, i_max=2, j_max=2):
    """
    max |<v_i^(j), v_i'^(j')> - delta_ii' delta_jj'| for n = 2, with v^(j) the
    normalized O^j v0 and v_i^(j) its i-th descendant.
    """
    if context.n != 2:
        raise InvalidParameter('The orthonormal ladder basis is only claimed for n = 2')
    vectors = {}
    for j in range(j_max + 1):
        v0 = lowest_weight_monomials(2, j, context, sector=None, normalized=True).vectors[0]
        for i in range(i_max + 1):
            vectors[(i, j)] = descendant(v0, i)
    worst = 0.0
    for (a, u), (b, v) in itertools.product(vectors.items(), repeat=2):
        delta = 1.0 if a == b else 0.0
        if u.total_occupation != v.total_occupation:
            continue
        worst = max(worst, abs(float(inner_product(u, v)) - delta))
    return worst


def casimir_eigenvalue(context, j):
    """[gamma]_q (c + j) with gamma, c the summed labels."""
    return context.backend.q_number(total_gamma(context)) * (NumericScalar(total_c(context)) + j)


def casimir_spectrum(n, N, labels, sector=None, backend=None):
    """
    Eigenvalues of Delta C_q on the weight space grouped by level j.
    Returns [(j, eigenvalue, found multiplicity, M_(n,j))].
    """
    source = enumerate_weight_basis(n, N, labels, sector, backend)
    context = source.context
    rows = operator_matrix(casimir_action, source, source)
    values = linalg.eigvalsh(rows)
    tolerance = conf.tolerance('casimir')
    multiplicities = counts(n, N)[1]
    table = []
    for j in range(N + 1):
        expected = casimir_eigenvalue(context, j)
        found = sum(1 for value in values
                    if abs(float(value) - float(expected)) <= tolerance * max(1.0, abs(float(expected))))
        table.append((j, expected, found, multiplicities[j] * len(source.sectors)))
    return table


@dataclass
class DecompositionReport:
    n: int
    N: int
    blocks: list = field(default_factory=list)
    weight_dimension: int = 0
    union_rank: int = 0
    block_overlap: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {
            'n': self.n,
            'N': self.N,
            'passed': self.passed,
            'blocks': self.blocks,
            'weight_dimension': self.weight_dimension,
            'union_rank': self.union_rank,
            'block_overlap': self.block_overlap,
            'failures': self.failures,
        }


def _normalized(vector):
    size = float(inner_product(vector, vector)) ** 0.5
    return vector.scale(1 / size)


def verify_decomposition(n, N, labels, backend=None, sector=None):
    """
    Build U^(j,N) = (Delta alpha+)^(N-j) O-monomials(j) v0 and check that they are
    Casimir eigenspaces of dimension M_(n,j) spanning the weight space.
    """
    context = as_context(n, labels, backend)
    if context.backend.exact:
        raise BackendError('The decomposition check needs the Casimir, which is numeric only')
    weight = enumerate_weight_basis(n, N, context, sector)
    report = DecompositionReport(n, N, weight_dimension=len(weight))
    blocks = []
    for j in range(N + 1):
        monomials = lowest_weight_monomials(n, j, context, sector)
        vectors = []
        for vector in monomials.vectors:
            for _ in range(N - j):
                vector = coproduct_action(Generator.RAISE, vector)
            vectors.append(vector)
        expected = casimir_eigenvalue(context, j)
        residual = max((_relative_residual(casimir_action(v) - v.scale(expected), v) for v in vectors), default=0.0)
        dimension = linalg.columns_rank(_columns(vectors, weight.states))
        expected_dimension = counts(n, j)[1][j] * len(weight.sectors)
        report.blocks.append({
            'j': j,
            'dimension': dimension,
            'expected_dimension': expected_dimension,
            'eigenvalue': float(expected),
            'casimir_residual': float(residual),
        })
        if residual > conf.tolerance('casimir'):
            report.failures.append('U^({},{}) is not a Casimir eigenspace (residual {:.3e})'.format(j, N, residual))
        if dimension != expected_dimension:
            report.failures.append('dim U^({},{}) = {}, expected {}'.format(j, N, dimension, expected_dimension))
        blocks.append([_normalized(v) for v in vectors])
    union = [v for block in blocks for v in block]
    report.union_rank = linalg.columns_rank(_columns(union, weight.states))
    total = sum(block['expected_dimension'] for block in report.blocks)
    if total != len(weight):
        report.failures.append('sum of M_(n,j) is {}, weight space has {} states'.format(total, len(weight)))
    if report.union_rank != len(weight):
        report.failures.append('U blocks span rank {} of {}'.format(report.union_rank, len(weight)))
    # measured only: mutual orthogonality of the blocks is not asserted
    for first, second in itertools.combinations(blocks, 2):
        for u in first:
            for v in second:
                report.block_overlap = max(report.block_overlap, abs(float(inner_product(u, v))))
    logger.info('decomposition n=%d N=%d: %s', n, N, 'ok' if report.passed else '; '.join(report.failures))
    return report
