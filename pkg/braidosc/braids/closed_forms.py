"""
Closed-form generator families.

All matrices are in column convention (column j holds sigma applied to the
j-th basis vector) on the bases produced by ``lowest_weight_monomials``.
Homogeneous families are Laurent polynomials in x = q^-gamma with the
vacuum phase q^-2c gamma divided out.
"""
import itertools
import logging
from dataclasses import dataclass

from braidosc.algebra import linalg
from braidosc.algebra.exceptions import InvalidParameter
from braidosc.algebra.scalars import LaurentScalar, NumericScalar, q_number

logger = logging.getLogger(__name__)

X = LaurentScalar.variable()


def _zero_matrix(size, zero):
    return [[zero] * size for _ in range(size)]


def _laurent_identity(size):
    matrix = _zero_matrix(size, LaurentScalar.zero())
    for k in range(size):
        matrix[k][k] = LaurentScalar.one()
    return matrix


def burau_matrix(n, i, x=X):
    """sigma_i on (w_1, ..., w_(n-1))."""
    matrix = _laurent_identity(n - 1)
    k = i - 1
    matrix[k][k] = -(x ** 2)
    if i + 1 <= n - 1:
        # sigma_i w_(i+1) = x w_i + w_(i+1)
        matrix[k][k + 1] = x
    if i - 1 >= 1:
        # sigma_i w_(i-1) = w_(i-1) + x w_i
        matrix[k][k - 1] = x
    return matrix


def closed_form_burau(n):
    if n < 2:
        raise InvalidParameter('n must be at least 2, got {}'.format(n))
    return [burau_matrix(n, i) for i in range(1, n)]


def lkb_pairs(n):
    return list(itertools.combinations_with_replacement(range(1, n), 2))


def _lkb_image(i, j, k, x):
    """sigma_i w_(j,k) for j <= k as {(a, b): coefficient}."""
    one = LaurentScalar.one()
    if (j, k) == (i, i):
        return {(i, i): x ** 4}
    if (j, k) == (i - 1, i - 1):
        return {(i, i): x ** 2, (i - 1, i): 2 * x, (i - 1, i - 1): one}
    if (j, k) == (i + 1, i + 1):
        return {(i, i): x ** 2, (i, i + 1): 2 * x, (i + 1, i + 1): one}
    if (j, k) == (i - 1, i + 1):
        return {(i, i): x ** 2, (i - 1, i): x, (i, i + 1): x, (i - 1, i + 1): one}
    if (j, k) == (i - 1, i):
        return {(i - 1, i): -(x ** 2), (i, i): -(x ** 3)}
    if (j, k) == (i, i + 1):
        return {(i, i + 1): -(x ** 2), (i, i): -(x ** 3)}
    # one index in {i-1, i, i+1}, the other one far away
    for own, other in ((j, k), (k, j)):
        if other in (i - 1, i, i + 1):
            continue
        if own == i:
            return {tuple(sorted((i, other))): -(x ** 2)}
        if own in (i - 1, i + 1):
            return {tuple(sorted((i, other))): x, tuple(sorted((own, other))): one}
    return {(j, k): one}


def lkb_matrix(n, i, x=X):
    pairs = lkb_pairs(n)
    position = {pair: index for index, pair in enumerate(pairs)}
    matrix = _zero_matrix(len(pairs), LaurentScalar.zero())
    for column, (j, k) in enumerate(pairs):
        for pair, coefficient in _lkb_image(i, j, k, x).items():
            matrix[position[pair]][column] = matrix[position[pair]][column] + coefficient
    return matrix


def closed_form_lkb(n):
    if n < 2:
        raise InvalidParameter('n must be at least 2, got {}'.format(n))
    return [lkb_matrix(n, i) for i in range(1, n)]


def evaluate_matrix(matrix, x):
    return [[entry.evaluate(x) for entry in row] for row in matrix]


def invert_variable(matrix):
    return [[entry.invert_variable() for entry in row] for row in matrix]


def closed_form_inhomogeneous(n, common, distinguished, q):
    """
    N = 1 matrices for n-1 copies of ``common`` and one ``distinguished`` label.
    Basis: w_k^(j) = O_k v0 with the distinguished label in slot j, ordered by k,
    then by sector (j = n, n-1, ..., 1). Entries keep the vacuum phases
    d1 = q^-2 c1 gamma1 and d2 = q^-(c2 gamma1 + c1 gamma2).
    """
    q = NumericScalar(q)
    g1, c1 = NumericScalar(common.gamma), NumericScalar(common.c)
    g2, c2 = NumericScalar(distinguished.gamma), NumericScalar(distinguished.c)
    d1 = q ** (-2 * c1 * g1)
    d2 = q ** -(c2 * g1 + c1 * g2)
    r = (q_number(common.gamma, q) / q_number(distinguished.gamma, q)).sqrt()
    slots = list(range(n, 0, -1))
    index = {(k, j): (k - 1) * n + slots.index(j) for k in range(1, n) for j in slots}
    zero = NumericScalar(0)
    matrices = []
    for i in range(1, n):
        matrix = _zero_matrix(len(index), zero)
        for (k, j), column in index.items():
            for (target_k, target_j), value in _inhomogeneous_image(i, k, j, q, g1, g2, d1, d2, r).items():
                matrix[index[(target_k, target_j)]][column] = value
        matrices.append(matrix)
    return matrices


def _inhomogeneous_image(i, k, j, q, g1, g2, d1, d2, r):
    if j == i + 1:
        # the distinguished label moves from slot i+1 to slot i
        phase, target = d2, i
        rules = {
            i: {i: -(q ** -(g1 + g2))},
            i + 1: {i: q ** -g1, i + 1: 1 / r},
            i - 1: {i - 1: r, i: r * q ** -g2},
        }
    elif j == i:
        phase, target = d2, i + 1
        rules = {
            i: {i: -(q ** -(g1 + g2))},
            i + 1: {i: r * q ** -g2, i + 1: r},
            i - 1: {i - 1: 1 / r, i: q ** -g1},
        }
    else:
        phase, target = d1, j
        rules = {
            i: {i: -(q ** (-2 * g1))},
            i + 1: {i: q ** -g1 / r if j == i + 2 else q ** -g1, i + 1: NumericScalar(1)},
            i - 1: {i - 1: NumericScalar(1), i: q ** -g1 / r if j == i - 1 else q ** -g1},
        }
    form = rules.get(k, {k: NumericScalar(1)})
    return {(index, target): phase * value for index, value in form.items()}


def textbook_reduced_burau(n, i, t):
    """Reduced Burau matrix V_i of B_n in row convention, built directly from its block form."""
    size = n - 1
    matrix = _zero_matrix(size, t * 0)
    for k in range(size):
        matrix[k][k] = t * 0 + 1
    if size == 1:
        matrix[0][0] = -t
        return matrix
    k = i - 1
    matrix[k][k] = -t
    if k - 1 >= 0:
        # [[1, t], [0, -t]] on (i-1, i)
        matrix[k - 1][k] = t
    if k + 1 < size:
        # [[-t, 0], [1, 1]] on (i, i+1)
        matrix[k + 1][k] = t * 0 + 1
    return matrix


def burau_textbook_residual(n):
    """
    Compare the closed-form Burau matrices with the textbook ones after the
    rescaling x^k w_k -> b_(n-k) and t = x^2. Returns the number of mismatching entries.
    """
    from .words import matmul, transpose

    size = n - 1
    zero = LaurentScalar.zero()
    change = _zero_matrix(size, zero)
    change_inverse = _zero_matrix(size, zero)
    for k in range(1, n):
        change[n - k - 1][k - 1] = X ** -k
        change_inverse[k - 1][n - k - 1] = X ** k
    mismatches = 0
    for k in range(1, n):
        rescaled = transpose(matmul(matmul(change, burau_matrix(n, k)), change_inverse))
        expected = textbook_reduced_burau(n, n - k, X ** 2)
        mismatches += sum(1 for a, b in zip(itertools.chain(*rescaled), itertools.chain(*expected)) if a != b)
    return mismatches


@dataclass
class ChangeOfBasis:
    n: int
    s: float
    rows: list
    columns: list
    matrix: list
    determinant: float
    condition: float
    invertible: bool

    def to_json(self):
        return {
            'n': self.n,
            's': self.s,
            'rows': ['W{}{}'.format(*pair) for pair in self.rows],
            'columns': ['w{}{}'.format(*pair) for pair in self.columns],
            'matrix': [[float(value) for value in row] for row in self.matrix],
            'determinant': self.determinant,
            'condition': self.condition,
            'invertible': self.invertible,
        }


def corrjk_change_of_basis(n, s):
    """
    The map expressing w_(i,j) (columns) in the W_(a,b) basis (rows):

        w_(i,i) = -2 W_(i,i+1)
        w_(i,i+1) = W_(i,i+1)/s - W_(i,i+2) + s W_(i+1,i+2)
        w_(i,r) = -W_(i,r+1) + s W_(i+1,r+1) + W_(i,r)/s - W_(i+1,r),  r >= i+2
    """
    if n < 2:
        raise InvalidParameter('n must be at least 2, got {}'.format(n))
    if s == 0:
        raise InvalidParameter('s must be nonzero')
    rows = list(itertools.combinations(range(1, n + 1), 2))
    columns = lkb_pairs(n)
    position = {pair: index for index, pair in enumerate(rows)}
    matrix = [[0.0] * len(columns) for _ in rows]

    def put(pair, column, value):
        if pair in position:
            matrix[position[pair]][column] += value

    for column, (i, r) in enumerate(columns):
        if r == i:
            put((i, i + 1), column, -2.0)
        elif r == i + 1:
            put((i, i + 1), column, 1 / s)
            put((i, i + 2), column, -1.0)
            put((i + 1, i + 2), column, s)
        else:
            put((i, r + 1), column, -1.0)
            put((i + 1, r + 1), column, s)
            put((i, r), column, 1 / s)
            put((i + 1, r), column, -1.0)
    determinant = float(linalg.determinant(matrix))
    invertible = linalg.rank(matrix, len(columns)) == len(columns)
    condition = float(linalg.condition_number(matrix)) if invertible else float('inf')
    if not invertible:
        logger.warning('change of basis for n=%d, s=%s is singular', n, s)
    return ChangeOfBasis(n, s, rows, columns, matrix, determinant, condition, invertible)
