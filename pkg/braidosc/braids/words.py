"""
Braid words as ordered products of generator matrices.

Matrix entries may be NumericScalars or LaurentScalars; products are plain
Python so exact entries stay exact, except native-precision numeric
products which go through numpy.
"""
import logging

from braidosc.algebra import conf, linalg
from braidosc.algebra.exceptions import InvalidParameter
from braidosc.algebra.scalars import LaurentScalar, NumericScalar

from .generators import BraidGenerator

logger = logging.getLogger(__name__)


def _zero_like(rows):
    for row in rows:
        for entry in row:
            return entry * 0
    return 0


def matmul(a, b):
    if a and len(a[0]) != len(b):
        raise InvalidParameter('Cannot multiply {}x{} by {}x{}'.format(
            len(a), len(a[0]), len(b), len(b[0]) if b else 0))
    zero = _zero_like(a)
    if isinstance(zero, NumericScalar) and not conf.extended_precision():
        product = linalg.to_numpy(a) @ linalg.to_numpy(b)
        return [[NumericScalar(value) for value in row] for row in product.tolist()]
    columns = list(zip(*b))
    result = []
    for row in a:
        result_row = []
        for column in columns:
            total = zero
            for x, y in zip(row, column):
                if x and y:
                    total = total + x * y
            result_row.append(total)
        result.append(result_row)
    return result


def transpose(matrix):
    return [list(row) for row in zip(*matrix)]


def identity_like(matrix):
    zero = _zero_like(matrix)
    return [[zero + 1 if r == c else zero for c in range(len(matrix))] for r in range(len(matrix))]


def deviation(a, b):
    """
    Largest entry-wise difference, relative to max(1, largest entry).
    Exact matrices give 0.0 when equal and 1.0 otherwise.
    """
    if isinstance(_zero_like(a), LaurentScalar):
        return 0.0 if a == b else 1.0
    worst = max((abs(float(x - y)) for row_a, row_b in zip(a, b) for x, y in zip(row_a, row_b)), default=0.0)
    scale = max((abs(float(x)) for row in a for x in row), default=0.0)
    return worst / max(1.0, scale)


def trace(matrix):
    total = _zero_like(matrix)
    for k in range(len(matrix)):
        total = total + matrix[k][k]
    return total


def parse_letters(word):
    if isinstance(word, str):
        word = word.replace(',', ' ').split()
    return [BraidGenerator.from_letter(int(letter)) for letter in word]


def evaluate_word(word, forward, inverse):
    """
    sigma_(w1) sigma_(w2) ... as a matrix product, from the entry lists of the
    generators (``forward``) and of their inverses (``inverse``), both indexed 1..n-1.
    """
    if not forward:
        raise InvalidParameter('No generator matrices to evaluate the word with')
    product = identity_like(forward[0])
    for generator in parse_letters(word):
        generator.validate(len(forward) + 1)
        factor = inverse[generator.i - 1] if generator.inverse else forward[generator.i - 1]
        product = matmul(product, factor)
    logger.debug('evaluated a word of length %d', len(parse_letters(word)))
    return product


def is_identity(matrix, tolerance=1e-9):
    return deviation(matrix, identity_like(matrix)) <= tolerance
