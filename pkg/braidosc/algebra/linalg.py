"""
Dense numeric linear algebra on coordinate lists.

Native doubles go through numpy/scipy; at extended precision the same
operations run on mpmath matrices. Matrices are passed row-major, vectors
as plain lists; results come back as lists of raw reals.
"""
import logging

import mpmath
import numpy as np
import scipy.linalg

from . import conf
from .exceptions import InvariantViolation
from .scalars import NumericScalar

logger = logging.getLogger(__name__)


def _raw(value):
    return value.value if isinstance(value, NumericScalar) else value


def to_numpy(rows, n_cols=None):
    if not rows:
        return np.zeros((0, n_cols or 0))
    return np.array([[float(_raw(v)) for v in row] for row in rows], dtype=float)


def to_mpmath(rows):
    return mpmath.matrix([[mpmath.mpf(_raw(v)) for v in row] for row in rows])


def _mp_column(matrix, j):
    return [matrix[i, j] for i in range(matrix.rows)]


def _mp_singular_values(rows, n_cols):
    padded = [list(row) for row in rows] + [[0] * n_cols for _ in range(max(0, n_cols - len(rows)))]
    u, s, v = mpmath.svd_r(to_mpmath(padded), full_matrices=True)
    return [s[i] for i in range(s.rows)], v


def null_space(rows, n_cols):
    """Orthonormal basis, as a list of columns, of {x : A x = 0} for A given by ``rows``."""
    if not rows:
        return [[1 if i == j else 0 for i in range(n_cols)] for j in range(n_cols)]
    rcond = conf.tolerance('rank_rel')
    if conf.extended_precision():
        values, v = _mp_singular_values(rows, n_cols)
        largest = max(values) if values else 0
        rank = sum(1 for value in values if value > rcond * largest)
        return [[v[r, c] for c in range(n_cols)] for r in range(rank, n_cols)]
    basis = scipy.linalg.null_space(to_numpy(rows), rcond=rcond)
    return [[float(x) for x in basis[:, j]] for j in range(basis.shape[1])]


def singular_values(rows, n_cols):
    if not rows:
        return []
    if conf.extended_precision():
        return _mp_singular_values(rows, n_cols)[0][:min(len(rows), n_cols)]
    return [float(s) for s in scipy.linalg.svdvals(to_numpy(rows))]


def rank(rows, n_cols):
    values = singular_values(rows, n_cols)
    if not values:
        return 0
    largest = max(values)
    return sum(1 for value in values if value > conf.tolerance('rank_rel') * largest)


def columns_rank(columns):
    """Rank of the matrix whose columns are ``columns``."""
    if not columns:
        return 0
    rows = [list(row) for row in zip(*columns)]
    return rank(rows, len(columns))


def orthonormal_columns(columns):
    """Orthonormal basis of the span of (independent) ``columns`` by QR."""
    if not columns:
        return []
    if conf.extended_precision():
        q, _ = mpmath.qr(to_mpmath([list(row) for row in zip(*columns)]), mode='skinny')
        return [_mp_column(q, j) for j in range(q.cols)]
    q, _ = np.linalg.qr(to_numpy([list(row) for row in zip(*columns)]))
    return [[float(x) for x in q[:, j]] for j in range(q.shape[1])]


def solve_gram(basis_columns, targets):
    """
    Coordinates of each target in the span of ``basis_columns`` from the
    normal equations G c = B^T y. Returns (coordinates, worst relative residual).
    """
    if conf.extended_precision():
        b = to_mpmath([list(row) for row in zip(*basis_columns)])
        gram = b.T * b
        solutions, worst = [], 0
        for target in targets:
            y = to_mpmath([[x] for x in target])
            try:
                c = mpmath.lu_solve(gram, b.T * y)
            except ZeroDivisionError:
                raise InvariantViolation('Singular Gram matrix in the monomial basis')
            residual = mpmath.norm(b * c - y) / max(mpmath.norm(y), mpmath.mpf(1))
            worst = max(worst, residual)
            solutions.append([c[i] for i in range(c.rows)])
        return solutions, worst
    b = to_numpy([list(row) for row in zip(*basis_columns)])
    y = to_numpy([list(row) for row in zip(*targets)]) if targets else np.zeros((b.shape[0], 0))
    gram = b.T @ b
    try:
        c = scipy.linalg.solve(gram, b.T @ y, assume_a='pos')
    except (np.linalg.LinAlgError, ValueError) as error:
        raise InvariantViolation('Singular Gram matrix in the monomial basis: {}'.format(error))
    scale = np.maximum(np.linalg.norm(y, axis=0), 1.0)
    residuals = np.linalg.norm(b @ c - y, axis=0) / scale
    worst = float(residuals.max()) if residuals.size else 0.0
    logger.debug('Gram solve: %d targets, worst relative residual %.3e', len(targets), worst)
    return [[float(x) for x in c[:, j]] for j in range(c.shape[1])], worst


def eigvalsh(rows):
    """Eigenvalues of a symmetric matrix, ascending."""
    if conf.extended_precision():
        values = mpmath.eigsy(to_mpmath(rows), eigvals_only=True)
        return sorted(values[i] for i in range(values.rows))
    return [float(x) for x in scipy.linalg.eigvalsh(to_numpy(rows))]


def determinant(rows):
    if conf.extended_precision():
        return mpmath.det(to_mpmath(rows))
    return float(np.linalg.det(to_numpy(rows)))


def condition_number(rows):
    if conf.extended_precision():
        return mpmath.cond(to_mpmath(rows))
    return float(np.linalg.cond(to_numpy(rows)))
