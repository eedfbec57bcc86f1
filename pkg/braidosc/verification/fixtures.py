"""
Printed generator matrices the computed ones are checked against.

The N=1 two-label matrices are in column convention on the basis
w_1^(3), w_1^(2), w_1^(1), w_2^(3), w_2^(2), w_2^(1), where w_k^(j) = O_k v0
with the distinguished label in slot j. The printed n=3 LKB matrices are in
row convention and are transposed before comparison.
"""
from braidosc.algebra.scalars import LaurentScalar, NumericScalar, q_number

X = LaurentScalar.variable()
ONE = LaurentScalar.one()
ZERO = LaurentScalar.zero()

BURAU_3 = [
    [[-(X ** 2), X], [ZERO, ONE]],
    [[ONE, ZERO], [X, -(X ** 2)]],
]

LKB_3_ROWS = [
    [
        [X ** 4, ZERO, ZERO],
        [-(X ** 3), -(X ** 2), ZERO],
        [X ** 2, 2 * X, ONE],
    ],
    [
        [ONE, 2 * X, X ** 2],
        [ZERO, -(X ** 2), -(X ** 3)],
        [ZERO, ZERO, X ** 4],
    ],
]

INHOMOGENEOUS_METADATA = {
    'n': 3,
    'N': 1,
    'convention': 'column',
    'basis': ['w1^(3)', 'w1^(2)', 'w1^(1)', 'w2^(3)', 'w2^(2)', 'w2^(1)'],
}


def lkb_3():
    """The printed matrices in column convention."""
    return [[list(row) for row in zip(*matrix)] for matrix in LKB_3_ROWS]


def phases(common, distinguished, q):
    """(d1, d2, d3) for the printed two-label matrices."""
    q = NumericScalar(q)
    g1, c1 = NumericScalar(common.gamma), NumericScalar(common.c)
    g2, c2 = NumericScalar(distinguished.gamma), NumericScalar(distinguished.c)
    d1 = q ** (-2 * c1 * g1)
    d2 = q ** -(c2 * g1 + c1 * g2)
    d3 = (q_number(common.gamma, q) / q_number(distinguished.gamma, q)).sqrt()
    return d1, d2, d3


def inhomogeneous_3(common, distinguished, q):
    q = NumericScalar(q)
    g1, g2 = NumericScalar(common.gamma), NumericScalar(distinguished.gamma)
    d1, d2, d3 = phases(common, distinguished, q)
    z = NumericScalar(0)
    both = q ** -(g1 + g2)
    sigma_1 = [
        [-d1 * q ** (-2 * g1), z, z, d1 / d3 * q ** -g1, z, z],
        [z, z, -d2 * both, z, z, d2 * d3 * q ** -g2],
        [z, -d2 * both, z, z, d2 * q ** -g1, z],
        [z, z, z, d1, z, z],
        [z, z, z, z, z, d2 * d3],
        [z, z, z, z, d2 / d3, z],
    ]
    sigma_2 = [
        [z, d2 / d3, z, z, z, z],
        [d2 * d3, z, z, z, z, z],
        [z, z, d1, z, z, z],
        [z, d2 * q ** -g1, z, z, -d2 * both, z],
        [d2 * d3 * q ** -g2, z, z, -d2 * both, z, z],
        [z, z, d1 / d3 * q ** -g1, z, z, -d1 * q ** (-2 * g1)],
    ]
    return [sigma_1, sigma_2]
