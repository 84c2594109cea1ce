"""Brute-force reference computations on plain Fractions and lists.

These never touch the package, so tests comparing against them are
independent checks rather than restatements of the implementation.
"""

from fractions import Fraction
from itertools import permutations


def perm_sign(perm):
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            if seen[i] > seen[j]:
                sign = -sign
    return sign


def det(m):
    """Leibniz expansion over all permutations."""
    total = Fraction(0)
    for perm in permutations(range(3)):
        term = Fraction(perm_sign(perm))
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += term
    return total


def minor(m, i, j):
    rows = [r for k, r in enumerate(m) if k != i]
    return [[x for k, x in enumerate(r) if k != j] for r in rows]


def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def adjugate(m):
    """Transpose of the cofactor matrix."""
    cof = [[(-1) ** (i + j) * det2(minor(m, i, j)) for j in range(3)] for i in range(3)]
    return [[cof[j][i] for j in range(3)] for i in range(3)]


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def vecmat(v, m):
    return [sum(v[k] * m[k][j] for k in range(3)) for j in range(3)]


def form(B, v, w):
    """Double sum over entries: sum_ij v_i B_ij w_j."""
    return sum(v[i] * B[i][j] * w[j] for i in range(3) for j in range(3))


def cross(v, w):
    """Cross product from the Levi-Civita symbol."""
    out = [Fraction(0)] * 3
    for i, j, k in permutations(range(3)):
        out[i] += perm_sign((i, j, k)) * v[j] * w[k]
    return out


def b_cross(B, v, w):
    return vecmat(cross(v, w), adjugate(B))


def spread(B, v, w):
    return 1 - form(B, v, w) ** 2 / (form(B, v, v) * form(B, w, w))


def frac_vec(v):
    return [Fraction(x) for x in v]


def frac_mat(m):
    return [[Fraction(x) for x in r] for r in m]
