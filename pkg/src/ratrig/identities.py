"""Catalogue of algebraic identities checked by the verification sweeps.

Each :class:`Identity` has a signature naming the kind of each argument:
``v`` a vector, ``s`` any scalar, ``n`` a nonzero scalar. ``pre`` says
whether the hypotheses hold and ``law`` whether the identity does. Both are
written with ``&`` / ``|`` / ``==`` on masks instead of ``and`` / ``if`` so
that they evaluate unchanged on single values (giving bools) and on
:class:`~ratrig.exactfield.FieldArray` batches (giving bool arrays). ``law``
is only ever called on arguments that satisfy ``pre``.

Every identity compares a quantity computed from its definition against a
closed form or a second route; nothing here is checked against itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .affine_trig import archimedes, spread
from .exactfield import not_
from .linalg3 import Mat3, Vec3, adjugate, det, dot, transpose
from .metric import (
    b_cross,
    b_dot,
    induced_form,
    quadrance,
    reciprocal_basis,
    scalar_quadruple,
    scalar_triple,
    vector_quadruple,
    vector_triple,
)
from .projective_trig import ProjectivePoint, Tripod, dual_tripod, second_pythagoras_spread

__all__ = ["Identity", "CATALOGUE", "by_name"]


@dataclass(frozen=True)
class Identity:
    name: str
    signature: str
    law: Callable
    pre: Callable | None = None

    @property
    def arity(self) -> int:
        return len(self.signature)


def _nz(x):
    return not_(x.is_zero())


def _vnz(v: Vec3):
    return not_(v.is_zero())


def _rows(a, b, c) -> Mat3:
    return Mat3(a, b, c)


def _scaled_identity(M: Mat3, k) -> Mat3:
    one = M.spec.one
    zero = M.spec.zero
    return Mat3(Vec3(one, zero, zero), Vec3(zero, one, zero), Vec3(zero, zero, one)) * k


# -- adjugates and the B-vector product ---------------------------------------


def _adjugate_product(B, a, b, c, d, e, f):
    M, N = _rows(a, b, c), _rows(d, e, f)
    return adjugate(M @ N).equals(adjugate(N) @ adjugate(M))


def _adjugate_determinant(B, a, b, c):
    M = _rows(a, b, c)
    A = adjugate(M)
    D = _scaled_identity(M, det(M))
    return (M @ A).equals(D) & (A @ M).equals(D)


def _adjugate_involution(B, a, b, c):
    M = _rows(a, b, c)
    return adjugate(adjugate(M)).equals(M * det(M))


def _adjugate_vector_product(B, v1, v2, v3):
    M = _rows(v1, v2, v3)
    cols = transpose(_rows(b_cross(B, v2, v3), b_cross(B, v3, v1), b_cross(B, v1, v2)))
    return adjugate(M @ B.matrix).equals(cols)


# -- triple products ----------------------------------------------------------


def _scalar_triple_product(B, v1, v2, v3):
    return scalar_triple(B, v1, v2, v3) == B.det * det(_rows(v1, v2, v3))


def _perpendicularity(B, v, w):
    n = b_cross(B, v, w)
    return b_dot(B, v, n).is_zero() & b_dot(B, w, n).is_zero()


def _permutation_law(B, v1, v2, v3):
    t = scalar_triple(B, v1, v2, v3)
    return (
        (t == scalar_triple(B, v2, v3, v1))
        & (t == scalar_triple(B, v3, v1, v2))
        & (t == -scalar_triple(B, v1, v3, v2))
        & (t == -scalar_triple(B, v2, v1, v3))
        & (t == -scalar_triple(B, v3, v2, v1))
    )


def _lagrange_formula(B, v1, v2, v3):
    closed = (v2 * b_dot(B, v1, v3) - v3 * b_dot(B, v1, v2)) * B.det
    return vector_triple(B, v1, v2, v3).equals(closed)


def _vector_triple_antisymmetry(B, v1, v2, v3):
    return vector_triple(B, v1, v2, v3).equals(-vector_triple(B, v1, v3, v2))


def _jacobi(B, v1, v2, v3):
    total = vector_triple(B, v1, v2, v3) + vector_triple(B, v2, v3, v1) + vector_triple(B, v3, v1, v2)
    return total.is_zero()


# -- quadruple products -------------------------------------------------------


def _binet_cauchy(B, v1, v2, v3, v4):
    closed = B.det * (b_dot(B, v1, v3) * b_dot(B, v2, v4) - b_dot(B, v1, v4) * b_dot(B, v2, v3))
    return scalar_quadruple(B, v1, v2, v3, v4) == closed


def _lagrange_identity(B, v, w):
    d = b_dot(B, v, w)
    return quadrance(B, b_cross(B, v, w)) == B.det * (quadrance(B, v) * quadrance(B, w) - d * d)


def _quadruple_cyclic_sum(B, v1, v2, v3, v4):
    total = (
        scalar_quadruple(B, v1, v2, v3, v4)
        + scalar_quadruple(B, v2, v3, v1, v4)
        + scalar_quadruple(B, v3, v1, v2, v4)
    )
    return total.is_zero()


def _vector_quadruple_first(B, v1, v2, v3, v4):
    closed = (v3 * scalar_triple(B, v1, v2, v4) - v4 * scalar_triple(B, v1, v2, v3)) * B.det
    return vector_quadruple(B, v1, v2, v3, v4).equals(closed)


def _vector_quadruple_second(B, v1, v2, v3, v4):
    closed = (v2 * scalar_triple(B, v1, v3, v4) - v1 * scalar_triple(B, v2, v3, v4)) * B.det
    return vector_quadruple(B, v1, v2, v3, v4).equals(closed)


def _four_vector_relation(B, v1, v2, v3, v4):
    total = (
        v1 * scalar_triple(B, v2, v3, v4)
        - v2 * scalar_triple(B, v1, v3, v4)
        + v3 * scalar_triple(B, v1, v2, v4)
        - v4 * scalar_triple(B, v1, v2, v3)
    )
    return total.is_zero()


def _common_vector(B, v1, v2, v3):
    closed = v1 * (B.det * scalar_triple(B, v1, v2, v3))
    return vector_quadruple(B, v1, v2, v1, v3).equals(closed)


def _plane_meet_pre(B, v1, v2, v3, v4):
    # Two genuine planes, and different ones.
    planes = _vnz(v1.cross(v2)) & _vnz(v3.cross(v4))
    differ = _nz(det(_rows(v1, v2, v3))) | _nz(det(_rows(v1, v2, v4)))
    return planes & differ


def _plane_meet(B, v1, v2, v3, v4):
    w = vector_quadruple(B, v1, v2, v3, v4)
    in_u = det(_rows(v1, v2, w)).is_zero()
    in_v = det(_rows(v3, v4, w)).is_zero()
    return _vnz(w) & in_u & in_v


def _triple_scalar_of_products(B, v1, v2, v3):
    lhs = scalar_triple(B, b_cross(B, v2, v3), b_cross(B, v3, v1), b_cross(B, v1, v2))
    t = scalar_triple(B, v1, v2, v3)
    return lhs == B.det * t * t


# -- reciprocal bases ---------------------------------------------------------


def _independent(B, v1, v2, v3):
    return _nz(scalar_triple(B, v1, v2, v3))


def _reciprocal_cross_sum(B, v1, v2, v3):
    w1, w2, w3 = reciprocal_basis(B, v1, v2, v3)
    total = b_cross(B, v1, w1) + b_cross(B, v2, w2) + b_cross(B, v3, w3)
    return total.is_zero()


def _reciprocal_dot_sum(B, v1, v2, v3):
    w1, w2, w3 = reciprocal_basis(B, v1, v2, v3)
    return b_dot(B, v1, w1) + b_dot(B, v2, w2) + b_dot(B, v3, w3) == 3


def _reciprocal_triple_product(B, v1, v2, v3):
    w1, w2, w3 = reciprocal_basis(B, v1, v2, v3)
    return scalar_triple(B, v1, v2, v3) * scalar_triple(B, w1, w2, w3) == B.det


def _reciprocal_recovery(B, v1, v2, v3):
    w1, w2, w3 = reciprocal_basis(B, v1, v2, v3)
    tw = scalar_triple(B, w1, w2, w3)
    return (
        v1.equals(b_cross(B, w2, w3) / tw)
        & v2.equals(b_cross(B, w3, w1) / tw)
        & v3.equals(b_cross(B, w1, w2) / tw)
    )


# -- quadrance basics ---------------------------------------------------------


def _polarisation(B, v, w):
    d = b_dot(B, v, w)
    qv, qw = quadrance(B, v), quadrance(B, w)
    return (d == (quadrance(B, v + w) - qv - qw) / 2) & (d == (qv + qw - quadrance(B, v - w)) / 2)


def _quadrance_scaling(B, v, lam):
    return quadrance(B, v * lam) == lam * lam * quadrance(B, v)


def _induced_pre(B, a, b, c, v, w):
    return _nz(det(_rows(a, b, c)))


def _induced_form(B, a, b, c, v, w):
    L = _rows(a, b, c)
    return dot(v @ L, w @ L) == b_dot(induced_form(L), v, w)


# -- vector triangles ---------------------------------------------------------


def _triangle(v1, v2):
    return v1, v2, -(v1 + v2)


def _triangle_quadrances(B, v1, v2):
    u1, u2, u3 = _triangle(v1, v2)
    return quadrance(B, u1), quadrance(B, u2), quadrance(B, u3)


def _quadrea_theorem(B, v1, v2):
    u1, u2, u3 = _triangle(v1, v2)
    target = B.det * archimedes(*_triangle_quadrances(B, v1, v2)) / 4
    return (
        (quadrance(B, b_cross(B, u1, u2)) == target)
        & (quadrance(B, b_cross(B, u2, u3)) == target)
        & (quadrance(B, b_cross(B, u3, u1)) == target)
    )


def _s3_defined(B, v1, v2):
    return _nz(quadrance(B, v1)) & _nz(quadrance(B, v2))


def _cross_law(B, v1, v2):
    Q1, Q2, Q3 = _triangle_quadrances(B, v1, v2)
    s3 = spread(B, v1, v2)
    lhs = Q1 + Q2 - Q3
    return lhs * lhs == 4 * Q1 * Q2 * (1 - s3)


def _quadrea_spread(B, v1, v2):
    Q1, Q2, Q3 = _triangle_quadrances(B, v1, v2)
    return archimedes(Q1, Q2, Q3) == 4 * Q1 * Q2 * spread(B, v1, v2)


def _all_spreads_defined(B, v1, v2):
    Q1, Q2, Q3 = _triangle_quadrances(B, v1, v2)
    return _nz(Q1) & _nz(Q2) & _nz(Q3)


def _triangle_spreads(B, v1, v2):
    u1, u2, u3 = _triangle(v1, v2)
    return spread(B, u2, u3), spread(B, u1, u3), spread(B, u1, u2)


def _spread_law(B, v1, v2):
    Q1, Q2, Q3 = _triangle_quadrances(B, v1, v2)
    s1, s2, s3 = _triangle_spreads(B, v1, v2)
    ratio = archimedes(Q1, Q2, Q3) / (4 * Q1 * Q2 * Q3)
    return (s1 / Q1 == ratio) & (s2 / Q2 == ratio) & (s3 / Q3 == ratio)


def _triple_spread(B, v1, v2):
    s1, s2, s3 = _triangle_spreads(B, v1, v2)
    total = s1 + s2 + s3
    return total * total == 2 * (s1 * s1 + s2 * s2 + s3 * s3) + 4 * s1 * s2 * s3


def _triple_quad(B, v, lam):
    # The degenerate triangle v, lam v, -(1 + lam) v.
    Q1, Q2, Q3 = _triangle_quadrances(B, v, v * lam)
    total = Q1 + Q2 + Q3
    return total * total == 2 * (Q1 * Q1 + Q2 * Q2 + Q3 * Q3)


def _pythagoras(B, v1, v2):
    Q1, Q2, Q3 = _triangle_quadrances(B, v1, v2)
    return (spread(B, v1, v2) == 1) == (Q1 + Q2 == Q3)


def _right_pair(B, v1, v2):
    return v1, b_cross(B, v1, v2)


def _pythagoras_right_pre(B, v1, v2):
    return _s3_defined(B, *_right_pair(B, v1, v2))


def _pythagoras_right_angle(B, v1, v2):
    u1, u2 = _right_pair(B, v1, v2)
    Q1, Q2, Q3 = _triangle_quadrances(B, u1, u2)
    return (spread(B, u1, u2) == 1) & (Q1 + Q2 == Q3)


def _spread_scale_pre(B, v, w, lam, mu):
    return _nz(quadrance(B, v)) & _nz(quadrance(B, w))


def _spread_scale_invariance(B, v, w, lam, mu):
    return spread(B, v * lam, w * mu) == spread(B, v, w)


# -- tripods ------------------------------------------------------------------
#
# Projective quantities below are computed from raw (unnormalised) vectors:
# q_i from the spread of the other two vectors, the dual vectors as raw
# B-vector products, and S_i from spreads of those.


def _nondegenerate(B, v1, v2, v3):
    return _nz(det(_rows(v1, v2, v3)))


def _raw_dual(B, v1, v2, v3):
    return b_cross(B, v2, v3), b_cross(B, v1, v3), b_cross(B, v1, v2)


def _full_tripod(B, v1, v2, v3):
    """Nondegenerate, with no null point and no null dual point."""
    ok = _nondegenerate(B, v1, v2, v3)
    for v in (v1, v2, v3) + _raw_dual(B, v1, v2, v3):
        ok = ok & _nz(quadrance(B, v))
    return ok


def _opposite_spreads(B, u1, u2, u3):
    return spread(B, u2, u3), spread(B, u1, u3), spread(B, u1, u2)


def _measures(B, v1, v2, v3):
    q = _opposite_spreads(B, v1, v2, v3)
    S = _opposite_spreads(B, *_raw_dual(B, v1, v2, v3))
    return q, S


def _quadrea(q, S):
    return S[0] * q[1] * q[2]


def _quadreal(q, S):
    return q[0] * S[1] * S[2]


def _class_invariance_pre(B, v1, v2, v3, lam):
    return _full_tripod(B, v1, v2, v3)


def _class_invariance(B, v1, v2, v3, lam):
    u1, u2, u3 = v1 * lam, v2 * (lam * lam), v3 * (lam * lam * lam)
    q, S = _measures(B, v1, v2, v3)
    qs, Ss = _measures(B, u1, u2, u3)
    ok = ProjectivePoint(v1).equals(ProjectivePoint(u1))
    for a, b in zip(q + S, qs + Ss):
        ok = ok & (a == b)
    for r, rs in zip(_raw_dual(B, v1, v2, v3), _raw_dual(B, u1, u2, u3)):
        ok = ok & ProjectivePoint(r).equals(ProjectivePoint(rs))
    return ok


def _duality_involution(B, v1, v2, v3):
    T = Tripod(v1, v2, v3)
    D = dual_tripod(B, dual_tripod(B, T))
    return D.p1.equals(T.p1) & D.p2.equals(T.p2) & D.p3.equals(T.p3)


def _projective_spread_law(B, v1, v2, v3):
    # A full tripod has every q_i nonzero: q_i vanishes exactly when the
    # B-vector product of the other two points is null.
    q, S = _measures(B, v1, v2, v3)
    t = scalar_triple(B, v1, v2, v3)
    num = B.det * B.det * t * t * quadrance(B, v1) * quadrance(B, v2) * quadrance(B, v3)
    den = (
        quadrance(B, b_cross(B, v1, v2))
        * quadrance(B, b_cross(B, v1, v3))
        * quadrance(B, b_cross(B, v2, v3))
    )
    closed = num / den
    return (S[0] / q[0] == closed) & (S[1] / q[1] == closed) & (S[2] / q[2] == closed)


def _quadrea_symmetry(B, v1, v2, v3):
    q, S = _measures(B, v1, v2, v3)
    a = S[0] * q[1] * q[2]
    return (a == S[1] * q[0] * q[2]) & (a == S[2] * q[0] * q[1])


def _quadreal_symmetry(B, v1, v2, v3):
    q, S = _measures(B, v1, v2, v3)
    l_ = q[0] * S[1] * S[2]
    return (l_ == q[1] * S[0] * S[2]) & (l_ == q[2] * S[0] * S[1])


def _projective_cross_law(B, v1, v2, v3):
    q, S = _measures(B, v1, v2, v3)
    q1, q2, q3 = q
    lhs = _quadrea(q, S) - q1 - q2 - q3 + 2
    return lhs * lhs == 4 * (1 - q1) * (1 - q2) * (1 - q3)


def _asymmetric(i):
    j, k = [(1, 2), (0, 2), (0, 1)][i]

    def law(B, v1, v2, v3):
        q, S = _measures(B, v1, v2, v3)
        lhs = S[i] * q[j] * q[k] + q[i] - q[j] - q[k]
        return lhs * lhs == 4 * q[j] * q[k] * (1 - q[i]) * (1 - S[i])

    return law


def _quadrea_quadreal_product(B, v1, v2, v3):
    q, S = _measures(B, v1, v2, v3)
    return _quadrea(q, S) * _quadreal(q, S) == q[0] * q[1] * q[2] * S[0] * S[1] * S[2]


def _projective_pythagoras(B, v1, v2, v3):
    # S1 = 1 implies 1 - q1 = (1 - q2)(1 - q3), and likewise at each vertex.
    q, S = _measures(B, v1, v2, v3)
    ok = None
    for i, (j, k) in enumerate([(1, 2), (0, 2), (0, 1)]):
        holds = (S[i] != 1) | (1 - q[i] == (1 - q[j]) * (1 - q[k]))
        ok = holds if ok is None else ok & holds
    return ok


def _right_tripod(B, v1, v2):
    return v1, v2, b_cross(B, v1, v2)


def _projective_pythagoras_constructed_pre(B, v1, v2):
    return _full_tripod(B, *_right_tripod(B, v1, v2))


def _projective_pythagoras_constructed(B, v1, v2):
    q, S = _measures(B, *_right_tripod(B, v1, v2))
    return (S[0] == 1) & (1 - q[0] == (1 - q[1]) * (1 - q[2]))


def _collinear_tripod(v1, v2, a, b):
    return v1, v2, v1 * a + v2 * b


def _projective_triple_quad_pre(B, v1, v2, a, b):
    u1, u2, u3 = _collinear_tripod(v1, v2, a, b)
    ok = _vnz(u1.cross(u2)) & _vnz(u1.cross(u3)) & _vnz(u2.cross(u3))
    for u in (u1, u2, u3):
        ok = ok & _nz(quadrance(B, u))
    return ok


def _projective_triple_quad(B, v1, v2, a, b):
    q1, q2, q3 = _opposite_spreads(B, *_collinear_tripod(v1, v2, a, b))
    total = q1 + q2 + q3
    return total * total == 2 * (q1 * q1 + q2 * q2 + q3 * q3) + 4 * q1 * q2 * q3


def _duality_exchange(B, v1, v2, v3):
    q, S = _measures(B, v1, v2, v3)
    dq, dS = _measures(B, *_raw_dual(B, v1, v2, v3))
    ok = (_quadrea(dq, dS) == _quadreal(q, S)) & (_quadreal(dq, dS) == _quadrea(q, S))
    for i in range(3):
        ok = ok & (dq[i] == S[i]) & (dS[i] == q[i])
    return ok


def _pythagoras_second_solution(B, q2, q3):
    q1 = q2 + q3 - q2 * q3
    ok = None
    for S1 in (q1.spec.one, second_pythagoras_spread(q2, q3)):
        lhs = S1 * q2 * q3 + q1 - q2 - q3
        holds = lhs * lhs == 4 * q2 * q3 * (1 - q1) * (1 - S1)
        ok = holds if ok is None else ok & holds
    return ok


CATALOGUE: tuple[Identity, ...] = (
    Identity("adjugate_product", "vvvvvv", _adjugate_product),
    Identity("adjugate_determinant", "vvv", _adjugate_determinant),
    Identity("adjugate_involution", "vvv", _adjugate_involution),
    Identity("adjugate_vector_product", "vvv", _adjugate_vector_product),
    Identity("scalar_triple_product", "vvv", _scalar_triple_product),
    Identity("perpendicularity", "vv", _perpendicularity),
    Identity("permutation_law", "vvv", _permutation_law),
    Identity("lagrange_formula", "vvv", _lagrange_formula),
    Identity("vector_triple_antisymmetry", "vvv", _vector_triple_antisymmetry),
    Identity("jacobi_identity", "vvv", _jacobi),
    Identity("binet_cauchy", "vvvv", _binet_cauchy),
    Identity("lagrange_identity", "vv", _lagrange_identity),
    Identity("quadruple_cyclic_sum", "vvvv", _quadruple_cyclic_sum),
    Identity("vector_quadruple_first", "vvvv", _vector_quadruple_first),
    Identity("vector_quadruple_second", "vvvv", _vector_quadruple_second),
    Identity("four_vector_relation", "vvvv", _four_vector_relation),
    Identity("common_vector", "vvv", _common_vector),
    Identity("plane_meet", "vvvv", _plane_meet, _plane_meet_pre),
    Identity("triple_scalar_of_products", "vvv", _triple_scalar_of_products),
    Identity("reciprocal_cross_sum", "vvv", _reciprocal_cross_sum, _independent),
    Identity("reciprocal_dot_sum", "vvv", _reciprocal_dot_sum, _independent),
    Identity("reciprocal_triple_product", "vvv", _reciprocal_triple_product, _independent),
    Identity("reciprocal_recovery", "vvv", _reciprocal_recovery, _independent),
    Identity("polarisation", "vv", _polarisation),
    Identity("quadrance_scaling", "vs", _quadrance_scaling),
    Identity("induced_form", "vvvvv", _induced_form, _induced_pre),
    Identity("quadrea_theorem", "vv", _quadrea_theorem),
    Identity("cross_law", "vv", _cross_law, _s3_defined),
    Identity("quadrea_spread", "vv", _quadrea_spread, _s3_defined),
    Identity("spread_law", "vv", _spread_law, _all_spreads_defined),
    Identity("triple_spread", "vv", _triple_spread, _all_spreads_defined),
    Identity("triple_quad", "vs", _triple_quad),
    Identity("pythagoras", "vv", _pythagoras, _s3_defined),
    Identity("pythagoras_right_angle", "vv", _pythagoras_right_angle, _pythagoras_right_pre),
    Identity("spread_scale_invariance", "vvnn", _spread_scale_invariance, _spread_scale_pre),
    Identity("projective_class_invariance", "vvvn", _class_invariance, _class_invariance_pre),
    Identity("duality_involution", "vvv", _duality_involution, _nondegenerate),
    Identity("projective_spread_law", "vvv", _projective_spread_law, _full_tripod),
    Identity("quadrea_symmetry", "vvv", _quadrea_symmetry, _full_tripod),
    Identity("quadreal_symmetry", "vvv", _quadreal_symmetry, _full_tripod),
    Identity("projective_cross_law", "vvv", _projective_cross_law, _full_tripod),
    Identity("asymmetric_cross_law_1", "vvv", _asymmetric(0), _full_tripod),
    Identity("asymmetric_cross_law_2", "vvv", _asymmetric(1), _full_tripod),
    Identity("asymmetric_cross_law_3", "vvv", _asymmetric(2), _full_tripod),
    Identity("quadrea_quadreal_product", "vvv", _quadrea_quadreal_product, _full_tripod),
    Identity("projective_pythagoras", "vvv", _projective_pythagoras, _full_tripod),
    Identity(
        "projective_pythagoras_constructed",
        "vv",
        _projective_pythagoras_constructed,
        _projective_pythagoras_constructed_pre,
    ),
    Identity("projective_triple_quad", "vvss", _projective_triple_quad, _projective_triple_quad_pre),
    Identity("duality_exchange", "vvv", _duality_exchange, _full_tripod),
    Identity("pythagoras_second_solution", "nn", _pythagoras_second_solution),
)

_BY_NAME = {ident.name: ident for ident in CATALOGUE}


def by_name(name: str) -> Identity:
    return _BY_NAME[name]
