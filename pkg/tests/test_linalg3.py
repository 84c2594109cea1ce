import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import V, fields, scalars, vectors
from ratrig.errors import FieldMismatch
from ratrig.exactfield import QQ, FieldSpec
from ratrig.linalg3 import Mat3, Vec3, adjugate, cross, det, dot, matmul, transpose


def M(*rows, spec=QQ):
    return Mat3.from_rows(spec, rows)


def to_lists(m):
    return [[c.value for c in r] for r in m.rows]


def test_det_example():
    # Leibniz expansion gives -13 for these rows.
    m = M((2, -1, 3), (-2, 5, 0), (3, 0, 4))
    assert det(m) == -13
    assert oracles.det(oracles.frac_mat([(2, -1, 3), (-2, 5, 0), (3, 0, 4)])) == -13


def test_det_basics():
    assert det(Mat3.identity(QQ)) == 1
    assert det(Mat3.diag(QQ, 1, 1, -1)) == -1
    assert det(M((1, 2, 3), (2, 4, 6), (0, 1, 1))) == 0


def test_cross_examples():
    assert cross(V(1, 0, 0), V(0, 1, 0)) == V(0, 0, 1)
    assert cross(V(-1, 3, -2), V(2, -5, 4)) == V(2, 0, -1)
    assert cross(V(1, 2, 3), V(2, 4, 6)).is_zero()


def test_adjugate_examples():
    assert adjugate(Mat3.diag(QQ, 2, 3, 4)) == Mat3.diag(QQ, 12, 8, 6)
    assert adjugate(Mat3.diag(QQ, 1, 1, -1)) == Mat3.diag(QQ, -1, -1, 1)
    singular = M((1, 2, 3), (2, 4, 6), (0, 1, 1))
    assert to_lists(adjugate(singular)) == oracles.adjugate(oracles.frac_mat(to_lists(singular)))


def test_vecmat_row_convention():
    m = M((1, 2, 3), (4, 5, 6), (7, 8, 9))
    assert V(1, 0, 0) @ m == V(1, 2, 3)
    assert V(0, 0, 1) @ m == V(7, 8, 9)


def test_field_mismatch():
    F5 = FieldSpec.prime(5)
    with pytest.raises(FieldMismatch):
        Vec3(QQ(1), F5(1), QQ(0))
    with pytest.raises(FieldMismatch):
        V(1, 2, 3) + V(1, 2, 3, spec=F5)


def test_basis_and_transpose():
    assert Vec3.basis(QQ, 2) == V(0, 1, 0)
    m = M((1, 2, 3), (4, 5, 6), (7, 8, 9))
    assert transpose(m) == M((1, 4, 7), (2, 5, 8), (3, 6, 9))
    assert m[1, 2] == 6 and m.column(0) == V(1, 4, 7)


@st.composite
def matrices(draw, spec):
    return Mat3(*(draw(vectors(spec)) for _ in range(3)))


@given(st.data(), fields)
def test_det_and_adjugate_match_oracle(data, spec):
    m = data.draw(matrices(spec))
    if spec.is_prime:
        ref = oracles.det([[c.value for c in r] for r in m.rows])
        assert det(m) == int(ref) % spec.p
        adj_ref = oracles.adjugate([[c.value for c in r] for r in m.rows])
        assert adjugate(m) == Mat3.from_rows(spec, [[int(x) for x in r] for r in adj_ref])
    else:
        assert det(m) == oracles.det(to_lists(m))
        assert to_lists(adjugate(m)) == oracles.adjugate(to_lists(m))


@given(st.data(), fields)
def test_adjugate_is_det_times_identity(data, spec):
    m = data.draw(matrices(spec))
    d = det(m) * Mat3.identity(spec)
    assert matmul(m, adjugate(m)) == d
    assert matmul(adjugate(m), m) == d


@given(st.data(), fields)
def test_cross_matches_levi_civita(data, spec):
    v, w = data.draw(vectors(spec)), data.draw(vectors(spec))
    if spec.is_prime:
        ref = oracles.cross([c.value for c in v], [c.value for c in w])
        assert cross(v, w) == Vec3.of(spec, *(int(x) for x in ref))
    else:
        assert [c.value for c in cross(v, w)] == oracles.cross([c.value for c in v], [c.value for c in w])
    assert dot(v, cross(v, w)).is_zero()


@given(st.data(), fields)
def test_vector_space_laws(data, spec):
    u, v = data.draw(vectors(spec)), data.draw(vectors(spec))
    k = data.draw(scalars(spec))
    assert (u + v) * k == u * k + v * k
    assert k * u == u * k
    assert u - u == Vec3.zero(spec)
    assert -(u + v) == -u - v
