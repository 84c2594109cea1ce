"""Scalar and vector products relative to a symmetric bilinear form B.

With ``adj B`` the adjugate of B::

    v .B w   = v B w^T
    Q_B(v)   = v .B v
    v xB w   = (v x w) adj B
    [v1,v2,v3]_B       = v1 .B (v2 xB v3)
    <v1,v2,v3>_B       = v1 xB (v2 xB v3)
    [v1,v2;v3,v4]_B    = (v1 xB v2) .B (v3 xB v4)
    <v1,v2;v3,v4>_B    = (v1 xB v2) xB (v3 xB v4)

Every product is computed from these definitions. Their closed forms
(determinants, Lagrange's formula, Binet-Cauchy, ...) are checked in
:mod:`ratrig.identities`, not used here.
"""

from __future__ import annotations

from .errors import DegenerateBasis, DegenerateForm, SingularTransform
from .exactfield import FieldSpec, all_of, any_of
from .linalg3 import Mat3, Vec3, adjugate, cross, det, transpose

__all__ = [
    "BilinearForm",
    "b_dot",
    "quadrance",
    "is_null",
    "is_perp",
    "b_cross",
    "scalar_triple",
    "vector_triple",
    "scalar_quadruple",
    "vector_quadruple",
    "reciprocal_basis",
    "induced_form",
    "b_quadrance",
    "is_b_null",
    "is_b_perp",
]


class BilinearForm:
    """A non-degenerate symmetric bilinear form, given by its matrix.

    The determinant and adjugate are computed once at construction. Entries
    follow the layout::

        a1 b3 b2        alpha1 beta3 beta2
        b3 a2 b1        beta3 alpha2 beta1     (adjugate)
        b2 b1 a3        beta2 beta1 alpha3
    """

    __slots__ = ("matrix", "det", "adjugate", "name")

    def __init__(self, matrix: Mat3, name: str | None = None):
        if not all_of(matrix.is_symmetric()):
            raise DegenerateForm("bilinear form matrix must be symmetric")
        d = det(matrix)
        if any_of(d.is_zero()):
            raise DegenerateForm("bilinear form is degenerate (det B = 0)")
        self.matrix = matrix
        self.det = d
        self.adjugate = adjugate(matrix)
        self.name = name

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows) -> BilinearForm:
        return cls(Mat3.from_rows(spec, rows))

    @classmethod
    def euclidean(cls, spec: FieldSpec) -> BilinearForm:
        return cls(Mat3.identity(spec), name="euclidean")

    @classmethod
    def minkowski(cls, spec: FieldSpec) -> BilinearForm:
        """The relativistic form diag(1, 1, -1)."""
        return cls(Mat3.diag(spec, 1, 1, -1), name="minkowski")

    @property
    def spec(self) -> FieldSpec:
        return self.matrix.spec

    @property
    def a(self):
        """Diagonal entries (a1, a2, a3)."""
        m = self.matrix
        return m[0, 0], m[1, 1], m[2, 2]

    @property
    def b(self):
        """Off-diagonal entries (b1, b2, b3)."""
        m = self.matrix
        return m[1, 2], m[0, 2], m[0, 1]

    @property
    def alpha(self):
        m = self.adjugate
        return m[0, 0], m[1, 1], m[2, 2]

    @property
    def beta(self):
        m = self.adjugate
        return m[1, 2], m[0, 2], m[0, 1]

    def __eq__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self) -> str:
        if self.name:
            return f"BilinearForm.{self.name}({self.spec})"
        return f"BilinearForm({self.matrix!r})"


def b_dot(B: BilinearForm, v: Vec3, w: Vec3):
    """The B-scalar product v B w^T."""
    return (v @ B.matrix).dot(w)


def quadrance(B: BilinearForm, v: Vec3):
    return b_dot(B, v, v)


def is_null(B: BilinearForm, v: Vec3):
    return quadrance(B, v).is_zero()


def is_perp(B: BilinearForm, v: Vec3, w: Vec3):
    return b_dot(B, v, w).is_zero()


def b_cross(B: BilinearForm, v: Vec3, w: Vec3) -> Vec3:
    """The B-vector product (v x w) adj B; zero when v, w are dependent."""
    return cross(v, w) @ B.adjugate


def scalar_triple(B: BilinearForm, v1: Vec3, v2: Vec3, v3: Vec3):
    return b_dot(B, v1, b_cross(B, v2, v3))


def vector_triple(B: BilinearForm, v1: Vec3, v2: Vec3, v3: Vec3) -> Vec3:
    return b_cross(B, v1, b_cross(B, v2, v3))


def scalar_quadruple(B: BilinearForm, v1: Vec3, v2: Vec3, v3: Vec3, v4: Vec3):
    return b_dot(B, b_cross(B, v1, v2), b_cross(B, v3, v4))


def vector_quadruple(B: BilinearForm, v1: Vec3, v2: Vec3, v3: Vec3, v4: Vec3) -> Vec3:
    return b_cross(B, b_cross(B, v1, v2), b_cross(B, v3, v4))


def reciprocal_basis(B: BilinearForm, v1: Vec3, v2: Vec3, v3: Vec3) -> tuple[Vec3, Vec3, Vec3]:
    """w_i = (v_j xB v_k) / [v1, v2, v3]_B for (i, j, k) cyclic.

    Raises DegenerateBasis when the vectors are linearly dependent.
    """
    t = scalar_triple(B, v1, v2, v3)
    if any_of(t.is_zero()):
        raise DegenerateBasis("vectors are linearly dependent ([v1,v2,v3]_B = 0)")
    k = t.inv()
    return b_cross(B, v2, v3) * k, b_cross(B, v3, v1) * k, b_cross(B, v1, v2) * k


def induced_form(L: Mat3) -> BilinearForm:
    """The form B = L L^T, so that (vL).(wL) = v .B w."""
    if any_of(det(L).is_zero()):
        raise SingularTransform("transform matrix is singular")
    return BilinearForm(L @ transpose(L))


# Long-form names.
b_quadrance = quadrance
is_b_null = is_null
is_b_perp = is_perp
