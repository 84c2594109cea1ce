"""Row vectors and 3x3 matrices over an exact field.

Vectors are rows: they multiply matrices from the left (``v @ M``), so a
bilinear form evaluates as ``(v @ B).dot(w)``. There is no column-vector API.

Components may be :class:`~ratrig.exactfield.FieldElement` or
:class:`~ratrig.exactfield.FieldArray`; in the latter case a ``Vec3`` is a
batch of vectors and every function here works elementwise.
"""

from __future__ import annotations

from collections.abc import Iterable

from .errors import FieldMismatch
from .exactfield import FieldArray, FieldElement, FieldSpec, all_of

__all__ = [
    "Vec3",
    "Mat3",
    "cross",
    "dot",
    "det",
    "adjugate",
    "transpose",
    "matmul",
    "vecmat",
]


def _spec_of(*scalars) -> FieldSpec:
    spec = scalars[0].spec
    for s in scalars[1:]:
        if s.spec is not spec and s.spec != spec:
            raise FieldMismatch(f"mixed fields {spec} and {s.spec}")
    return spec


def _select(s, mask):
    return s.compress(mask) if isinstance(s, FieldArray) else s


class Vec3:
    """Row vector (x, y, z) with all components in one field."""

    __slots__ = ("x", "y", "z")

    def __init__(self, x, y, z):
        _spec_of(x, y, z)
        self.x = x
        self.y = y
        self.z = z

    @classmethod
    def of(cls, spec: FieldSpec, x, y, z) -> Vec3:
        """Build from ints, Fractions or scalar strings."""
        return cls(spec(x), spec(y), spec(z))

    @classmethod
    def zero(cls, spec: FieldSpec) -> Vec3:
        return cls(spec.zero, spec.zero, spec.zero)

    @classmethod
    def basis(cls, spec: FieldSpec, i: int) -> Vec3:
        """The standard basis vector e_i, i in {1, 2, 3}."""
        comps = [0, 0, 0]
        comps[i - 1] = 1
        return cls.of(spec, *comps)

    @property
    def spec(self) -> FieldSpec:
        return self.x.spec

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __getitem__(self, i: int):
        return (self.x, self.y, self.z)[i]

    def __add__(self, other: Vec3) -> Vec3:
        if not isinstance(other, Vec3):
            return NotImplemented
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Vec3) -> Vec3:
        if not isinstance(other, Vec3):
            return NotImplemented
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> Vec3:
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, scalar) -> Vec3:
        if isinstance(scalar, (Vec3, Mat3)):
            return NotImplemented
        return Vec3(self.x * scalar, self.y * scalar, self.z * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> Vec3:
        inv = scalar.inv() if hasattr(scalar, "inv") else self.spec(scalar).inv()
        return self * inv

    def __matmul__(self, m: Mat3) -> Vec3:
        if not isinstance(m, Mat3):
            return NotImplemented
        return vecmat(self, m)

    def dot(self, other: Vec3):
        """Euclidean scalar product."""
        return dot(self, other)

    def cross(self, other: Vec3) -> Vec3:
        """Euclidean vector product."""
        return cross(self, other)

    def is_zero(self):
        return self.x.is_zero() & self.y.is_zero() & self.z.is_zero()

    def equals(self, other: Vec3):
        """Componentwise equality; a bool array for batches."""
        return (self.x == other.x) & (self.y == other.y) & (self.z == other.z)

    def __eq__(self, other):
        if not isinstance(other, Vec3):
            return NotImplemented
        return all_of(self.equals(other))

    def __hash__(self):
        return hash((self.x, self.y, self.z))

    def compress(self, mask) -> Vec3:
        return Vec3(_select(self.x, mask), _select(self.y, mask), _select(self.z, mask))

    def __repr__(self) -> str:
        return f"Vec3({self.x!r}, {self.y!r}, {self.z!r})"


class Mat3:
    """3x3 matrix stored as three row vectors."""

    __slots__ = ("rows",)

    def __init__(self, r1: Vec3, r2: Vec3, r3: Vec3):
        _spec_of(r1.x, r2.x, r3.x)
        self.rows = (r1, r2, r3)

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Iterable[Iterable]) -> Mat3:
        return cls(*(Vec3.of(spec, *row) for row in rows))

    @classmethod
    def identity(cls, spec: FieldSpec) -> Mat3:
        return cls.diag(spec, 1, 1, 1)

    @classmethod
    def diag(cls, spec: FieldSpec, a, b, c) -> Mat3:
        return cls.from_rows(spec, [[a, 0, 0], [0, b, 0], [0, 0, c]])

    @property
    def spec(self) -> FieldSpec:
        return self.rows[0].spec

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vec3:
        return Vec3(self.rows[0][j], self.rows[1][j], self.rows[2][j])

    def transpose(self) -> Mat3:
        return transpose(self)

    def det(self):
        return det(self)

    def adjugate(self) -> Mat3:
        return adjugate(self)

    def __matmul__(self, other: Mat3) -> Mat3:
        if not isinstance(other, Mat3):
            return NotImplemented
        return matmul(self, other)

    def __add__(self, other: Mat3) -> Mat3:
        if not isinstance(other, Mat3):
            return NotImplemented
        return Mat3(*(a + b for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: Mat3) -> Mat3:
        if not isinstance(other, Mat3):
            return NotImplemented
        return Mat3(*(a - b for a, b in zip(self.rows, other.rows)))

    def __mul__(self, scalar) -> Mat3:
        if isinstance(scalar, (Vec3, Mat3)):
            return NotImplemented
        return Mat3(*(r * scalar for r in self.rows))

    __rmul__ = __mul__

    def is_symmetric(self):
        m = self
        return (m[0, 1] == m[1, 0]) & (m[0, 2] == m[2, 0]) & (m[1, 2] == m[2, 1])

    def equals(self, other: Mat3):
        r = self.rows
        s = other.rows
        return r[0].equals(s[0]) & r[1].equals(s[1]) & r[2].equals(s[2])

    def __eq__(self, other):
        if not isinstance(other, Mat3):
            return NotImplemented
        return all_of(self.equals(other))

    def __hash__(self):
        return hash(self.rows)

    def compress(self, mask) -> Mat3:
        return Mat3(*(r.compress(mask) for r in self.rows))

    def __repr__(self) -> str:
        return f"Mat3({self.rows[0]!r}, {self.rows[1]!r}, {self.rows[2]!r})"


def dot(v: Vec3, w: Vec3):
    return v.x * w.x + v.y * w.y + v.z * w.z


def cross(v: Vec3, w: Vec3) -> Vec3:
    """(y1 z2 - y2 z1, x2 z1 - x1 z2, x1 y2 - x2 y1)."""
    return Vec3(
        v.y * w.z - w.y * v.z,
        w.x * v.z - v.x * w.z,
        v.x * w.y - w.x * v.y,
    )


def det(m: Mat3):
    """Rule of Sarrus."""
    (a, b, c), (d, e, f), (g, h, i) = m.rows
    return a * e * i + b * f * g + c * d * h - c * e * g - b * d * i - a * f * h


def adjugate(m: Mat3) -> Mat3:
    """Transpose of the matrix with rows r2 x r3, r3 x r1, r1 x r2.

    Defined for singular matrices too; ``m @ adjugate(m) == det(m) * I``.
    """
    r1, r2, r3 = m.rows
    return transpose(Mat3(cross(r2, r3), cross(r3, r1), cross(r1, r2)))


def transpose(m: Mat3) -> Mat3:
    return Mat3(m.column(0), m.column(1), m.column(2))


def vecmat(v: Vec3, m: Mat3) -> Vec3:
    """Row vector times matrix."""
    r1, r2, r3 = m.rows
    return Vec3(
        v.x * r1.x + v.y * r2.x + v.z * r3.x,
        v.x * r1.y + v.y * r2.y + v.z * r3.y,
        v.x * r1.z + v.y * r2.z + v.z * r3.z,
    )


def matmul(a: Mat3, b: Mat3) -> Mat3:
    return Mat3(*(vecmat(r, b) for r in a.rows))
