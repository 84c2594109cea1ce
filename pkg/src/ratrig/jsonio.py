"""JSON encoding of scalars, vectors and forms.

Scalars travel as strings in the field's text grammar ("-3/13", "42").
Plain JSON integers are accepted on input; floats never are.
"""

from __future__ import annotations

import json

from .errors import ConfigError
from .exactfield import FieldElement, FieldSpec
from .linalg3 import Mat3, Vec3
from .metric import BilinearForm

NAMED_FORMS = {
    "euclidean": BilinearForm.euclidean,
    "minkowski": BilinearForm.minkowski,
}


def scalar_out(x: FieldElement | None):
    return None if x is None else str(x)


def scalar_in(spec: FieldSpec, obj) -> FieldElement:
    if isinstance(obj, bool) or not isinstance(obj, (str, int)):
        raise ConfigError(f"scalar must be a string or integer, got {obj!r}")
    if isinstance(obj, int):
        return spec(obj)
    return spec.parse_element(obj)


def optional_scalar_in(spec: FieldSpec, obj) -> FieldElement | None:
    return None if obj is None else scalar_in(spec, obj)


def vector_out(v: Vec3) -> list[str]:
    return [str(c) for c in v]


def vector_in(spec: FieldSpec, obj) -> Vec3:
    if not isinstance(obj, list) or len(obj) != 3:
        raise ConfigError(f"vector must be a list of 3 scalars, got {obj!r}")
    return Vec3(*(scalar_in(spec, c) for c in obj))


def matrix_out(m: Mat3) -> list[list[str]]:
    return [vector_out(r) for r in m.rows]


def matrix_in(spec: FieldSpec, obj) -> Mat3:
    if not isinstance(obj, list) or len(obj) != 3:
        raise ConfigError(f"matrix must be a list of 3 rows, got {obj!r}")
    return Mat3(*(vector_in(spec, r) for r in obj))


def form_out(B: BilinearForm):
    if B.name in NAMED_FORMS:
        return B.name
    return matrix_out(B.matrix)


def form_in(spec: FieldSpec, obj) -> BilinearForm:
    """A form given by name ("euclidean", "minkowski") or as a 3x3 matrix."""
    if isinstance(obj, str):
        if obj in NAMED_FORMS:
            return NAMED_FORMS[obj](spec)
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError:
            raise ConfigError(f"unknown form {obj!r}") from None
    return BilinearForm(matrix_in(spec, obj))


def dumps(doc) -> str:
    return json.dumps(doc, indent=2)
