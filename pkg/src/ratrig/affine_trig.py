"""Rational trigonometry of vector triangles under a bilinear form.

A vector triangle is three vectors v1, v2, v3 with v1 + v2 + v3 = 0. Its
quadrances are Q_i = Q_B(v_i) and its spreads are taken opposite each
vector: s1 between v2 and v3, s2 between v1 and v3, s3 between v1 and v2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError, NotATriangle, NullVector
from .exactfield import FieldElement, FieldSpec, all_of, any_of
from .jsonio import (
    form_in,
    form_out,
    optional_scalar_in,
    scalar_in,
    scalar_out,
    vector_in,
    vector_out,
)
from .linalg3 import Vec3, cross
from .metric import BilinearForm, b_cross, b_dot, quadrance

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

__all__ = [
    "VectorTriangle",
    "TriangleReport",
    "archimedes",
    "spread",
    "quadrea",
    "analyze_triangle",
    "PASS",
    "FAIL",
    "SKIPPED",
]


class VectorTriangle:
    """Three vectors summing to zero, kept in the order given."""

    __slots__ = ("v1", "v2", "v3")

    def __init__(self, v1: Vec3, v2: Vec3, v3: Vec3):
        if not all_of((v1 + v2 + v3).is_zero()):
            raise NotATriangle("triangle vectors must sum to the zero vector")
        self.v1, self.v2, self.v3 = v1, v2, v3

    @classmethod
    def from_pair(cls, v1: Vec3, v2: Vec3) -> VectorTriangle:
        return cls(v1, v2, -(v1 + v2))

    @property
    def vectors(self) -> tuple[Vec3, Vec3, Vec3]:
        return self.v1, self.v2, self.v3

    def is_degenerate(self):
        """True when the vectors are pairwise linearly dependent."""
        return cross(self.v1, self.v2).is_zero()

    def __eq__(self, other):
        if not isinstance(other, VectorTriangle):
            return NotImplemented
        return self.vectors == other.vectors

    def __hash__(self):
        return hash(self.vectors)

    def __repr__(self) -> str:
        return f"VectorTriangle({self.v1!r}, {self.v2!r}, {self.v3!r})"


def archimedes(a, b, c):
    """A(a, b, c) = (a + b + c)^2 - 2(a^2 + b^2 + c^2)."""
    return (a + b + c) * (a + b + c) - 2 * (a * a + b * b + c * c)


def spread(B: BilinearForm, v: Vec3, w: Vec3):
    """s_B(v, w) = 1 - (v.B w)^2 / (Q_B(v) Q_B(w)).

    Raises NullVector (with ``which`` = 1 or 2) if either vector is null.
    """
    qv = quadrance(B, v)
    if any_of(qv.is_zero()):
        raise NullVector(1, "spread is undefined: first vector is null")
    qw = quadrance(B, w)
    if any_of(qw.is_zero()):
        raise NullVector(2, "spread is undefined: second vector is null")
    d = b_dot(B, v, w)
    return 1 - d * d / (qv * qw)


def quadrea(B: BilinearForm, T: VectorTriangle):
    return archimedes(*(quadrance(B, v) for v in T.vectors))


# Flanking vector indices for the spread at each vertex.
_FLANKS = ((1, 2), (0, 2), (0, 1))


@dataclass
class TriangleReport:
    """Quantities and law checks for one vector triangle.

    ``spreads[i]`` is None when a vector flanking vertex i is null;
    ``spread_ratio`` (the common value of s_i / Q_i) is None unless every
    quadrance is nonzero.
    """

    field: FieldSpec
    form: BilinearForm
    triangle: VectorTriangle
    quadrances: tuple
    spreads: tuple
    quadrea: FieldElement
    spread_ratio: FieldElement | None
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return FAIL not in self.checks.values()

    def to_json(self) -> dict:
        return {
            "field": str(self.field),
            "form": form_out(self.form),
            "vectors": [vector_out(v) for v in self.triangle.vectors],
            "quadrances": [scalar_out(q) for q in self.quadrances],
            "spreads": [scalar_out(s) for s in self.spreads],
            "quadrea": scalar_out(self.quadrea),
            "spread_ratio": scalar_out(self.spread_ratio),
            "checks": dict(self.checks),
        }

    @classmethod
    def from_json(cls, doc: dict) -> TriangleReport:
        try:
            spec = FieldSpec.parse(doc["field"])
            return cls(
                field=spec,
                form=form_in(spec, doc["form"]),
                triangle=VectorTriangle(*(vector_in(spec, v) for v in doc["vectors"])),
                quadrances=tuple(scalar_in(spec, q) for q in doc["quadrances"]),
                spreads=tuple(optional_scalar_in(spec, s) for s in doc["spreads"]),
                quadrea=scalar_in(spec, doc["quadrea"]),
                spread_ratio=optional_scalar_in(spec, doc["spread_ratio"]),
                checks=dict(doc["checks"]),
            )
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"malformed triangle report: {exc}") from None

    def __eq__(self, other):
        if not isinstance(other, TriangleReport):
            return NotImplemented
        return self.to_json() == other.to_json()


def _verdict(results: list[bool]) -> str:
    if not results:
        return SKIPPED
    return PASS if all(results) else FAIL


def analyze_triangle(B: BilinearForm, T: VectorTriangle) -> TriangleReport:
    """Compute quadrances, spreads and quadrea, and check every affine law.

    Checks are "pass", "fail", or "skipped" when the law's hypotheses do
    not hold (an undefined spread, a nondegenerate triangle for the triple
    quad formula, a zero flanking quadrance for Pythagoras).
    """
    vs = T.vectors
    Q = tuple(quadrance(B, v) for v in vs)
    A = archimedes(*Q)

    spreads = []
    for j, k in _FLANKS:
        if Q[j].is_zero() or Q[k].is_zero():
            spreads.append(None)
        else:
            spreads.append(spread(B, vs[j], vs[k]))
    s = tuple(spreads)

    checks = {}

    target = B.det * A / 4
    checks["quadrea_theorem"] = _verdict(
        [quadrance(B, b_cross(B, vs[j], vs[k])) == target for j, k in ((0, 1), (1, 2), (2, 0))]
    )

    cross_law = []
    quadrea_spread = []
    for i, (j, k) in enumerate(_FLANKS):
        if s[i] is None:
            continue
        lhs = Q[j] + Q[k] - Q[i]
        cross_law.append(lhs * lhs == 4 * Q[j] * Q[k] * (1 - s[i]))
        quadrea_spread.append(A == 4 * Q[j] * Q[k] * s[i])
    checks["cross_law"] = _verdict(cross_law)
    checks["quadrea_spread"] = _verdict(quadrea_spread)

    ratio = None
    if not any(q.is_zero() for q in Q):
        ratio = A / (4 * Q[0] * Q[1] * Q[2])
        checks["spread_law"] = _verdict([s[i] / Q[i] == ratio for i in range(3)])
    else:
        checks["spread_law"] = SKIPPED

    if None in s:
        checks["triple_spread"] = SKIPPED
    else:
        checks["triple_spread"] = _verdict([_triple_spread_holds(*s)])

    if T.is_degenerate():
        total = Q[0] + Q[1] + Q[2]
        squares = Q[0] * Q[0] + Q[1] * Q[1] + Q[2] * Q[2]
        checks["triple_quad"] = _verdict([total * total == 2 * squares])
    else:
        checks["triple_quad"] = SKIPPED

    for i, (j, k) in enumerate(_FLANKS):
        if s[i] is None:
            checks[f"pythagoras_{i + 1}"] = SKIPPED
        else:
            right = s[i] == 1
            pyth = Q[j] + Q[k] == Q[i]
            checks[f"pythagoras_{i + 1}"] = _verdict([right == pyth])

    return TriangleReport(B.spec, B, T, Q, s, A, ratio, checks)


def _triple_spread_holds(s1, s2, s3) -> bool:
    lhs = (s1 + s2 + s3) * (s1 + s2 + s3)
    return lhs == 2 * (s1 * s1 + s2 * s2 + s3 * s3) + 4 * s1 * s2 * s3
