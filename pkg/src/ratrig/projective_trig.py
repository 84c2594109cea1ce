"""Projective rational trigonometry: points, tripods and their duals.

A projective point is a nonzero vector up to nonzero scaling. Three
distinct points form a tripod p1 p2 p3. Quantities are indexed by the
opposite point:

    q1 = q(p2, p3), q2 = q(p1, p3), q3 = q(p1, p2)    (projective quadrances)
    r1 = p2 xB p3,  r2 = p1 xB p3,  r3 = p1 xB p2     (dual tripod)
    S1 = q(r2, r3), S2 = q(r1, r3), S3 = q(r1, r2)    (projective spreads)

The projective quadrance of two points is the spread of representatives.
The quadrea is a_B = S1 q2 q3 and the quadreal is l_B = q1 S2 S3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .affine_trig import FAIL, PASS, SKIPPED, spread
from .errors import (
    ConfigError,
    DegenerateTripod,
    IdenticalPoints,
    NullPoint,
    NullVector,
    PreconditionViolated,
    ZeroVector,
)
from .exactfield import FieldElement, FieldSpec, any_of, first_nonzero
from .jsonio import (
    form_in,
    form_out,
    optional_scalar_in,
    scalar_out,
    vector_in,
    vector_out,
)
from .linalg3 import Mat3, Vec3, det
from .metric import BilinearForm, b_cross, quadrance

__all__ = [
    "ProjectivePoint",
    "Tripod",
    "TripodReport",
    "pp_new",
    "b_normal",
    "dual_tripod",
    "proj_quadrance",
    "analyze_tripod",
    "pythagoras_spread_solutions",
    "second_pythagoras_spread",
]

# Opposite pairs: quantity i is measured between the other two points.
_PAIRS = ((1, 2), (0, 2), (0, 1))


class ProjectivePoint:
    """The class [v] of a nonzero vector, stored with its first nonzero
    coordinate scaled to 1 so that equal classes have equal reps."""

    __slots__ = ("rep",)

    def __init__(self, v: Vec3):
        if any_of(v.is_zero()):
            raise ZeroVector("the zero vector is not a projective point")
        lead = first_nonzero(v.x, v.y, v.z)
        self.rep = v * lead.inv()

    @property
    def spec(self) -> FieldSpec:
        return self.rep.spec

    def equals(self, other: ProjectivePoint):
        return self.rep.equals(other.rep)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.rep) + "]"

    def __repr__(self) -> str:
        return f"ProjectivePoint{self}"


def pp_new(v: Vec3) -> ProjectivePoint:
    return ProjectivePoint(v)


def _point(p) -> ProjectivePoint:
    return p if isinstance(p, ProjectivePoint) else ProjectivePoint(p)


class Tripod:
    """Three pairwise distinct projective points."""

    __slots__ = ("p1", "p2", "p3")

    def __init__(self, p1, p2, p3):
        p1, p2, p3 = _point(p1), _point(p2), _point(p3)
        for a, b in ((p1, p2), (p1, p3), (p2, p3)):
            if any_of(a.equals(b)):
                raise IdenticalPoints("tripod points must be distinct")
        self.p1, self.p2, self.p3 = p1, p2, p3

    @property
    def points(self) -> tuple[ProjectivePoint, ProjectivePoint, ProjectivePoint]:
        return self.p1, self.p2, self.p3

    @property
    def spec(self) -> FieldSpec:
        return self.p1.spec

    def is_degenerate(self):
        """True when the representatives are linearly dependent."""
        return det(Mat3(self.p1.rep, self.p2.rep, self.p3.rep)).is_zero()

    def __eq__(self, other):
        if not isinstance(other, Tripod):
            return NotImplemented
        return self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self) -> str:
        return f"Tripod({self.p1}, {self.p2}, {self.p3})"


def b_normal(B: BilinearForm, p1: ProjectivePoint, p2: ProjectivePoint) -> ProjectivePoint:
    """The point [v1 xB v2]; raises IdenticalPoints when p1 = p2."""
    n = b_cross(B, p1.rep, p2.rep)
    if any_of(n.is_zero()):
        raise IdenticalPoints("the B-normal of a point with itself is undefined")
    return ProjectivePoint(n)


def dual_tripod(B: BilinearForm, T: Tripod) -> Tripod:
    if any_of(T.is_degenerate()):
        raise DegenerateTripod("a degenerate tripod has no dual")
    p = T.points
    return Tripod(*(b_normal(B, p[j], p[k]) for j, k in _PAIRS))


def proj_quadrance(B: BilinearForm, p1: ProjectivePoint, p2: ProjectivePoint):
    """q_B(p1, p2), the spread between representatives.

    Raises NullPoint (``which`` = 1 or 2) for a point with a null representative.
    """
    try:
        return spread(B, p1.rep, p2.rep)
    except NullVector as exc:
        raise NullPoint(exc.which) from None


def _quadrances(B: BilinearForm, points) -> tuple:
    null = [quadrance(B, p.rep).is_zero() for p in points]
    out = []
    for j, k in _PAIRS:
        out.append(None if null[j] or null[k] else proj_quadrance(B, points[j], points[k]))
    return tuple(out)


def _first_defined(*products):
    for terms in products:
        if None not in terms:
            return terms[0] * terms[1] * terms[2]
    return None


def _all_equal(values) -> str:
    values = [v for v in values if v is not None]
    if len(values) < 2:
        return SKIPPED
    return PASS if all(v == values[0] for v in values[1:]) else FAIL


def _check(holds: bool) -> str:
    return PASS if holds else FAIL


def _combine(verdicts) -> str:
    verdicts = [v for v in verdicts if v != SKIPPED]
    if not verdicts:
        return SKIPPED
    return FAIL if FAIL in verdicts else PASS


@dataclass
class TripodReport:
    """Quantities and law checks for one tripod.

    Values are None where undefined: a quadrance needs non-null points, a
    spread needs non-null dual points, and a degenerate tripod has no dual
    at all.
    """

    field: FieldSpec
    form: BilinearForm
    tripod: Tripod
    degenerate: bool
    quadrances: tuple
    spreads: tuple
    quadrea: FieldElement | None
    quadreal: FieldElement | None
    spread_ratio: FieldElement | None
    cross_law_value: FieldElement | None
    dual: Tripod | None
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return FAIL not in self.checks.values()

    def to_json(self) -> dict:
        return {
            "field": str(self.field),
            "form": form_out(self.form),
            "points": [vector_out(p.rep) for p in self.tripod.points],
            "degenerate": self.degenerate,
            "quadrances": [scalar_out(q) for q in self.quadrances],
            "spreads": [scalar_out(s) for s in self.spreads],
            "quadrea": scalar_out(self.quadrea),
            "quadreal": scalar_out(self.quadreal),
            "spread_ratio": scalar_out(self.spread_ratio),
            "cross_law_value": scalar_out(self.cross_law_value),
            "dual": None if self.dual is None else [vector_out(p.rep) for p in self.dual.points],
            "checks": dict(self.checks),
        }

    @classmethod
    def from_json(cls, doc: dict) -> TripodReport:
        try:
            spec = FieldSpec.parse(doc["field"])
            dual = doc["dual"]
            return cls(
                field=spec,
                form=form_in(spec, doc["form"]),
                tripod=Tripod(*(vector_in(spec, v) for v in doc["points"])),
                degenerate=bool(doc["degenerate"]),
                quadrances=tuple(optional_scalar_in(spec, q) for q in doc["quadrances"]),
                spreads=tuple(optional_scalar_in(spec, s) for s in doc["spreads"]),
                quadrea=optional_scalar_in(spec, doc["quadrea"]),
                quadreal=optional_scalar_in(spec, doc["quadreal"]),
                spread_ratio=optional_scalar_in(spec, doc["spread_ratio"]),
                cross_law_value=optional_scalar_in(spec, doc["cross_law_value"]),
                dual=None if dual is None else Tripod(*(vector_in(spec, v) for v in dual)),
                checks=dict(doc["checks"]),
            )
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"malformed tripod report: {exc}") from None

    def __eq__(self, other):
        if not isinstance(other, TripodReport):
            return NotImplemented
        return self.to_json() == other.to_json()


def analyze_tripod(B: BilinearForm, T: Tripod, strict: bool = True) -> TripodReport:
    """Compute the projective quantities of T and check the projective laws.

    A degenerate tripod raises DegenerateTripod unless ``strict`` is False,
    in which case only its quadrances and the projective triple quad
    formula are reported. Null points never raise; the affected values are
    None and the checks that need them are "skipped".
    """
    degenerate = T.is_degenerate()
    if degenerate and strict:
        raise DegenerateTripod("representatives are linearly dependent")

    q = _quadrances(B, T.points)
    checks = {}

    if degenerate:
        if None in q:
            checks["projective_triple_quad"] = SKIPPED
        else:
            checks["projective_triple_quad"] = _check(_projective_triple_quad_holds(*q))
        return TripodReport(
            B.spec, B, T, True, q, (None, None, None), None, None, None, None, None, checks
        )

    dual = dual_tripod(B, T)
    S = _quadrances(B, dual.points)
    q1, q2, q3 = q
    S1, S2, S3 = S

    a_forms = [_product(S1, q2, q3), _product(S2, q1, q3), _product(S3, q1, q2)]
    l_forms = [_product(q1, S2, S3), _product(q2, S1, S3), _product(q3, S1, S2)]
    a = next((x for x in a_forms if x is not None), None)
    l_ = next((x for x in l_forms if x is not None), None)
    checks["quadrea_symmetry"] = _all_equal(a_forms)
    checks["quadreal_symmetry"] = _all_equal(l_forms)

    ratio = None
    if None not in q and None not in S and not any(x.is_zero() for x in q):
        ratios = [S[i] / q[i] for i in range(3)]
        ratio = ratios[0]
        checks["projective_spread_law"] = _all_equal(ratios)
    else:
        checks["projective_spread_law"] = SKIPPED

    cross_value = None
    if None not in q and a is not None:
        lhs = a - q1 - q2 - q3 + 2
        cross_value = lhs * lhs
        checks["projective_cross_law"] = _check(cross_value == 4 * (1 - q1) * (1 - q2) * (1 - q3))
    else:
        checks["projective_cross_law"] = SKIPPED

    for i, (j, k) in enumerate(_PAIRS):
        name = f"asymmetric_cross_law_{i + 1}"
        if None in q or S[i] is None:
            checks[name] = SKIPPED
            continue
        lhs = S[i] * q[j] * q[k] + q[i] - q[j] - q[k]
        checks[name] = _check(lhs * lhs == 4 * q[j] * q[k] * (1 - q[i]) * (1 - S[i]))

    if a is not None and l_ is not None and None not in q and None not in S:
        checks["quadrea_quadreal_product"] = _check(a * l_ == q1 * q2 * q3 * S1 * S2 * S3)
    else:
        checks["quadrea_quadreal_product"] = SKIPPED

    pyth = []
    for i, (j, k) in enumerate(_PAIRS):
        if S[i] is not None and S[i] == 1 and None not in q:
            pyth.append(_check(1 - q[i] == (1 - q[j]) * (1 - q[k])))
    checks["projective_pythagoras"] = _combine(pyth)
    checks["projective_triple_quad"] = SKIPPED

    double = dual_tripod(B, dual)
    checks["duality_involution"] = _check(double == T)
    dq = _quadrances(B, dual.points)
    dS = _quadrances(B, double.points)
    exchange = dq == S and dS == q
    da = _first_defined((dS[0], dq[1], dq[2]), (dS[1], dq[0], dq[2]), (dS[2], dq[0], dq[1]))
    if da is not None or l_ is not None:
        exchange = exchange and da == l_
    checks["duality_exchange"] = _check(exchange)

    return TripodReport(B.spec, B, T, False, q, S, a, l_, ratio, cross_value, dual, checks)


def _product(x, y, z):
    if x is None or y is None or z is None:
        return None
    return x * y * z


def _projective_triple_quad_holds(q1, q2, q3) -> bool:
    total = q1 + q2 + q3
    squares = q1 * q1 + q2 * q2 + q3 * q3
    return total * total == 2 * squares + 4 * q1 * q2 * q3


def pythagoras_spread_solutions(q2, q3, q1) -> frozenset:
    """Values of S1 satisfying the first asymmetric cross law when
    1 - q1 = (1 - q2)(1 - q3): always 1, and 4(q2 + q3 - 1)/(q2 q3) - 3.
    """
    if q2.is_zero() or q3.is_zero():
        raise PreconditionViolated("need q2 q3 != 0")
    if q1 != q2 + q3 - q2 * q3:
        raise PreconditionViolated("need q1 = q2 + q3 - q2 q3")
    return frozenset({q1.spec.one, second_pythagoras_spread(q2, q3)})


def second_pythagoras_spread(q2, q3):
    """The solution S1 = 4(q2 + q3 - 1)/(q2 q3) - 3 other than S1 = 1."""
    return 4 * (q2 + q3 - 1) / (q2 * q3) - 3
