"""Worked examples with pinned expected values.

``methane``
    A regular tetrahedron inscribed in the cube [-1, 1]^3, with vertices
    (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1). Its edges have Euclidean
    quadrance 8, so the form (Q/8) I gives every edge quadrance Q for any
    nonzero rational Q. Spreads and projective quantities do not change
    when the form is scaled, so only the face quadrea depends on Q.
``minkowski-affine``
    The triangle v1 = (-1,3,-2), v2 = (2,-5,4) under diag(1,1,-1).
``minkowski-projective``
    The tripod [2:-1:3], [-2:5:0], [3:0:4] under diag(1,1,-1).
"""

from __future__ import annotations

from .affine_trig import FAIL, PASS, VectorTriangle, analyze_triangle, archimedes
from .errors import ConfigError
from .exactfield import QQ
from .linalg3 import Mat3, Vec3
from .metric import BilinearForm
from .projective_trig import ProjectivePoint, Tripod, analyze_tripod

__all__ = ["EXAMPLES", "UnknownExample", "run_example", "methane"]


class UnknownExample(ConfigError):
    pass


def _pin(checks: dict, name: str, got, expected):
    checks[name] = PASS if got == expected else FAIL


def methane(Q="1"):
    """Face and vertex quantities of the regular tetrahedron with edge quadrance Q."""
    Q = QQ(Q) if not hasattr(Q, "spec") else Q
    if Q.is_zero():
        raise ConfigError("the edge quadrance Q must be nonzero")
    B = BilinearForm(Mat3.identity(QQ) * (Q / 8))
    P1, P2, P3, P4 = (Vec3.of(QQ, *c) for c in ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)))

    face = analyze_triangle(B, VectorTriangle(P2 - P1, P3 - P2, P1 - P3))
    corner = analyze_tripod(B, Tripod(P2 - P1, P3 - P1, P4 - P1))

    s = face.spreads[0]
    q = corner.quadrances[0]
    a = corner.quadrea
    S = corner.spreads[0]
    checks = {}
    _pin(checks, "equal_edges", set(face.quadrances), {Q})
    _pin(checks, "equal_face_spreads", set(face.spreads), {s})
    _pin(checks, "equal_corner_quadrances", set(corner.quadrances), {q})
    _pin(checks, "equal_corner_spreads", set(corner.spreads), {S})
    _pin(checks, "s", s, QQ("3/4"))
    _pin(checks, "q", q, QQ("3/4"))
    _pin(checks, "a", a, QQ("1/2"))
    _pin(checks, "S", S, QQ("8/9"))
    _pin(checks, "quadrea", face.quadrea, 3 * Q * Q)
    _pin(checks, "quadrea_archimedes", face.quadrea, archimedes(Q, Q, Q))
    doc = {
        "example": "methane",
        "Q": str(Q),
        "s": str(s),
        "q": str(q),
        "a": str(a),
        "S": str(S),
        "quadrea": str(face.quadrea),
        "face_checks": face.checks,
        "corner_checks": corner.checks,
        "pinned": checks,
    }
    ok = FAIL not in checks.values() and face.ok and corner.ok
    return doc, ok


def minkowski_affine():
    B = BilinearForm.minkowski(QQ)
    T = VectorTriangle.from_pair(Vec3.of(QQ, -1, 3, -2), Vec3.of(QQ, 2, -5, 4))
    report = analyze_triangle(B, T)
    s1, s2, s3 = report.spreads
    # The triple spread formula arranged as (s1+s2+s3)^2 - 2(s1^2+s2^2+s3^2) = 4 s1 s2 s3.
    lhs = (s1 + s2 + s3) * (s1 + s2 + s3) - 2 * (s1 * s1 + s2 * s2 + s3 * s3)
    rhs = 4 * s1 * s2 * s3

    checks = {}
    _pin(checks, "quadrances", report.quadrances, tuple(QQ(x) for x in (6, 13, 1)))
    _pin(checks, "quadrea", report.quadrea, QQ(-12))
    _pin(checks, "spreads", report.spreads, tuple(QQ(x) for x in ("-3/13", "-1/2", "-1/26")))
    _pin(checks, "spread_ratio", report.spread_ratio, QQ("-1/26"))
    _pin(checks, "triple_spread_lhs", lhs, QQ("-3/169"))
    _pin(checks, "triple_spread_rhs", rhs, QQ("-3/169"))

    doc = {"example": "minkowski-affine", **report.to_json()}
    doc["triple_spread_sides"] = [str(lhs), str(rhs)]
    doc["pinned"] = checks
    return doc, FAIL not in checks.values() and report.ok


def minkowski_projective():
    B = BilinearForm.minkowski(QQ)
    T = Tripod(Vec3.of(QQ, 2, -1, 3), Vec3.of(QQ, -2, 5, 0), Vec3.of(QQ, 3, 0, 4))
    report = analyze_tripod(B, T)
    q1, q2, q3 = report.quadrances
    rhs = 4 * (1 - q1) * (1 - q2) * (1 - q3)
    dual_report = analyze_tripod(B, report.dual)

    checks = {}
    _pin(checks, "quadrances", report.quadrances, tuple(QQ(x) for x in ("239/203", "-2/7", "197/116")))
    duals = tuple(ProjectivePoint(Vec3.of(QQ, *c)) for c in ((20, 8, 15), (4, -1, 3), (15, 6, 8)))
    _pin(checks, "dual", report.dual.points, duals)
    _pin(checks, "spreads", report.spreads, tuple(QQ(x) for x in ("169/394", "-4901/47083", "1183/1912")))
    _pin(checks, "spread_ratio", report.spread_ratio, QQ("34307/94166"))
    _pin(checks, "quadrea", report.quadrea, QQ("-169/812"))
    _pin(checks, "quadreal", report.quadreal, QQ("-28561/376664"))
    _pin(checks, "cross_law_lhs", report.cross_law_value, QQ("26244/41209"))
    _pin(checks, "cross_law_rhs", rhs, QQ("26244/41209"))
    _pin(checks, "dual_quadrances", dual_report.quadrances, report.spreads)
    _pin(checks, "dual_spreads", dual_report.spreads, report.quadrances)
    _pin(checks, "dual_quadrea", dual_report.quadrea, report.quadreal)
    _pin(checks, "dual_quadreal", dual_report.quadreal, report.quadrea)

    doc = {"example": "minkowski-projective", **report.to_json()}
    doc["cross_law_sides"] = [str(report.cross_law_value), str(rhs)]
    doc["pinned"] = checks
    return doc, FAIL not in checks.values() and report.ok


EXAMPLES = {
    "methane": methane,
    "minkowski-affine": minkowski_affine,
    "minkowski-projective": minkowski_projective,
}


def run_example(name: str, Q=None):
    """Return (document, all_pinned_values_match)."""
    if name not in EXAMPLES:
        raise UnknownExample(f"unknown example {name!r}; choose from {', '.join(EXAMPLES)}")
    if name == "methane":
        return methane("1" if Q is None else Q)
    if Q is not None:
        raise ConfigError("--Q only applies to the methane example")
    return EXAMPLES[name]()
