import json

import pytest
from hypothesis import assume, given

import oracles
from conftest import V, setups
from ratrig.affine_trig import FAIL, PASS, SKIPPED
from ratrig.errors import DegenerateTripod, IdenticalPoints, NullPoint, PreconditionViolated, ZeroVector
from ratrig.exactfield import QQ, FieldSpec
from ratrig.metric import BilinearForm, b_cross, quadrance
from ratrig.projective_trig import (
    ProjectivePoint,
    Tripod,
    TripodReport,
    analyze_tripod,
    b_normal,
    dual_tripod,
    pp_new,
    proj_quadrance,
    pythagoras_spread_solutions,
    second_pythagoras_spread,
)

F = QQ


def P(*xs, spec=QQ):
    return pp_new(V(*xs, spec=spec))


def MINKOWSKI_TRIPOD():
    return Tripod(V(2, -1, 3), V(-2, 5, 0), V(3, 0, 4))


def test_canonical_representative():
    p = P(2, -1, 3)
    assert p.rep == V(1, "-1/2", "3/2")
    assert str(p) == "[1:-1/2:3/2]"
    assert P(-20, -8, -15) == P(20, 8, 15)
    assert P(0, 0, 5).rep == V(0, 0, 1)
    assert P(0, -3, 6).rep == V(0, 1, -2)
    assert hash(P(4, 2, 2)) == hash(P(2, 1, 1))


def test_canonical_representative_prime():
    F7 = FieldSpec.prime(7)
    assert P(3, 1, 2, spec=F7) == P(1, 5, 3, spec=F7)
    assert P(3, 1, 2, spec=F7).rep == V(1, 5, 3, spec=F7)


def test_zero_vector_rejected():
    with pytest.raises(ZeroVector):
        P(0, 0, 0)


def test_tripod_needs_distinct_points():
    with pytest.raises(IdenticalPoints):
        Tripod(V(1, 2, 3), V(2, 4, 6), V(0, 0, 1))


def test_b_normal_examples(euclid, minkowski):
    assert b_normal(euclid, P(1, 0, 0), P(0, 1, 0)) == P(0, 0, 1)
    assert b_normal(minkowski, P(0, 1, 0), P(0, 0, 1)) == P(1, 0, 0)
    with pytest.raises(IdenticalPoints):
        b_normal(euclid, P(1, 1, 0), P(2, 2, 0))


def test_minkowski_dual(minkowski):
    T = MINKOWSKI_TRIPOD()
    D = dual_tripod(minkowski, T)
    assert D.points == (P(20, 8, 15), P(4, -1, 3), P(15, 6, 8))
    assert dual_tripod(minkowski, D) == T


def test_minkowski_report(minkowski):
    r = analyze_tripod(minkowski, MINKOWSKI_TRIPOD())
    assert r.quadrances == (F("239/203"), F("-2/7"), F("197/116"))
    assert r.spreads == (F("169/394"), F("-4901/47083"), F("1183/1912"))
    assert r.spread_ratio == F("34307/94166")
    assert r.quadrea == F("-169/812")
    assert r.quadreal == F("-28561/376664")
    assert r.cross_law_value == F("26244/41209")
    assert r.ok and FAIL not in r.checks.values()
    assert r.checks["projective_triple_quad"] == SKIPPED


def test_standard_basis(euclid):
    r = analyze_tripod(euclid, Tripod(V(1, 0, 0), V(0, 1, 0), V(0, 0, 1)))
    assert r.quadrances == (1, 1, 1)
    assert r.spreads == (1, 1, 1)
    assert r.quadrea == 1 and r.quadreal == 1
    assert r.checks["projective_pythagoras"] == PASS
    assert r.dual == Tripod(V(1, 0, 0), V(0, 1, 0), V(0, 0, 1))


def test_methane_corner(euclid):
    # Three edges from one vertex of the cube-inscribed tetrahedron.
    r = analyze_tripod(euclid, Tripod(V(0, -2, -2), V(-2, 0, -2), V(-2, -2, 0)))
    assert set(r.quadrances) == {F("3/4")}
    assert set(r.spreads) == {F("8/9")}
    assert r.quadrea == F("1/2")
    assert r.ok


def test_degenerate_tripod(euclid):
    T = Tripod(V(1, 0, 0), V(0, 1, 0), V(1, 1, 0))
    assert T.is_degenerate()
    with pytest.raises(DegenerateTripod):
        analyze_tripod(euclid, T)
    with pytest.raises(DegenerateTripod):
        dual_tripod(euclid, T)
    r = analyze_tripod(euclid, T, strict=False)
    assert r.degenerate and r.dual is None
    assert r.quadrances == (F("1/2"), F("1/2"), 1)
    assert r.checks == {"projective_triple_quad": PASS}


def test_null_point(minkowski):
    with pytest.raises(NullPoint) as info:
        proj_quadrance(minkowski, P(1, 2, 3), P(1, 0, 1))
    assert info.value.which == 2
    r = analyze_tripod(minkowski, Tripod(V(1, 0, 1), V(0, 1, 0), V(1, 0, 0)))
    assert r.quadrances[1] is None and r.quadrances[2] is None
    assert r.quadrances[0] == 1
    assert r.checks["projective_cross_law"] == SKIPPED
    assert r.ok


def test_pythagoras_solutions():
    assert pythagoras_spread_solutions(F(1), F(1), F(1)) == {F(1)}
    assert pythagoras_spread_solutions(F("3/4"), F("3/4"), F("15/16")) == {F(1), F("5/9")}
    assert pythagoras_spread_solutions(F("1/2"), F("1/2"), F("3/4")) == {F(1), F(-3)}
    assert second_pythagoras_spread(F("3/4"), F("3/4")) == F("5/9")
    with pytest.raises(PreconditionViolated):
        pythagoras_spread_solutions(F(0), F(1), F(1))
    with pytest.raises(PreconditionViolated):
        pythagoras_spread_solutions(F("1/2"), F("1/2"), F("1/2"))


def test_report_json_round_trip(minkowski):
    for T, strict in ((MINKOWSKI_TRIPOD(), True), (Tripod(V(1, 0, 1), V(0, 1, 0), V(1, 0, 0)), True),
                      (Tripod(V(1, 0, 0), V(0, 1, 0), V(1, 1, 0)), False)):
        r = analyze_tripod(minkowski, T, strict=strict)
        doc = json.loads(json.dumps(r.to_json()))
        assert TripodReport.from_json(doc) == r


def test_scaled_form_leaves_projective_values_alone(minkowski):
    scaled = BilinearForm(minkowski.matrix * F(7))
    a = analyze_tripod(minkowski, MINKOWSKI_TRIPOD())
    b = analyze_tripod(scaled, MINKOWSKI_TRIPOD())
    assert (a.quadrances, a.spreads, a.dual) == (b.quadrances, b.spreads, b.dual)


@given(setups(2, spec=QQ))
def test_proj_quadrance_matches_oracle(setup):
    spec, B, (v, w) = setup
    assume(not all(c.is_zero() for c in v))
    assume(not all(c.is_zero() for c in w))
    assume(not quadrance(B, v).is_zero() and not quadrance(B, w).is_zero())
    Bl = [[c.value for c in r] for r in B.matrix.rows]
    got = proj_quadrance(B, pp_new(v), pp_new(w))
    assert got == oracles.spread(Bl, [c.value for c in v], [c.value for c in w])


@given(setups(3))
def test_duality_is_an_involution(setup):
    spec, B, vs = setup
    assume(all(not all(c.is_zero() for c in v) for v in vs))
    pts = [pp_new(v) for v in vs]
    assume(len({pts[0], pts[1], pts[2]}) == 3)
    T = Tripod(*pts)
    assume(not T.is_degenerate())
    assert dual_tripod(B, dual_tripod(B, T)) == T
    n = b_cross(B, pts[1].rep, pts[2].rep)
    assert dual_tripod(B, T).p1 == pp_new(n)


@given(setups(3))
def test_analysis_never_fails(setup):
    spec, B, vs = setup
    assume(all(not all(c.is_zero() for c in v) for v in vs))
    pts = [pp_new(v) for v in vs]
    assume(len(set(pts)) == 3)
    r = analyze_tripod(B, Tripod(*pts), strict=False)
    assert FAIL not in r.checks.values()
    assert TripodReport.from_json(r.to_json()) == r
