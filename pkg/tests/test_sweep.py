import pytest

from ratrig.errors import ConfigError
from ratrig.exactfield import QQ, FieldSpec
from ratrig.identities import CATALOGUE, Identity, by_name
from ratrig.metric import BilinearForm, b_dot
from ratrig.sweep import Lcg64, domain_size, draw_args, exhaustive_sweep, random_sweep

F3 = FieldSpec.prime(3)
F101 = FieldSpec.prime(101)


def test_lcg_first_states():
    rng = Lcg64(1)
    assert [rng.next() for _ in range(3)] == [
        7806831264735756412,
        9396908728118811419,
        11960119808228829710,
    ]


def test_lcg_below_uses_top_bits():
    rng = Lcg64(1)
    assert rng.below(41) == ((7806831264735756412 >> 32) * 41) >> 32
    assert all(0 <= rng.below(7) < 7 for _ in range(1000))


def test_lcg_rejects_negative_seed():
    with pytest.raises(ConfigError):
        Lcg64(-1)


def test_draw_args_order_and_ranges():
    rng = Lcg64(5)
    states = Lcg64(5)
    v, s, n = draw_args(rng, QQ, "vsn")
    expected = [states.below(41) - 20 for _ in range(4)]
    assert [c.value for c in v] + [s.value] == expected
    k = states.below(40) - 20
    assert n.value == (k if k < 0 else k + 1)
    for _ in range(500):
        (m,) = draw_args(rng, F3, "n")
        assert not m.is_zero()


def test_random_sweep_is_deterministic():
    B = BilinearForm.minkowski(QQ)
    few = CATALOGUE[:8]
    a = random_sweep(QQ, B, 7, 20, identities=few).to_json()
    b = random_sweep(QQ, B, 7, 20, identities=few).to_json()
    assert a == b
    assert a["failures"] == 0 and a["seed"] == 7 and a["cases"] == 20


def test_batched_matches_scalar():
    B = BilinearForm.minkowski(F101)
    a = random_sweep(F101, B, 3, 40, batched=True).to_json()
    b = random_sweep(F101, B, 3, 40, batched=False).to_json()
    assert a == b
    assert a["failures"] == 0


def test_random_sweep_needs_cases():
    with pytest.raises(ConfigError):
        random_sweep(QQ, BilinearForm.euclidean(QQ), 1, 0)


def test_failures_are_recorded():
    bogus = Identity("self_perpendicular", "v", lambda B, v: b_dot(B, v, v).is_zero())
    for batched in (True, False):
        r = random_sweep(F101, BilinearForm.euclidean(F101), 1, 30, identities=(bogus,), batched=batched)
        doc = r.to_json()
        assert doc["failures"] == r.tallies["self_perpendicular"].failed > 0
        assert len(doc["failing_examples"]) == 5
        assert doc["failing_examples"][0]["identity"] == "self_perpendicular"


def test_domain_size():
    assert domain_size(3, "vvv") == 3**9
    assert domain_size(5, "vsn") == 125 * 5 * 4


def test_exhaustive_counts():
    B = BilinearForm.euclidean(F3)
    r = exhaustive_sweep(F3, B, identities=(by_name("jacobi_identity"), by_name("adjugate_product")))
    doc = r.to_json()
    assert doc["identities"]["jacobi_identity"] == {
        "tested": 19683, "passed": 19683, "skipped": 0, "failed": 0,
    }
    assert doc["not_enumerated"] == ["adjugate_product"]


def test_exhaustive_chunking_does_not_change_tallies():
    B = BilinearForm.minkowski(F3)
    ids = (by_name("cross_law"), by_name("spread_scale_invariance"))
    a = exhaustive_sweep(F3, B, identities=ids).to_json()
    b = exhaustive_sweep(F3, B, identities=ids, chunk=1000).to_json()
    assert a == b and a["failures"] == 0
    tally = a["identities"]["spread_scale_invariance"]
    assert tally["tested"] == 27 * 27 * 2 * 2
    assert tally["passed"] + tally["skipped"] == tally["tested"]


def test_exhaustive_needs_prime_field():
    with pytest.raises(ConfigError):
        exhaustive_sweep(QQ, BilinearForm.euclidean(QQ))


def test_exhaustive_examples_decode_correctly():
    bogus = Identity("first_is_zero", "v", lambda B, v: v.x.is_zero())
    r = exhaustive_sweep(F3, BilinearForm.euclidean(F3), identities=(bogus,))
    assert r.tallies["first_is_zero"].failed == 18
    # index 1 is (1, 0, 0) and index 2 is (2, 0, 0)
    assert r.examples[0] == {"identity": "first_is_zero", "case": 1, "args": [["1", "0", "0"]]}
    assert r.examples[1]["args"] == [["2", "0", "0"]]
