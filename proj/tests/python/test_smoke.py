import pytest

import syntomic


def test_zp_weight_p():
    r = syntomic.zp_cohomology(3, 3)
    assert r["certified"]
    assert r["dims"] == (0, 2, 1)
    assert r["generators"][2] == ["∂λ1"]
    assert syntomic.zp_cohomology(2, 2)["dims"] == (1, 3, 1)


def test_mod_v1():
    assert syntomic.mod_v1_cohomology(3, 7)["dims"] == (0, 0, 0)
    assert syntomic.mod_v1_cohomology(5, 3)["generators"][1] == ["γ3"]


def test_mixed_radix():
    assert syntomic.mixed_radix(2, 2, 7) == (1, {0: 1, 1: 1})


def test_certificate_roundtrip():
    rec = syntomic.certify_vanishing(2, 5)
    assert rec["verified"]
    assert len(rec["steps"]) == 4
    ok, failures = syntomic.verify_certificate(rec)
    assert ok and failures == []
    rec["steps"][1]["phi_image"]["z"] += 1
    ok, failures = syntomic.verify_certificate(rec)
    assert not ok and failures
    assert syntomic.sample_certificate(3, 4, samples=20, seed=5) == 20


def test_ktable():
    rows = syntomic.k_even_table(3, 3, 8)
    assert [r["i"] for r in rows if r["nonzero"]] == [0, 2, 4, 6]
    assert [name for name, _ in syntomic.h2_basis(2, 4)] == ["∂λ1", "v1∂λ1", "v1^2∂λ1", "v1^3∂λ1"]
    assert syntomic.v1_nilpotence_order(3, 2) == 4
    assert syntomic.bound_comparison(3, 2)["old_bound_index"] == 19
    assert syntomic.render_ktable(2, 2, 2, "csv") == "i,nonzero\n0,true\n1,true\n2,false\n"


def test_errors():
    with pytest.raises(ValueError, match="not prime"):
        syntomic.zp_cohomology(4, 1)
    with pytest.raises(ValueError):
        syntomic.certify_vanishing(3, 1)
    with pytest.raises(ValueError):
        syntomic.render_ktable(3, 2, 4, "xml")
