"""Smoke tests for the Python bindings (the heavy lifting is tested in C++)."""

import pytest

ramify = pytest.importorskip("ramify")

PICARD_MAP = "(z-1)^3*(z+3)/z"


def test_analyze_map():
    rep = ramify.analyze_map(PICARD_MAP, "0;16;inf")
    assert rep["degree"] == 4
    assert [e["local_degrees"] for e in rep["passport"]["entries"]] == [[3, 1]] * 3
    assert rep["total_branching"] == 6


def test_evaluate_and_fiber():
    assert ramify.evaluate(PICARD_MAP, "3", exact=True) == {"re": "16", "im": "0"}
    assert ramify.evaluate(PICARD_MAP, "0") == {"inf": True}
    fib = ramify.fiber(PICARD_MAP, "16", exact=True)
    assert sorted(f["local_degree"] for f in fib) == [1, 3]
    assert ramify.local_degree(PICARD_MAP, "1") == 3


def test_construct_picard_exact():
    cfg = ramify.construct_picard(16, exact=True)["config"]
    assert cfg["x1"] == {"re": "1", "im": "0"}
    assert cfg["x2"] == {"re": "-3", "im": "0"}
    assert len(cfg["preimages"]) == 6


def test_monodromy():
    rep = ramify.monodromy(PICARD_MAP, "0;16;inf")
    assert [p["cycle_type"] for p in rep["permutations"]] == [[3, 1]] * 3
    assert rep["product_is_identity"] and rep["transitive"]


def test_lifting():
    assert ramify.local_lift(2, 5) == {"lift_exists": True, "k": 2, "beta_lift": 1}
    assert ramify.local_lift(2, 3) == {"lift_exists": False}
    assert ramify.c0_extension_divisibility([2, 2, 5], 3)
    assert not ramify.c0_extension_divisibility([2, 3], 3)


def test_fgt_roundtrip():
    cat = ramify.catenoid_record()
    checks = ramify.fgt_check(cat)
    assert all(checks[k]["verdict"] for k in checks)
    assert ramify.fgt_classify(cat)["class"] == "covering_of_twice_punctured_sphere"
    bent = ramify.fgt_bend(cat, "1", "7")
    assert "7" in bent["missed"]
    rep = ramify.fgt_no_extension(cat)
    assert rep["exit"] == "no_c0_extension"


def test_fgt_enumerate_bound():
    recs = ramify.fgt_enumerate(1, 3, 4, 2)
    assert recs and all(len(r["missed"]) <= 3 for r in recs)
    for r in recs[:20]:
        checks = ramify.fgt_check(r)
        assert all(checks[k]["verdict"] for k in checks)


def test_converse_discrepancy():
    cfg = ramify.construct_picard(16, exact=True)["config"]
    rep = ramify.check_converse(cfg["passport"], [0, 1, 2], [])
    assert rep["derived_identity"] == {"lhs": 3, "rhs": 3, "holds": True}
    assert rep["printed_identity"] == {"lhs": 3, "rhs": 9, "holds": False}
    assert rep["verdict"] == "CONSISTENT"


def test_errors_surface():
    with pytest.raises(ramify.RamifyError):
        ramify.analyze_map("3/4", "0")  # constant map
