import pytest

import qstab

STD = "-1+1i,1+1i,-1+2i"


def test_hom_ext_table_entries():
    assert qstab.hom_ext("q1", "E1:0", "E1:0") == (1, 0)
    assert qstab.hom_ext("q1", "M", "M'") == (0, 1)
    assert qstab.hom_degree("q1", "M", "M[1]", -1) == 1


def test_roots_and_catalog():
    types = dict((tuple(d), t) for d, t in qstab.roots("q1", 1))
    assert types[(1, 1, 1)] == "imaginary"
    assert sum(t == "real" for t in types.values()) == 6
    assert "M'" in qstab.catalog("q1", 0)


def test_hn_and_classify():
    h = qstab.hn("q1", "E2:0", STD)
    assert h["schema"] == "qstab.hn/1"
    assert [f["object"] for f in h["factors"]] == [["E3:0"], ["M"]]
    assert h["factors"][0]["phase"] > h["factors"][1]["phase"]
    r = qstab.classify("q1", "E2:0", STD)
    assert r["case"] == "C1"
    assert all(c["status"] == "pass" for c in r["checklist"])
    assert qstab.is_semistable("q1", "E4:0", STD) == "yes"
    with pytest.raises(ValueError):
        qstab.classify("q1", "E4:0", STD)


def test_fixtures_pass():
    for name in ("C3", "B1", "B2"):
        r = qstab.fixture(name)
        assert r["case"] == name
        assert all(c["status"] == "pass" for c in r["checklist"])


def test_triples_and_validation():
    found = qstab.sigma_triples("-1+1i,0+1i,1+1i", all=True)
    assert len(found) == 15
    assert found[0]["collection"] == ["E1:0", "M", "E3:0"]
    v = qstab.validate("q1", "E1:1,E1:0,M", "-1+1i,0+1i,1+1i")
    assert v["verdict"] == "no"


def test_kronecker_mutation_braid():
    p = qstab.kronecker_pair(2, "-1+1i,1+1i")
    assert p["verdict"] == "yes"
    assert qstab.mutate("q1", "E1:0", "E2:0", "left") == ("E1:1", 1)
    assert len(qstab.braid("q1", "L1 L1 L1", "E1:2,M,E4:1")) == 3


def test_suite_and_errors():
    r = qstab.run_suite("braid")
    assert r["schema"] == "qstab.suite/1" and r["pass"]
    assert "alg-ledger" in qstab.suite_names()
    with pytest.raises(ValueError):
        qstab.hom_ext("q1", "Q9", "M")
