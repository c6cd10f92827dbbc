import pytest

import dslice


def test_sfs_worked_example():
    out = dslice.sfs("S2(2; 2, 2, 8/3, 8/5)")
    assert out["euler"] == "0"
    assert out["embeds_ZHS1xS3"]["answer"] == "NO"
    assert out["embeds_ZHS1xS3"]["witness"]["reason"] == "common-factor"


def test_sfs_yes():
    out = dslice.sfs("S2(0; 5/2, -5/2, 3, -3)")
    assert out["embeds_ZHS1xS3"]["answer"] == "YES"
    assert out["bounds_QHS1xB3"] is True


def test_montesinos():
    out = dslice.montesinos("M(0; 3, -3, 3, -3)")
    assert out["strong_ds"] == "YES"
    assert dslice.evaluate("M(0; 3, -3, 3, -3)") == out


def test_pretzel():
    assert dslice.pretzel("P(3, 5, -5, -3)")["classification"] == "slice+WDS-both"


def test_lattice_search():
    out = dslice.lattice_search("S2(2; 2, 2, 8/3, 8/5)")
    assert out["count"] == 1
    assert out["obstruction"]["refutes_every_pair"] is True
    chain = dslice.lattice_search({"n": 2, "entries": [[2, -1], [-1, 2]]}, m=3)
    assert chain["count"] == 1


def test_partitions():
    n = 1
    out = dslice.partitions(
        {"n": 3, "lk": [[0, n, n], [n, 0, -n], [n, -n, 0]], "slice": [False, True, True]}
    )
    assert len(out["passing"]) == 1


def test_batch_and_errors():
    out = dslice.batch(["S2(0; 2, -2)", "S2(0; 4/2)"], jobs=2)
    assert out[0]["embeds_ZHS1xS3"]["answer"] == "YES"
    assert out[1]["error"]["exit_code"] == 1
    with pytest.raises(dslice.ParseError):
        dslice.sfs("S2(0; 4/2)")
    with pytest.raises(ValueError):
        dslice.sfs("S2(0; 2")
