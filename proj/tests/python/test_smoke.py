import json

import pytest

import mideal


def test_size_of_principal_squarefree():
    assert mideal.size("vars: 2 / gens: x1*x2") == {"a": 2, "b": 2, "size": 1, "bigsize": 1}


def test_ass_and_decomposition():
    assert mideal.ass("vars: 3 / gens: x2, x1*x3") == [[1, 2], [2, 3]]
    d = mideal.decompose("vars: 2 / gens: x1^2, x1*x2")
    assert len(d) == 2


def test_depth_matches_taylor():
    text = "vars: 3 / gens: x1*x2, x2*x3, x1*x3"
    assert mideal.depth(text) == (1, 2)
    assert mideal.betti(text) == mideal.betti(text, method="taylor")
    assert mideal.betti(text, characteristic=0)["summary"]["pd"] == 2


def test_sdepth_with_certificate():
    text = "vars: 3 / gens: x1, x2, x3"
    r = mideal.sdepth(text)
    assert r["exact"] and r["value"] == 2
    assert mideal.certify(text, json.dumps(r["certificate"]))
    broken = dict(r["certificate"], intervals=r["certificate"]["intervals"][1:])
    assert not mideal.certify(text, json.dumps(broken))


def test_modify():
    assert mideal.modify("vars: 2 / gens: x1*x2", [2, 3]) == mideal.render("vars: 2 / gens: x1^2*x2^3")


def test_run_suite_report():
    rep = mideal.run_suite({"suite": "bigsize1", "count": 5})
    assert rep["schema_version"] == 1
    assert rep["aggregate"] == "pass"
    assert rep["instances"] == 5


def test_errors_raise_value_error():
    with pytest.raises(ValueError):
        mideal.size("vars: 2 / gens: x3")
    with pytest.raises(mideal.MidealError):
        mideal.run_suite({"suite": "nope"})
