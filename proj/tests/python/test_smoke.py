import json
import os
from pathlib import Path

import pytest

import rnckit

DATA = Path(os.environ.get("RNCKIT_TEST_DATA", Path(__file__).resolve().parent.parent / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


def test_construct_three_points_and_chords():
    out = rnckit.construct(load("p3_three_points.json"))
    assert out["version"] == rnckit.SCHEMA_VERSION
    assert out["result"] == "curve"
    cert = out["certificate"]
    assert cert["report"]["passed"]
    # the curve is the moment curve up to one common scale: x_k = c s^k u^(3-k)
    forms = cert["curve"]["forms"]
    scale = rnckit.rational(forms[0][0])
    for k, f in enumerate(forms):
        assert [rnckit.rational(c) for c in f] == [scale if j == k else 0 for j in range(4)]


def test_obstruct_two_lines():
    out = rnckit.obstruct(load("p3_two_lines.json"))
    cert = out["certificate"]
    assert cert["excluded_value"] == "-1"
    assert cert["quadric"]["text"] == "-x0*x3 + x1*x2"
    assert cert["ledger"] == {"intersection_lower_bound": 7, "bezout_bound": 6}


def test_expect():
    a = rnckit.expect(3, 4, 2)["analysis"]
    assert a["verdict"] == "finite_expected"
    assert a["classification"] == "not_exists"
    assert rnckit.expect(3, 0, 6)["analysis"]["count"] == 6


def test_hilbert_seven_points():
    r = rnckit.hilbert(load("p4_seven_points.json"))["report"]
    assert (r["expected"], r["actual"]) == (35, 34)


def test_random_datum_round_trip():
    doc = rnckit.random_datum(4, 2, 5, seed=9, oracle=True)
    assert doc == rnckit.random_datum(4, 2, 5, seed=9, oracle=True)
    out = rnckit.construct(doc)
    assert out["result"] == "curve"
    check = dict(doc, curve=doc["oracle"])
    assert rnckit.verify(check)["report"]["passed"]


def test_equivalent_with_itself():
    doc = rnckit.random_datum(3, 3, 3, seed=4, oracle=True)
    assert rnckit.equivalent(doc, doc)["equivalent"]


def test_errors_are_typed():
    with pytest.raises(rnckit.ParseError) as info:
        rnckit.construct({"n": 3, "points": [[1, "1/0", 0, 0]]})
    assert info.value.args[1] == "$.points[0][1]"
    with pytest.raises(rnckit.NotGeneric) as info:
        rnckit.construct({"n": 3, "points": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0],
                                             [1, 1, 1, 0], [0, 0, 0, 1], [1, 2, 3, 4]]})
    assert list(info.value.args[2]) == [0, 1, 2, 3]
    with pytest.raises(rnckit.BadShape):
        rnckit.construct({"n": 3, "points": [[1, 0, 0, 0]]})
    with pytest.raises(rnckit.Error):
        rnckit.expect(2, 5, 0)


def test_run_matches_the_command_line():
    code, out, err = rnckit.run(["expect", "3", "4", "2"])
    assert code == 0 and err == ""
    assert json.loads(out) == rnckit.expect(3, 4, 2)
    code, _, _ = rnckit.run(["obstruct"], stdin=(DATA / "p3_two_lines.json").read_text())
    assert code == 4
