import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import contextlab as cl

DATA = Path(os.environ.get("CONTEXTLAB_DATA", Path(__file__).resolve().parents[2] / "data"))
HALF = Fraction(1, 2)
CORRELATED = [HALF, 0, 0, HALF]
ANTI = [0, HALF, HALF, 0]


def test_specker():
    s = cl.specker_system()
    assert cl.is_consistently_connected(s)["consistent"]
    assert cl.maximal_coupling_values(s) == {"M1": 1, "M2": 1, "M3": 1}
    verdict = cl.cbd_contextuality(s)
    assert verdict["contextual"] is True
    assert verdict["witness"] is None
    assert s.bunch("M1M2")["support"] == {("0", "1"): HALF, ("1", "0"): HALF}


def test_single_relaxation_is_feasible():
    s = cl.specker_system()
    for content in ("M1", "M2", "M3"):
        assert cl.cbd_contextuality(s, {content})["contextual"] is False


def test_maximal_coupling_is_diagonal():
    coupling = cl.maximal_couplings(cl.specker_system())["M1"]
    assert coupling["support"] == {("0", "0"): HALF, ("1", "1"): HALF}


def test_bell_points():
    pr = cl.bell_system(cl.pr_box_parameters())
    assert cl.cbd_contextuality(pr)["contextual"]
    assert cl.fine_model(pr)["feasible"] is False
    assert all(e["equal"] for e in cl.nonsignaling_report(pr))

    uniform = cl.bell_system([Fraction(1, 4)] * 16)
    assert not cl.cbd_contextuality(uniform)["contextual"]
    fine = cl.fine_model(uniform)
    assert fine["feasible"]
    assert sum(fine["model"]["support"].values()) == 1
    octuple = cl.octuple_model(uniform)
    assert octuple["feasible"]
    assert octuple["model"]["keys"][0] == "A1@A1B1"


def test_leggett_garg():
    assert not cl.cbd_contextuality(cl.leggett_garg_system([CORRELATED] * 3))["contextual"]
    assert cl.cbd_contextuality(cl.leggett_garg_system([CORRELATED, CORRELATED, ANTI]))["contextual"]
    assert cl.cyclic_system([CORRELATED, ANTI]) == cl.rank2_system(CORRELATED, ANTI)


def test_build_and_round_trip():
    s = cl.build_system(
        [("X", ["0", "1"]), ("Y", ["0", "1"])],
        [("c", ["X", "Y"])],
        [("c", ["Y", "X"], {("1", "0"): "1/4", ("0", "0"): Fraction(3, 4)})],
    )
    assert s.bunch("c")["variables"] == [("X", "c"), ("Y", "c")]
    assert s.bunch("c")["support"][("0", "1")] == Fraction(1, 4)
    text = cl.format_system(s)
    assert cl.parse_system(text) == s
    assert s.to_text() == text


def test_errors():
    with pytest.raises(cl.ContextlabError, match="MalformedDistribution"):
        cl.load_system(str(DATA / "malformed-three-quarters.system"))
    with pytest.raises(ValueError):
        cl.parse_system("contextlab-system 1\nwidget\n")
    with pytest.raises(cl.ContextlabError):
        cl.bell_system([Fraction(1, 4)] * 15)


def test_fixtures_and_report():
    s = cl.load_system(str(DATA / "specker.system"))
    assert s == cl.specker_system()
    first = cl.report_json(s)
    assert first == cl.report_json(s)
    doc = json.loads(first)
    assert doc["format"] == "contextlab-report/1"
    assert doc["cbd"]["contextual"] is True
    assert [c["maximal_coupling_value"] for c in doc["connections"]] == ["1", "1", "1"]


def test_solve_lp():
    result = cl.solve_lp([[1, 1, 1]], [1], [0, 1, 0])
    assert result["status"].lower() == "feasible"
    assert result["optimum"] == 1
    assert result["witness"] == [0, 1, 0]
    assert cl.solve_lp([[1]], [-1], None)["status"].lower() == "infeasible"
