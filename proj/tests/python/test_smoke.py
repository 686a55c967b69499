import json
import os
from pathlib import Path

import pytest

import peerrate

DATA = Path(os.environ.get("PEERRATE_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load_scenario(n):
    return json.loads((DATA / f"table2_scenario{n}.json").read_text())


def test_rate_scenario_one():
    doc = load_scenario(1)
    report = peerrate.rate(doc["ratings"], doc["competence"])
    assert report["arithmetic_mean"] == 3.7
    assert report["degree"]["weighted_rating"] == pytest.approx(3.9614, abs=1e-3)
    assert report["eigenfactor"]["weighted_rating"] == pytest.approx(3.9767, abs=1e-3)
    assert sum(report["eigenfactor"]["weights"]) == pytest.approx(1.0, abs=1e-12)


def test_step_by_step_matches_rate():
    doc = load_scenario(4)
    survey = peerrate.validate_survey(doc["ratings"], doc["competence"])
    d = peerrate.normalize(survey.competence)
    model = peerrate.TransitionModel(peerrate.build_stochastic(d), 0.85)
    x = peerrate.stationary_distribution(model)
    v = peerrate.eigenfactor_weights(x, d)
    assert v.weights[7] == 0.0
    r_e = peerrate.eigenfactor_weighted_rating(survey.ratings, v)
    assert r_e == pytest.approx(4.0420, abs=1e-3)
    assert r_e == peerrate.rate(doc["ratings"], doc["competence"])["eigenfactor"]["weighted_rating"]


def test_degenerate_raises_with_code():
    with pytest.raises(peerrate.PeerRateError) as info:
        peerrate.rate([1, 2, 3], [[0, 0, 0]] * 3)
    assert info.value.args[0] == "DegenerateNetwork"
    assert isinstance(info.value, ValueError)


def test_validation_errors():
    with pytest.raises(peerrate.PeerRateError) as info:
        peerrate.validate_survey([1, 6], [[0, 1], [1, 0]])
    assert info.value.args[0] == "ScaleViolation"
    with pytest.raises(peerrate.PeerRateError):
        peerrate.validate_survey([1, 2], [[1, 1], [1, 0]], diagonal_policy="reject")


def test_scenarios_summary():
    out = peerrate.run_scenarios(DATA / "table2_scenarios.json")
    assert [r["id"] for r in out["results"]] == [1, 2, 3, 4, 5, 6]
    assert out["summary"]["eigenfactor_never_worse"]
    assert out["summary"]["mean_eigenfactor_reduction_pct"] >= 85.0


def test_dispersion_helpers():
    assert peerrate.mode_of([1, 1, 5, 5]) == 1
    assert peerrate.mode_of([1, 1, 5, 5], "largest") == 5
    row = peerrate.dispersion_row("a", [5, 5, 3, 1, 2])
    assert (row.mode, row.dev2, row.dev3plus) == (5, 1, 2)
    agg = peerrate.aggregate([peerrate.precounted_row("b", 10, 4, 1, 0)])
    assert agg.pct_dev2 == pytest.approx(10.0)
