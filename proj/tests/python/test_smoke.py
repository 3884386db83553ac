import json

import pytest

import ternarygeo as tg


def test_version():
    assert tg.__version__ == "0.1.0"


def test_chart_eval_gf7():
    out = tg.ternary_eval({
        "geometry": "chart", "kind": "gf:7", "m": 2, "beta": "pr1",
        "x": [2, 1], "y": [3, 1], "z": [4, 5],
    })
    assert out["w"] == [{"gf": 7, "val": 5}, {"gf": 7, "val": 5}]
    assert out["beta_w"] == {"gf": 7, "val": 5}


def test_gamma_counterexample():
    # one-dimensional x == z, everything else zero: the witness-set value is 0
    # but the lattice expression returns x, so general position alone cannot
    # force equality
    zero = {"p": 2, "n": 3, "rows": []}
    e3 = {"p": 2, "n": 3, "rows": [[0, 0, 1]]}
    out = tg.gamma_eval({"x": e3, "a": zero, "y": zero, "b": zero, "z": e3})
    assert out["general_position"] is True
    assert out["general_position_sufficient"] is False
    assert out["equal"] is False
    assert out["lattice_contains_brute"] is True
    assert out["brute"]["rows"] == []
    assert out["lattice"]["rows"] == [[0, 0, 1]]


def test_zmod_scenario_ok_and_deterministic():
    scenario = {
        "schema": 1, "name": "smoke", "seed": 7, "trials": 200,
        "items": [{"name": "z12", "structure": {"type": "zmod", "n": 12},
                   "laws": ["torsor", "MT", "MTm"]}],
    }
    out = tg.run_scenario(scenario)
    assert out["ok"] is True
    assert [r["ok"] for r in out["items"][0]["reports"]] == [True] * 8
    text = json.dumps(scenario)
    assert tg._core.run_scenario(text) == tg._core.run_scenario(text)


def test_octonion_mt1_expected_failure():
    out = tg.run_laws({
        "structure": {"type": "chart", "kind": "octonion", "m": 2, "beta": "pr1"},
        "laws": [{"law": "MT1", "expect": "fail"}],
        "trials": 32,
    })
    assert out["ok"] is True
    rep = out["items"][0]["reports"][0]
    assert rep["law"] == "MT1"
    assert rep["pass"] is False
    assert rep["ok"] is True
    assert rep["witnesses"]


def test_render_default_and_coincident():
    out = tg.render()
    assert out["w"] == ["6", "1"]
    assert out["svg"].startswith("<svg")
    assert out["svg"].rstrip().endswith("</svg>")
    par = tg.render({"coincident": True})
    assert par["w"] == ["4", "0"]
    assert tg.render({"view": "b"})["w"] == ["6", "1"]


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        tg.ternary_eval("{not json")
    with pytest.raises(ValueError):
        tg.render({"x": [1, 1], "y": [1, 1]})
    with pytest.raises(ValueError):
        tg.render({"coincident": True, "view": "b"})
