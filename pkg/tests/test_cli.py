import json
from pathlib import Path

import pytest

from toruscalc.cli import main

GOLDEN = json.loads((Path(__file__).parent / "data" / "cli_golden.json").read_text())


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("case", GOLDEN, ids=lambda c: " ".join(c["argv"]))
def test_golden_exit_codes(case, capsys):
    code, out, err = run(case["argv"], capsys)
    assert code == case["exit"]
    if case["verdict"] is None:
        assert out == ""
        assert err
    else:
        assert json.loads(out)["verdict"] == case["verdict"]


def test_verify_sphere_schema(capsys):
    code, out, _ = run(["verify-sphere", "--m", "1", "--n", "1", "--mp", "1", "--np", "1"], capsys)
    d = json.loads(out)
    assert code == 0
    assert d["chi"] == 2 and d["h1"] == []
    assert d["enumeration"]["status"] == "completed" and d["enumeration"]["index"] == 1
    assert d["enumeration"]["budget"] == 100_000
    assert d["elapsed_ms"] is None
    assert len(d["presentation"]["relators"]) == 12


def test_budget_env(monkeypatch, capsys):
    monkeypatch.setenv("TORUSCALC_BUDGET", "1")
    code, out, _ = run(["verify-sphere", "--m", "1", "--n", "1", "--mp", "1", "--np", "1"], capsys)
    assert code == 2 and json.loads(out)["enumeration"]["budget"] == 1
    # flags win over the environment
    code, out, _ = run(["verify-sphere", "--m", "1", "--n", "1", "--mp", "1", "--np", "1", "--budget", "500"], capsys)
    assert code == 0 and json.loads(out)["enumeration"]["budget"] == 500
    monkeypatch.setenv("TORUSCALC_BUDGET", "lots")
    code, out, _ = run(["verify-sphere", "--m", "1", "--n", "1", "--mp", "1", "--np", "1"], capsys)
    assert code == 1 and out == ""


def test_scan_small(capsys):
    code, out, err = run(["scan", "--range", "0"], capsys)
    reports = json.loads(out)
    assert code == 0 and len(reports) == 1
    assert reports[0]["params"] == {"m": 0, "n": 0, "mp": 0, "np": 0}
    assert "certified=1" in err
    code, out, _ = run(["scan", "--range", "1"], capsys)
    reports = json.loads(out)
    assert len(reports) == 81 and {r["verdict"] for r in reports} == {"certified"}
    keys = [tuple(r["params"].values()) for r in reports]
    assert keys == sorted(keys)


def test_scan_parallel_identical(capsys):
    _, serial, _ = run(["scan", "--range", "1"], capsys)
    _, parallel, _ = run(["scan", "--range", "1", "--parallel", "--workers", "2"], capsys)
    assert serial == parallel


def test_factor(capsys):
    code, out, _ = run(["factor", "--matrix", "2,1,0;1,1,0;0,0,1"], capsys)
    d = json.loads(out)
    assert code == 0
    assert d["product"] == "2,1,0;1,1,0;0,0,1" == d["replay_result"]
    assert d["factors_text"] == "R12 R21"
    code, _, err = run(["factor", "--matrix", "2,0,0;0,1,0;0,0,1"], capsys)
    assert code == 1 and "SL" in err


def test_cs_search(capsys):
    code, out, _ = run(["cs-search", "--bound", "1", "--json"], capsys)
    d = json.loads(out)
    assert code == 0 and "0,1,0;0,0,1;1,0,1" in d["matrices"]
    assert d["count"] == len(d["matrices"])
    code, _, _ = run(["cs-search", "--bound", "9"], capsys)
    assert code == 1


def test_mt_h1(capsys):
    code, out, _ = run(["mt-h1", "--matrix", "0,1,0;0,0,1;1,0,1"], capsys)
    d = json.loads(out)
    assert d["h1"] == [0] and d["cs_condition"] == 1 and d["circle_surgery_group"] == []
    code, out, _ = run(["mt-h1", "--matrix", "2,1,0;1,1,0;0,0,1"], capsys)
    d = json.loads(out)
    assert d["h1"] == [0, 0] and d["cs_condition"] == 0 and not d["is_cappell_shaneson"]


def test_y3_and_link_h1(capsys):
    code, out, _ = run(["y3", "--m", "0", "--n", "0", "--json"], capsys)
    d = json.loads(out)
    assert code == 0 and d["h1"] == [0] and d["reduced_h1"] == [0]
    code, out, _ = run(["y3", "--m", "2", "--n", "3"], capsys)
    assert json.loads(out)["link"]["lk"][3][3] == 2
    code, out, _ = run(["link-h1", "--matrix", "0,1;1,0"], capsys)
    assert json.loads(out)["h1"] == []
    code, _, err = run(["link-h1", "--matrix", "0,1;2,0"], capsys)
    assert code == 1 and "symmetric" in err


def test_census(capsys):
    code, out, _ = run(["census", "--presentation", "gens: a,b / rels: a^2; b^3; (a b)^3", "--bound", "24"], capsys)
    d = json.loads(out)
    assert code == 0
    assert d["counts"]["C3"] == 3 and d["counts"]["S4"] == 33


def test_repeat_is_byte_identical(capsys):
    argv = ["verify-sphere", "--m", "2", "--n", "-1", "--mp", "3", "--np", "0"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second
