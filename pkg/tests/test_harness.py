import json

import pytest

from fanramsey.cli import main
from fanramsey.detection import find_rainbow_fan, parse_coloring, read_coloring
from fanramsey.formulas import ex_fan
from fanramsey.graph import FanSpec, complete, fan, read_graph, turan, write_graph
from fanramsey.harness import (
    grid_failures,
    lower_bound_coloring,
    split_extra_color,
    verify_formula_grid,
    verify_lower_bound,
)
from fanramsey.partition import write_partition


@pytest.mark.parametrize("n, k, r, colors", [(9, 1, 3, 21), (9, 2, 3, 22), (12, 2, 4, 50)])
def test_lower_bound_coloring(n, k, r, colors):
    c = lower_bound_coloring(n, FanSpec(k, r))
    assert c.num_colors == colors and c.is_exact
    # every edge of the extremal graph has its own colour, the rest share the last one
    counts = {}
    for col in c.sequence():
        counts[col] = counts.get(col, 0) + 1
    assert all(counts[i] == 1 for i in range(colors - 1))


@pytest.mark.parametrize("n, kp1, r", [(9, 2, 3), (12, 2, 4), (13, 3, 3)])
def test_verify_lower_bound(n, kp1, r):
    rep = verify_lower_bound(n, kp1, r)
    assert rep.ok and rep.fan_free and rep.rainbow_free
    assert rep.colors_used == rep.construction_edge_count + 1 == ex_fan(n, FanSpec(kp1 - 1, r)).value + 1
    assert rep.below_threshold


def test_verify_lower_bound_reports_construction_failure():
    rep = verify_lower_bound(6, 5, 3)
    assert not rep.ok and "construction" in rep.failures[0]


def test_report_serialises():
    payload = json.dumps(verify_lower_bound(9, 2, 3).to_dict())
    assert '"rainbow_free": true' in payload


def test_grid():
    assert verify_formula_grid([], [3], range(9, 20)) == []
    (rec,) = verify_formula_grid([2], [3], [9])
    assert rec.ok and (rec.construction_edges, rec.formula_value, rec.deficit, rec.deficit_bound) == (21, 21, 1, 1)
    assert grid_failures(verify_formula_grid(range(1, 4), range(3, 5), range(9, 40))) == []


def test_split_extra_color_is_informational():
    out = split_extra_color(9, FanSpec(1, 3), seed=1)
    assert out["split"] and out["colors"] == 22
    assert out["rainbow_found"] in (True, False)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def test_cli_formula(capsys):
    code, out = run(capsys, "formula", "ar-fan", "--n", 9, "--k", 4, "--r", 4, "--json")
    assert code == 0 and json.loads(out)["value"] == 35
    code, out = run(capsys, "formula", "f", "--nu", 3, "--delta", 3, "--json")
    assert json.loads(out)["value"] == 10
    code, out = run(capsys, "formula", "turan", "--n", 7, "--p", 3)
    assert "value: 16" in out
    code, out = run(capsys, "formula", "ex-fan", "--n", 9, "--k", 2, "--r", 3, "--json")
    assert json.loads(out)["parity_branch"] == "even"


@pytest.mark.parametrize("argv, expected", [
    (["complete", "--n", 5], complete(5)),
    (["turan", "--n", 9, "--p", 2], turan(9, 2)),
    (["fan", "--k", 2, "--r", 3], fan(2, 3)),
])
def test_cli_construct_round_trip(tmp_path, capsys, argv, expected):
    out = tmp_path / "g.txt"
    code, _ = run(capsys, "construct", *argv, "--out", out)
    assert code == 0
    text = out.read_text()
    g = read_graph(out)
    assert g == expected
    write_graph(g, tmp_path / "again.txt")
    assert (tmp_path / "again.txt").read_text() == text


def test_cli_construct_and_detect(tmp_path, capsys):
    path = tmp_path / "h.txt"
    run(capsys, "construct", "extremal-fan-free", "--n", 12, "--k", 2, "--r", 4, "--out", path)
    assert read_graph(path).num_edges == 49
    code, out = run(capsys, "detect", "fan", "--graph", path, "--k", 2, "--r", 4, "--json")
    assert json.loads(out)["found"] is False
    code, out = run(capsys, "detect", "clique", "--graph", path, "--r", 4, "--json")
    assert json.loads(out)["found"] is True
    run(capsys, "construct", "bounded-max", "--nu", 2, "--delta", 2, "--out", path)
    assert read_graph(path).num_edges == 6


def test_cli_color_and_rainbow(tmp_path, capsys):
    path = tmp_path / "c.txt"
    code, _ = run(capsys, "color", "lower-bound", "--n", 9, "--k", 2, "--r", 3, "--out", path)
    coloring = read_coloring(path, exact=True)
    assert coloring == lower_bound_coloring(9, FanSpec(2, 3))
    code, out = run(capsys, "detect", "rainbow-fan", "--coloring", path, "--k", 3, "--r", 3, "--json")
    assert json.loads(out)["found"] is False
    code, out = run(capsys, "detect", "rainbow-fan", "--coloring", path, "--k", 2, "--r", 3, "--json")
    assert json.loads(out)["found"] is True


def test_cli_oracle(tmp_path, capsys):
    w = tmp_path / "w.txt"
    code, out = run(capsys, "oracle", "ex", "--n", 6, "--clique", 3, "--json", "--witness", w)
    rec = json.loads(out)
    assert rec["value"] == 9 and rec["witness-file"] == str(w)
    assert read_graph(w).num_edges == 9
    code, out = run(capsys, "oracle", "ar", "--n", 4, "--k", 2, "--r", 2, "--json", "--witness", w)
    assert json.loads(out)["value"] == 2
    assert parse_coloring(w.read_text()).num_colors == 1
    code, out = run(capsys, "oracle", "f", "--nu", 1, "--delta", 2)
    assert "value: 3" in out


def test_cli_budget_error(capsys):
    code = main(["oracle", "ex", "--n", "7", "--clique", "3", "--budget", "10"])
    assert code == 2
    assert "budget" in capsys.readouterr().err


def test_cli_verify(tmp_path, capsys):
    code, out = run(capsys, "verify", "lower-bound", "--n", 9, "--k", 2, "--r", 3, "--json")
    assert json.loads(out)["ok"] is True
    code, out = run(capsys, "verify", "grid", "--k-range", "1:3", "--r-range", "3:4", "--n-range", "9:30", "--json")
    assert json.loads(out)["failures"] == []
    g, p = tmp_path / "g.txt", tmp_path / "p.txt"
    run(capsys, "construct", "extremal-fan-free", "--n", 9, "--k", 2, "--r", 3, "--out", g)
    write_partition([range(0, 5), range(5, 9)], p)
    code, out = run(capsys, "verify", "partition", "--graph", g, "--partition", p, "--k", 1, "--json")
    assert json.loads(out) == {"i": True, "ii": True, "iii": True}
    code, out = run(capsys, "verify", "lemma28", "--graph", g, "--partition", p, "--k", 2, "--json")
    rec = json.loads(out)
    assert rec["deficit"] == 1 and rec["bound"] == 6 and rec["within_bound"]


def test_cli_missing_option():
    with pytest.raises(SystemExit):
        main(["formula", "turan", "--n", "5"])
