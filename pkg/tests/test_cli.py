import io
import json
from fractions import Fraction

import pytest

from slowcol.cli import main
from slowcol.generators import gen_maximal_outerplanar
from slowcol.graph import read_graph, write_graph
from slowcol.harness import ExperimentConfig


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    assert code == 0, text
    return json.loads(text)


@pytest.mark.parametrize("family, n, value", [("complete", 4, 10), ("path", 9, 13), ("star", 10, 13)])
def test_solve(family, n, value):
    assert run_json("solve", "--family", family, "--n", str(n))["value"] == value


def test_solve_with_trace():
    d = run_json("solve", "--family", "path", "--n", "5", "--trace")
    assert d["trace"]["final_score"] == d["value"] == 7


def test_solve_cap_exit_code():
    assert run("solve", "--family", "complete", "--n", "16")[0] == 2
    assert run("solve", "--family", "complete", "--n", "6", "--cap", "5")[0] == 2


def test_play_examples():
    assert run_json("play", "--family", "complete", "--n", "3", "--painter", "greedy", "--lister", "full")["final_score"] == 6
    d = run_json("play", "--family", "maximal-outerplanar", "--n", "50", "--seed", "7", "--painter", "potential-outerplanar", "--lister", "random")
    assert d["final_score"] <= int(Fraction(d["potential"]))
    assert run_json("play", "--family", "path", "--n", "8", "--painter", "optimal", "--lister", "optimal")["final_score"] == 12


def test_play_debug_and_out(tmp_path):
    out = tmp_path / "trace.json"
    d = run_json("play", "--family", "maximal-planar", "--n", "15", "--seed", "2", "--painter", "potential-4col", "--lister", "connected-random", "--debug", "--out", str(out))
    assert "potential_debug" in d
    assert json.loads(out.read_text()) == d


def test_play_composite_with_partition_file(tmp_path):
    part = tmp_path / "parts.txt"
    part.write_text("0 1 c=1\n2 3 4 c=1\n")
    d = run_json("play", "--family", "multipartite", "--parts", "2,3", "--painter", "composite", "--lister", "optimal", "--partition", str(part))
    assert d["final_score"] <= int(5 + 2 * 6 ** 0.5)


def test_play_strategy_errors():
    # outerplanar painter without a certificate
    assert run("play", "--family", "complete", "--n", "3", "--painter", "potential-outerplanar")[0] == 4
    assert run("play", "--family", "tree", "--n", "5")[0] == 4
    assert run("play", "--family", "bogus")[0] == 4


def test_gen(tmp_path):
    code, text = run("gen", "--family", "maximal-outerplanar", "--n", "10", "--seed", "1")
    assert code == 0 and text.splitlines()[0] == "10 17"
    assert run("gen", "--family", "c4xpath", "--k", "3")[1].splitlines()[0] == "12 20"
    assert run("gen", "--family", "complete", "--n", "5")[1].splitlines()[0] == "5 10"
    assert run("gen", "--family", "union", "--parts", "3,4")[1].splitlines()[0] == "7 9"
    path = tmp_path / "g.txt"
    run("gen", "--family", "maximal-planar", "--n", "9", "--seed", "3", "--out", str(path))
    assert read_graph(path.read_text()).m == 21
    assert run("solve", "--graph", str(path))[0] == 0


def test_file_family_with_assumed_class(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(write_graph(gen_maximal_outerplanar(12, 5)))
    code, _ = run("play", "--graph", str(path), "--painter", "potential-outerplanar", "--lister", "full")
    assert code == 4
    d = run_json("play", "--graph", str(path), "--assume-class", "outerplanar", "--painter", "potential-outerplanar", "--lister", "full")
    assert d["final_score"] <= 28


def test_bad_graph_file(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("3 2\n0 1\n")
    assert run("solve", "--graph", str(path))[0] == 4
    assert run("solve", "--graph", str(tmp_path / "missing.txt"))[0] == 4


def test_bounds():
    assert run_json("bounds", "--class", "planar", "--n", "100", "--m", "294")["fourcol"] == pytest.approx(336.4)
    assert run_json("bounds", "--class", "outerplanar", "--n", "30")["outerplanar"] == 70
    assert run_json("bounds", "--class", "acyclic-odd", "--k", "5", "--n", "1000")["acyclic_odd"] < 3985.7
    assert run_json("bounds", "--class", "degenerate", "--k", "2", "--n", "10")["degenerate"] == 25
    assert run_json("bounds", "--class", "multipartite", "--parts", "2,2")["wu_lower"] == 5
    assert run("bounds", "--class", "acyclic-odd", "--k", "4", "--n", "10")[0] == 4


def test_bounds_from_files(tmp_path):
    g = tmp_path / "g.txt"
    g.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    p = tmp_path / "p.txt"
    p.write_text("0 2 c=1\n1 3 c=1\n")
    d = run_json("bounds", "--graph", str(g), "--partition", str(p))
    assert d["eq1"] == pytest.approx(8) and d["eq2"] == pytest.approx(8)
    p.write_text("0 2\n1 3\n")
    assert run("bounds", "--graph", str(g), "--partition", str(p))[0] == 4


def test_verify_is_deterministic_and_exit_codes(tmp_path):
    a = run("verify", "partitions", "--reps", "20", "--seed", "4", "--no-timestamp")
    b = run("verify", "partitions", "--reps", "20", "--seed", "4", "--no-timestamp")
    assert a == b and a[0] == 0
    lines = [json.loads(x) for x in a[1].splitlines()]
    assert lines[-1]["pass"] and lines[-1]["instances"] == len(lines) - 1
    assert "timestamp" in json.loads(run("verify", "partitions", "--reps", "2")[1].splitlines()[-1])
    code, text = run("verify", "closed-forms", "--max-n", "5", "--csv", "--no-timestamp")
    assert code == 0 and text.startswith("instance,")
    assert run("verify", "unknown-suite")[0] == 4


def test_config_rejects_unknown_names():
    with pytest.raises(ValueError):
        ExperimentConfig(painter="nope")
    with pytest.raises(ValueError):
        ExperimentConfig(family="maximal-planar", n=5)


def test_record_pass_uses_floor():
    from slowcol.harness import Record

    assert Record("x", 1, 0, "b", 8.9999, 8).passed
    assert not Record("x", 1, 0, "b", 8.9999, 9).passed
    assert Record("x", 1, 0, "b", "347/3", 115).passed
    assert not Record("x", 1, 0, "b", "347/3", 116).passed
    assert not Record("x", 1, 0, "exact", 5, 4, "==").passed


def test_verify_failure_exit_code(monkeypatch):
    from slowcol import harness

    monkeypatch.setitem(harness.SUITE_FUNCS, "partitions", lambda opt: [harness.Record("bad", 1, 0, "b", 1, 2)])
    code, text = run("verify", "partitions", "--no-timestamp")
    assert code == 1 and json.loads(text.splitlines()[-1])["failures"] == 1
