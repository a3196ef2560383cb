import json

import pytest

from arrowgraph.cli import main
from arrowgraph.colouring import RED, EdgeColouring, write_colouring
from arrowgraph.core import Graph, read_graph, write_graph
from arrowgraph.pipeline import ARTIFACTS


def _run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def _construct(tmp_path, capsys, name="out", *extra):
    out = tmp_path / name
    code, text = _run(capsys, "construct", "--n", 40, "--k", 3, "--expected-edges", 20, "--seed", 3,
                      "--out", out, *extra)
    return code, out, text


def test_construct_and_verify(tmp_path, capsys):
    code, out, text = _construct(tmp_path, capsys)
    assert code == 0
    report = json.loads(text)
    assert set(ARTIFACTS.values()) <= {p.name for p in out.iterdir()}
    assert report == json.loads((out / ARTIFACTS["report"]).read_text())
    cert = report["certificate"]
    assert cert["mono_red_Kk"] == cert["mono_blue_Kk"] == 0
    if report["prune"]["surviving"]:
        assert cert["contains_Ks"] and report["arrow_check"]["decision"] == "Arrows"
    code, text = _run(capsys, "verify", out)
    assert code == 0 and json.loads(text)["ok"]


def test_verify_detects_tampering(tmp_path, capsys):
    code, out, _ = _construct(tmp_path, capsys)
    g = read_graph(out / ARTIFACTS["graph"])
    if g.m == 0:
        pytest.skip("vacuous instance")
    write_colouring(EdgeColouring.uniform(g, RED), out / ARTIFACTS["colouring"])
    code, text = _run(capsys, "verify", out)
    assert code == 1
    assert not json.loads(text)["ok"]


def test_verify_single_colouring(tmp_path, capsys):
    k5 = Graph.complete(5)
    write_graph(k5, tmp_path / "g.txt")
    write_colouring(EdgeColouring.uniform(k5, RED), tmp_path / "c.json")
    code, text = _run(capsys, "verify", "--graph", tmp_path / "g.txt", "--colouring-file",
                      tmp_path / "c.json", "--a", 3, "--b", 3)
    assert code == 1 and json.loads(text) == {"valid": False}


def test_vacuous_run(tmp_path, capsys):
    out = tmp_path / "empty"
    code, text = _run(capsys, "construct", "--n", 20, "--k", 3, "--expected-edges", 0, "--out", out)
    assert code == 0
    report = json.loads(text)
    assert report["sampled_edges"] == 0 and report["primal"]["m"] == 0
    assert report["warnings"]
    assert _run(capsys, "verify", out)[0] == 0


def test_k4_run(tmp_path, capsys):
    out = tmp_path / "k4"
    code, text = _run(capsys, "construct", "--n", 60, "--k", 4, "--expected-edges", 6, "--seed", 2,
                      "--out", out, "--format", "text")
    assert code == 0
    assert "mono red/blue = 0/0" in text


@pytest.mark.parametrize("argv", [
    ["construct", "--n", 4, "--k", 3, "--p", 0.1, "--out", "x"],
    ["construct", "--n", 40, "--k", 7, "--p", 0.1, "--out", "x"],
    ["construct", "--n", 40, "--k", 3, "--s", 6, "--p", 0.1, "--out", "x"],
    ["arrow", "--complete", 5, "--a", 1, "--b", 3],
    ["mc", "--kind", "y"],
    ["construct", "--n", 40, "--p", 0.1, "--expected-edges", 3, "--out", "x"],
    ["nonsense"],
])
def test_invalid_input_exit_code(tmp_path, monkeypatch, argv, capsys):
    monkeypatch.chdir(tmp_path)
    try:
        code = main([str(a) for a in argv])
    except SystemExit as exc:
        code = exc.code
    assert code == 3


def test_missing_file_is_invalid(tmp_path, capsys):
    assert _run(capsys, "arrow", "--graph", tmp_path / "nope.txt", "--a", 3, "--b", 3)[0] == 3


def test_budget_is_inconclusive(capsys):
    code, text = _run(capsys, "arrow", "--complete", 9, "--a", 3, "--b", 4, "--budget", 500)
    assert code == 2
    assert json.loads(text)["decision"] is None


def test_sample_over_budget(capsys):
    # too many candidates to hash, so skipping is used; that is bounded by expected edges
    code, text = _run(capsys, "sample", "--n", 200, "--s", 5, "--p", 1e-9, "--budget", 10)
    assert code == 0
    assert json.loads(text)["n"] == 200
    assert _run(capsys, "sample", "--n", 200, "--s", 5, "--p", 1e-8, "--budget", 10)[0] == 2


def test_arrow_decisions(capsys):
    code, text = _run(capsys, "arrow", "--complete", 6, "--a", 3, "--b", 3)
    assert code == 0 and json.loads(text)["decision"] == "Arrows"
    code, text = _run(capsys, "arrow", "--complete", 5, "--a", 3, "--b", 3, "--format", "text")
    assert code == 0 and text.startswith("NotArrows")


def test_threads_give_identical_artifacts(tmp_path, capsys):
    _construct(tmp_path, capsys, "t1", "--threads", 1)
    _construct(tmp_path, capsys, "t8", "--threads", 8)
    for name in ARTIFACTS.values():
        assert (tmp_path / "t1" / name).read_bytes() == (tmp_path / "t8" / name).read_bytes()


def test_sample_with_config(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n": 30, "s": 5, "expected_edges": 20, "seed": 4}))
    code, text = _run(capsys, "sample", "--config", cfg)
    assert code == 0
    first = json.loads(text)
    code, text = _run(capsys, "sample", "--n", 30, "--s", 5, "--expected-edges", 20, "--seed", 4)
    assert json.loads(text) == first


def test_sample_then_prune(tmp_path, capsys):
    _run(capsys, "sample", "--n", 30, "--s", 5, "--expected-edges", 25, "--seed", 1,
         "--out", tmp_path / "h.json")
    code, text = _run(capsys, "prune", "--input", tmp_path / "h.json", "--k", 3, "--out", tmp_path / "p")
    assert code == 0
    rep = json.loads(text)
    assert rep == json.loads((tmp_path / "p" / "prune.json").read_text())


def test_cnf(tmp_path, capsys):
    code, text = _run(capsys, "cnf", "--complete", 6, "--a", 3, "--b", 3, "--out", tmp_path / "k6.cnf")
    assert code == 0
    payload = json.loads(text)
    assert (payload["variables"], payload["clauses"]) == (15, 40)


def test_oracle_alpha(capsys):
    code, text = _run(capsys, "oracle-alpha", "--k", 3)
    payload = json.loads(text)
    assert code == 0
    assert payload["min_alpha"] == "1" and payload["covers_enumerated"] == 8
    assert payload["argmins"] == [[[0, 1], [0, 2], [1, 2]]]
    assert _run(capsys, "oracle-alpha", "--k", 5)[0] == 3


@pytest.mark.parametrize("kind", ["subset", "xc", "y"])
def test_mc(capsys, kind):
    code, text = _run(capsys, "mc", "--kind", kind, "--n", 12, "--s", 5, "--p", 0.01, "--trials", 50,
                      "--pattern", "path")
    assert code == 0
    payload = json.loads(text)
    assert payload["kind"] == kind and payload["trials"] == 50
