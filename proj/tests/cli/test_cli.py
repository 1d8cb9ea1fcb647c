import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

CLI = os.environ.get("ADDRAMSEY_CLI", "addramsey")
SCHEMAS = Path(os.environ.get("ADDRAMSEY_SCHEMAS", Path(__file__).resolve().parents[2] / "schemas"))


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(*args, env=None):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, env=env)
    return proc.returncode, proc.stdout, proc.stderr


def run_json(*args, env=None):
    code, out, err = run("--json", *args, env=env)
    doc = json.loads(out)
    jsonschema.validate(doc, schema("report"))
    assert doc["exit_code"] == code
    return code, doc


@pytest.fixture
def tmp(tmp_path):
    return tmp_path


def write(path, doc):
    path.write_text(json.dumps(doc))
    return path


def test_avoid_ratio_round_trip(tmp):
    cert = tmp / "ratio.json"
    code, doc = run_json("avoid", "ratio", "--a", 1, "--b", 2, "--n", 512, "--out", cert)
    assert code == 0
    assert doc["status"] == "pass"
    assert doc["report"]["property"] == "ratio(1,2)"
    jsonschema.validate(json.loads(cert.read_text()), schema("edge-coloring"))
    code, again = run_json("verify", "ratio", "--a", 1, "--b", 2, "--coloring", cert)
    assert code == 0
    assert again["report"] == doc["report"]


def test_avoid_ratio_default_path(tmp):
    proc = subprocess.run([CLI, "avoid", "ratio", "--a", "1", "--b", "2", "--n", "64"], cwd=tmp)
    assert proc.returncode == 0
    assert (tmp / "ratio_1_2_n64.json").exists()


def test_avoid_schur_round_trip(tmp):
    cert = tmp / "schur.json"
    code, doc = run_json("avoid", "schur", "--coeffs", "1,1", "--rhs", 1, "--n", 512, "--out", cert)
    assert code == 0
    code, again = run_json("verify", "schur", "--coeffs", "1,1", "--rhs", 1, "--coloring", cert)
    assert code == 0 and again["report"] == doc["report"]
    # the 3-AP check rejects the Schur avoider
    code, other = run_json("verify", "ratio", "--a", 1, "--b", 2, "--coloring", cert)
    assert code == 1 and other["report"]["status"] == "fail"


def test_avoid_hypergraph_round_trip(tmp):
    cert = tmp / "hg.json"
    code, doc = run_json("avoid", "hypergraph", "--p", 11, "--coeffs", "1,2,3", "--out", cert)
    assert code == 0 and doc["max_degree"] <= 6
    code, again = run_json("verify", "hypergraph", "--p", 11, "--coeffs", "1,2,3", "--coloring", cert)
    assert code == 0 and again["report"]["status"] == "pass"


def test_usage_errors(tmp):
    assert run("avoid", "ratio", "--a", 2, "--b", 2, "--n", 10)[0] == 2
    assert run("avoid", "ratio", "--a", 1, "--b", 2)[0] == 2
    assert run("avoid", "ratio", "--a", 1, "--b", 2, "--n", 8, "--bogus")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2
    bad = write(tmp / "bad.json", {"n": 4, "r": 1, "colors": [1, 1]})
    assert run("search", "cube", "--k", 2, "--coloring", bad)[0] == 2
    code, doc = run_json("search", "cube", "--k", 2, "--coloring", bad)
    assert code == 2 and doc["status"] == "error"
    assert run("export", "cnf", "--r", 0, "--k", 2, "--n", 3)[0] == 2


def test_search_cube(tmp):
    k4 = write(tmp / "k4.json", {"n": 4, "r": 1, "colors": [1] * 6})
    code, doc = run_json("search", "cube", "--k", 2, "--coloring", k4)
    assert code == 0
    assert doc["witness"]["a"] == 1 and doc["witness"]["b"] == [1, 2]
    k3 = write(tmp / "k3.json", {"n": 3, "r": 1, "colors": [1] * 3})
    assert run("search", "cube", "--k", 2, "--coloring", k3)[0] == 1


def test_search_tree_rainbow(tmp):
    tree = write(tmp / "tree.json", {"k": 2, "n": 1, "c": 3, "colors": [1, 2, 3]})
    jsonschema.validate(json.loads(tree.read_text()), schema("tree-coloring"))
    code, doc = run_json("search", "tree", "--target-height", 1, "--coloring", tree)
    assert code == 1 and doc["status"] == "not-found"


def test_search_grid_checkerboard(tmp):
    s = 4
    grid = write(tmp / "grid.json", {"S": s, "r": 2, "colors": [1 + (x + y) % 2 for x in range(s) for y in range(s)]})
    code, doc = run_json("search", "grid", "--k", 2, "--coloring", grid)
    assert code == 0
    w = doc["witness"]
    assert (w["x"], w["y"], w["d"]) == (1, 1, 2)


def test_search_solution(tmp):
    parity = write(tmp / "v.json", {"n": 8, "c": 2, "colors": [1 + v % 2 for v in range(1, 9)]})
    code, doc = run_json("search", "solution", "--system", "rado-helper", "--coloring", parity)
    assert code == 0 and doc["witness"] == [2, 6, 8, 4]


def test_search_extract_trace(tmp):
    red = write(tmp / "red.json", {"n": 16, "r": 2, "colors": [1] * 120})
    trace = tmp / "trace.json"
    code, doc = run_json("search", "extract", "--k", 2, "--coloring", red, "--trace-out", trace)
    assert code == 0
    assert doc["witness"]["elements"] == [1, 5, 9, 13]
    t = json.loads(trace.read_text())
    jsonschema.validate(t, schema("trace"))
    x = {g["word"]: g["X"] for g in t["grids"]}
    y = {g["word"]: g["Y"] for g in t["grids"]}
    assert x["2"] - x["1"] == y["λ"] - x["λ"]


def test_numbers_f():
    code, doc = run_json("numbers", "f", "--k", 3, "--c", 3, "--mode", "bound")
    assert code == 0 and doc["f_bound"] == "39" and doc["source"] == "published recurrence"
    code, doc = run_json("numbers", "f", "--k", 2, "--c", 1, "--mode", "exact")
    assert code == 0 and doc["value"] == 1 and doc["source"] == "our search"
    code, doc = run_json("numbers", "f", "--k", 2, "--c", 2, "--mode", "exact")
    assert doc["value"] == 3 and doc["recurrence_bound"] == "4"
    jsonschema.validate(doc["certificate"], schema("tree-coloring"))
    code, doc = run_json("numbers", "f", "--k", 2, "--c", 2)
    assert doc["closed_form_minus_recurrence"] == "1"


def test_numbers_rado_helper(tmp):
    cert = tmp / "t.json"
    code, doc = run_json("numbers", "rado-helper", "--t-max", 30, "--out", cert)
    assert code == 0 and doc["value"] == 22 and doc["certificate_verified"]
    jsonschema.validate(json.loads(cert.read_text()), schema("vertex-coloring"))
    assert run("verify", "solution-free", "--coloring", cert)[0] == 0


def test_budget_exit_code_and_env(tmp):
    code, doc = run_json("numbers", "rado-helper", "--t-max", 30, "--budget", 10)
    assert code == 3 and doc["kind"] == "unknown"
    env = dict(os.environ, RAMSEY_BUDGET="10")
    assert run("numbers", "rado-helper", "--t-max", 30, env=env)[0] == 3


def test_numbers_gw_and_bounds(tmp):
    cert = tmp / "g.json"
    code, doc = run_json("numbers", "gw", "--r", 2, "--k", 2, "--s-max", 4, "--out", cert)
    assert code == 1 and doc["kind"] == "lower-bound" and doc["value"] == 5
    jsonschema.validate(json.loads(cert.read_text()), schema("grid-coloring"))
    assert run("verify", "grid-free", "--k", 2, "--coloring", cert)[0] == 0
    code, doc = run_json("numbers", "S", "--r", 2)
    assert doc["values"][0] == "32" and doc["depth"] == "4"
    code, doc = run_json("numbers", "T", "--r", 2, "--k", 2)
    assert doc["values"][0] == "32"
    code, doc = run_json("numbers", "T", "--r", 2, "--k", 3)
    assert code == 0 and doc["status"] == "symbolic"
    code, doc = run_json("numbers", "E", "--k", 1, "--c", 3, "--n", 3)
    assert doc["E"] == "12"


def test_numbers_cube_ramsey(tmp):
    cert = tmp / "c.json"
    code, doc = run_json("numbers", "cube-ramsey", "--r", 1, "--k", 2, "--n-max", 8, "--out", cert)
    assert code == 0 and doc["value"] == 4
    assert run("verify", "cube-free", "--k", 2, "--coloring", cert)[0] == 0


def test_export_cnf(tmp):
    out = tmp / "a.cnf"
    code, doc = run_json("export", "cnf", "--r", 2, "--k", 2, "--n", 6, "--out", out)
    assert code == 0 and doc["variables"] == 30
    assert out.read_text().startswith("p cnf 30 ")
    for n, want in ((3, "sat"), (4, "unsat")):
        path = tmp / f"{n}.cnf"
        run("export", "cnf", "--r", 1, "--k", 2, "--n", n, "--out", path)
        code, doc = run_json("verify", "cnf", "--input", path)
        assert code == 0 and doc["status"] == want
    code, out_text, _ = run("export", "cnf", "--r", 1, "--k", 2, "--n", 3)
    assert out_text.startswith("p cnf 3 ")


def test_threads_do_not_change_output(tmp):
    cert = tmp / "r.json"
    run("avoid", "ratio", "--a", 1, "--b", 2, "--n", 64, "--out", cert)
    _, one = run_json("--threads", 1, "verify", "schur", "--coeffs", "1,1", "--rhs", 1, "--coloring", cert)
    _, four = run_json("--threads", 4, "verify", "schur", "--coeffs", "1,1", "--rhs", 1, "--coloring", cert)
    assert one == four
