import io
import json
import subprocess
import sys

import pytest

from stabsym.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def test_gw_sphere():
    code, out = run("gw", "sphere", "--genus", "3", "--points", "1", "--degree", "1", "--insert", "1")
    assert code == 0 and json.loads(out)["value"] == 8


def test_gw_table_tsv():
    code, out = run("--format", "tsv", "gw", "table", "--max-genus", "2")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].split("\t")[0] == "degree" and len(lines) == 4


def test_gw_solve(tmp_path):
    script = tmp_path / "eqs.txt"
    script.write_text("# chain\n1 = 2*c*t\n")
    code, out = run("gw", "solve", str(script))
    assert code == 0 and json.loads(out)["result"]["reason"] == "parity"


def test_gw_power_and_lift():
    code, out = run("gw", "power", "--genus", "2", "--points", "1", "--degrees", "1,1", "--insert", "h1*h2")
    assert json.loads(out)["value"] == 16
    code, out = run("gw", "lift", "--genus", "0", "--points", "1", "--degree", "1", "--insert", "h")
    assert json.loads(out)["value"] == 1


def test_chern_commands(tmp_path):
    code, out = run("chern", "parse", "--preset", "S2xS2", "--expr", "2*u1+2*u2")
    assert json.loads(out)["canonical"] == "2*u1 + 2*u2"
    code, out = run("chern", "fingerprint", "--preset", "S2xS2", "--c1", "2*u1+2*u2")
    assert json.loads(out)["divisibility"] == 2
    code, out = run("chern", "p1", "--e1", "5")
    assert json.loads(out)["p1_number"] == -120


def test_orbit_commands(tmp_path):
    code, out = run("orbit", "check", "--gram", "0,1;1,0", "--v0", "1,1", "--v1", "2,2")
    assert code == 0 and json.loads(out)["verdict"] == "Distinct"
    code, out = run("orbit", "brute-force", "--rank", "1", "--bound", "1", "--k", "1")
    assert json.loads(out)["verdict"] == "Verified"
    code, out = run("orbit", "random", "--seed", "3", "--count", "50")
    assert json.loads(out)["sound"]
    m0 = tmp_path / "m0.json"
    m1 = tmp_path / "m1.json"
    m0.write_text(json.dumps({"preset": "S2xS2", "c1": "u1"}))
    m1.write_text(json.dumps({"preset": "S2xS2", "c1": "2*u1"}))
    code, out = run("orbit", "transfer", "--manifold0", str(m0), "--manifold1", str(m1), "--stabilizer", "CP2")
    assert json.loads(out)["verdict"] == "Distinct"


def test_polytope_commands():
    code, out = run("polytope", "facets", "--generators", "1,0,0;0,1,0;0,0,1;1,1,1")
    doc = json.loads(out)
    assert doc["facet_count"] == 14 and doc["euler_characteristic"] == 2
    code, out = run("polytope", "face-orbit", "--f0", "0", "--f1", "1", "--bound", "1")
    assert json.loads(out)["verdict"] == "Distinct"
    code, out = run("polytope", "norm", "--x", "1,1/2,0")
    assert json.loads(out)["value"] in ("3", 3)


def test_pipelines():
    code, out = run("pipeline", "smith", "--n", "2")
    doc = json.loads(out)
    assert code == 0 and doc["sigma"] == -40 and doc["p1_number"] == -120 and doc["all_distinct"]
    code, out = run("pipeline", "lemma57")
    assert json.loads(out)["result"]["verdict"] == "Infeasible"


@pytest.mark.parametrize("argv,code", [
    (["pipeline", "smith", "--n", "1"], 1),
    (["gw", "sphere", "--genus", "0", "--points", "2", "--degree", "0"], 1),
    (["chern", "parse", "--preset", "S2", "--expr", "2*+h"], 1),
    (["frobnicate"], 2),
    (["gw", "sphere", "--bogus"], 2),
])
def test_errors_are_structured(argv, code):
    got, out = run(*argv)
    assert got == code
    assert "error" in json.loads(out)


def test_parse_error_has_position():
    _, out = run("chern", "parse", "--preset", "S2", "--expr", "2*+h")
    assert json.loads(out)["error"]["position"] == 2


def test_deterministic_bytes():
    argv = ["polytope", "facets", "--preset", "borromean"]
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "stabsym", "pipeline", "smith", "--n", "2"],
                       capture_output=True, text=True, check=True)
    q = subprocess.run([sys.executable, "-m", "stabsym", "pipeline", "smith", "--n", "2"],
                       capture_output=True, text=True, check=True)
    assert p.stdout == q.stdout and json.loads(p.stdout)["schema_version"] == 1
