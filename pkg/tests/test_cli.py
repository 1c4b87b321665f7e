import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from randicham.cli import main
from randicham.extremal import kite
from randicham.graph import complete, emit_edge_list, emit_graph6

K5 = emit_graph6(complete(5))
KITE8 = emit_graph6(kite(8, 0))


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def validator():
    schema = json.loads(resources.files("randicham").joinpath("schemas/output.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


def test_check_complete_graph():
    code, out, _ = run("check", "--alpha", "2", "-k", "0", "--g6", K5)
    assert code == 0
    assert "Guaranteed" in out and "threshold=44.0" in out


def test_check_tight_is_exit_one():
    code, out, _ = run("check", "--alpha", "zagreb", "--g6", emit_graph6(kite(10, 0)))
    assert code == 1 and "Inconclusive" in out and "tight" in out


def test_checker_selection_flag():
    for theorem in ("2.3", "2.4", "general"):
        assert "k-hamiltonian" in run("check", "--alpha", "2", "--theorem", theorem, "--g6", K5)[1]
    assert "large-n-hamiltonian" in run("check", "--alpha", "2", "--theorem", "2.6", "--g6", K5)[1]
    assert run("check", "--alpha", "2", "--theorem", "9.9", "--g6", K5)[0] == 2


def test_oracle_kite():
    code, out, _ = run("oracle", "--g6", KITE8)
    assert (code, out) == (0, "not Hamiltonian\n")
    code, out, _ = run("oracle", "-k", "2", "--g6", emit_graph6(complete(6)))
    assert out.startswith("Hamiltonian: ") and out.endswith("; 2-Hamiltonian\n")


def test_table_csv():
    code, out, _ = run("table", "--alphas", "2,3,5,10", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "alpha,x0,x1,x0_minus_x1,n0,n1,f0,f1" and len(lines) == 5
    row5 = dict(zip(lines[0].split(","), lines[3].split(",")))
    assert abs(float(row5["x0"]) - 7.4880) < 1e-3 and (row5["n0"], row5["n1"]) == ("9", "6")


def test_usage_errors():
    assert run("check", "--alpha", "2", "--g6", "D?")[0] == 2
    assert run("bogus")[0] == 2
    assert run("check", "--alpha", "0", "--g6", K5)[0] == 2
    assert run("check", "--alpha", "2", "--g6", K5, "--input", "x")[0] == 2
    code, _, err = run("--tol", "-1", "check", "--alpha", "2", "--g6", K5)
    assert code == 2 and "tolerance" in err
    assert run("check", "--alpha", "2", "-k", "3", "--g6", K5)[0] == 2
    assert run("oracle", "--g6", emit_graph6(complete(25)))[0] == 2


def test_stdin_and_edge_list(tmp_path):
    code, out, _ = run("index", "--alpha", "2", "--input", "-", stdin=f"{K5}\n\n{KITE8}\n")
    assert code == 0 and out.split() == ["80", repr(sum(d * d for d in kite(8, 0).degrees()))]
    path = tmp_path / "k5.txt"
    path.write_text(emit_edge_list(complete(5)))
    assert run("index", "--alpha", "2", "--edges", str(path))[1] == "80\n"


def test_extremal_emit():
    assert run("extremal", "--family", "kite", "--n", "8")[1] == KITE8 + "\n"
    out = run("extremal", "--family", "bipartite", "--n", "3", "--s", "1", "--emit", "edges")[1]
    assert out.splitlines()[0] == "6 7"
    assert run("extremal", "--family", "kite", "--n", "3", "--k", "1")[0] == 2


def test_env_tolerance(monkeypatch):
    g6 = emit_graph6(kite(10, 0))
    assert run("check", "--alpha", "2", "--g6", g6)[0] == 1
    monkeypatch.setenv("RANDICHAM_TOL", "0")
    assert run("check", "--alpha", "2", "--g6", g6)[0] == 2
    monkeypatch.setenv("RANDICHAM_TOL", "1e-3")
    assert run("check", "--alpha", "2", "--g6", g6)[0] == 1
    assert run("--tol", "1e-12", "check", "--alpha", "2", "--g6", g6)[0] == 1


def test_search_exit_and_reproducible():
    argv = ("search", "--n", "7", "--alpha", "2", "--samples", "300", "--seed", "4")
    first, second = run(*argv), run(*argv)
    assert first == second and first[0] == 0
    assert run(*argv, "--workers", "2")[1] == first[1]


def test_json_outputs_validate(validator):
    outputs = [
        run("index", "--alpha", "2", "--g6", K5, "--format", "json"),
        run("check", "--alpha", "-0.5", "--g6", K5, "--format", "json"),
        run("check-bipartite", "--alpha", "1", "--g6", K5, "--format", "json"),
        run("oracle", "-k", "1", "--g6", K5, "--format", "json"),
        run("oracle", "--g6", KITE8, "--format", "json"),
        run("thresholds", "--alpha", "5", "--format", "json"),
        run("table", "--alphas", "2,10000", "--format", "json"),
        run("extremal", "--family", "split", "--n", "7", "--format", "json"),
        run("search", "--n", "6", "--alpha", "2", "--samples", "50", "--format", "json"),
    ]
    count = 0
    for code, out, _ in outputs:
        assert code in (0, 1)
        for line in out.splitlines():
            validator.validate(json.loads(line))
            count += 1
    assert count == 10


def test_json_reruns_are_byte_identical():
    argv = ("table", "--alphas", "2,3,5", "--format", "json")
    assert run(*argv)[1] == run(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "randicham", "check", "--alpha", "2", "--g6", K5],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "Guaranteed" in proc.stdout
