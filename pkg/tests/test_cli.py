import json
import subprocess
import sys

import pytest

from offalliance import generators as gen
from offalliance.cli import main
from offalliance.io import serialize


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in {"k5": gen.complete(5), "k3": gen.complete(3), "c4": gen.cycle(4),
                    "p2": gen.path(2)}.items():
        paths[name] = tmp_path / f"{name}.txt"
        paths[name].write_text(serialize(g))
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_global_k5(capsys, files):
    code, out, _ = run(capsys, "solve", "--global", "-r", "1", files["k5"])
    rec = json.loads(out)
    assert code == 0 and rec["optimum"] == 3 and rec["schema"] == 1 and rec["witness"] == [0, 1, 2]


def test_solve_all_r_and_other_problems(capsys, files):
    code, out, _ = run(capsys, "solve", "-r", "all", files["k5"])
    assert [x["optimum"] for x in json.loads(out)["results"]] == [1, 2, 2, 3, 3, 4, 4]
    code, out, _ = run(capsys, "solve", "--problem", "dominating", "-k", "2", files["c4"])
    assert json.loads(out)["optimum"] == 2
    code, out, _ = run(capsys, "solve", "--problem", "vertex-cover", files["c4"], "--format", "table")
    assert "optimum=2" in out


def test_bounds_table_c4(capsys, files):
    code, out, _ = run(capsys, "bounds", "-r", "1", files["c4"])
    assert code == 0
    lines = {line.split()[0]: line.split() for line in out.splitlines()[2:]}
    assert lines["spectral_lower"][2] == "2"
    assert lines["cockayne_upper"][2] == "3"


def test_bounds_json_and_line_graph(capsys, files):
    code, out, _ = run(capsys, "bounds", "-r", "1", "--format", "json", "--line-graph", files["k5"])
    rec = json.loads(out)["bounds"][0]
    names = {b["name"]: b for b in rec["bounds"]}
    assert names["line_graph_lower"]["value"] is not None and rec["exact"] is not None


def test_reduce_goa_high_k3(capsys, files, tmp_path):
    code, out, err = run(capsys, "reduce", "--kind", "goa-high", "-r", "2", files["k3"])
    assert code == 0
    assert out.splitlines()[0] == "21 30"
    assert len(json.loads(err)["labels"]) == 21
    prefix = tmp_path / "gadget"
    code, out, _ = run(capsys, "reduce", "--kind", "goa-high", "-r", "2", files["k3"], "--out", prefix)
    assert (tmp_path / "gadget.txt").read_text().startswith("21 30")
    assert json.loads((tmp_path / "gadget.labels.json").read_text())["kind"] == "goa-high"


def test_reduce_verify_exit_codes(capsys, files):
    code, out, _ = run(capsys, "reduce", "--kind", "goa-low", "-r", "0", files["c4"], "--verify",
                       "--format", "json")
    assert code == 0 and json.loads(out)["verification"]["holds"]
    code, out, _ = run(capsys, "reduce", "--kind", "goa-high", "-r", "2", files["p2"], "--verify",
                       "--format", "json")
    rec = json.loads(out)["verification"]
    assert code == 1 and not rec["holds"]


def test_verify_set(capsys, files):
    code, out, _ = run(capsys, "verify", "-r", "1", "--global", "--set", "0,1,2", files["k5"])
    assert code == 0 and json.loads(out)["holds"]
    code, out, _ = run(capsys, "verify", "-r", "1", "--set", "0,1", files["k5"], "--format", "table")
    assert code == 1 and "fails" in out


def test_verify_whole_graph(capsys, files):
    code, out, _ = run(capsys, "verify", files["k5"], "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["summary"]["violations"] == []
    assert rec["checks"]["complete_formula"] == 7


def test_witness(capsys, files):
    code, out, _ = run(capsys, "witness", "-r", "1", files["k5"])
    sizes = {w["construction"]: w["size"] for w in json.loads(out)["witnesses"]}
    assert sizes == {"neighborhood": 3, "cut": 3, "independent_complement": 4}


def test_gen_roundtrip(capsys):
    code, out, _ = run(capsys, "gen", "petersen")
    assert out.splitlines()[0] == "10 15"
    code, out, _ = run(capsys, "gen", "cycle", "4", "--graph-format", "dimacs")
    assert out.startswith("p edge 4 4")


def test_input_errors_exit_2(capsys, files, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 5\n")
    code, _, err = run(capsys, "solve", bad)
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "solve", "-r", "9", files["k5"])
    assert code == 2 and "outside" in err
    code, _, _ = run(capsys, "solve", tmp_path / "missing.txt")
    assert code == 2
    code, _, _ = run(capsys, "verify", "-r", "all", "--set", "0", files["k5"])
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--problem", "nope", str(files["k5"])])
    assert exc.value.code == 2


def test_bench_small(capsys):
    code, out, _ = run(capsys, "bench", "--random", "2", "--budget", "6", "--format", "csv", "-r", "1,2")
    assert code == 0
    header, *rows = out.strip().splitlines()
    assert header.startswith("graph,") and rows


def test_module_entry_point_reads_stdin():
    proc = subprocess.run([sys.executable, "-m", "offalliance", "solve", "--global", "-r", "1", "-"],
                          input=serialize(gen.complete(5)), capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["optimum"] == 3
