import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from hyperchip import catalog, serialize_hypergraph
from hyperchip.cli import build_parser, main

ELEVEN = [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1], [1, 0, 0], [1, 0, 1],
          [1, 1, 0], [1, 1, 1], [2, 0, 0], [2, 0, 1], [2, 1, 0]]


@pytest.fixture
def files(tmp_path):
    h = tmp_path / "H_star_running.json"
    h.write_text(serialize_hypergraph(catalog.running_example()))
    s = tmp_path / "S.json"
    s.write_text(serialize_hypergraph(catalog.star_example()))
    script = tmp_path / "fire.json"
    script.write_text(json.dumps([
        {"vertex": "2", "choice": {"0": "3", "1": "4"}},
        {"set": {"1": {"0": "2", "1": "2", "2": "3"}, "2": {"0": "3", "1": "4"}, "3": {"0": "1", "2": "4"}}},
    ]))
    return {"H": str(h), "S": str(s), "script": str(script), "dir": tmp_path}


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def lines(text):
    return [json.loads(x) for x in text.splitlines()]


def test_enumerate(files):
    code, out = run("enumerate", files["H"])
    assert code == 0
    assert lines(out) == ELEVEN


def test_check(files):
    assert run("check", files["H"], "--config", "2,1,1") == (0, "not a parking function; bounded set {1,2,3}\n")
    assert run("check", files["H"], "--config", "2,1,0") == (0, "parking function\n")
    code, out = run("check", files["H"], "--config", "2,1,1", "--json")
    assert json.loads(out) == {"config": [2, 1, 1], "parking": False, "bounded": [["1", "2", "3"]]}


def test_validate(files):
    assert run("validate", files["H"])[1].startswith("ok: 4 vertices")
    assert json.loads(run("validate", files["H"], "--json")[1])["edges"] == 3


def test_maximal_and_orientations(files):
    assert lines(run("maximal", files["H"])[1]) == [[1, 1, 1], [2, 0, 1], [2, 1, 0]]
    records = lines(run("orientations", files["H"])[1])
    assert len(records) == 3
    assert sorted(r["config"] for r in records) == [[1, 1, 1], [2, 0, 1], [2, 1, 0]]
    assert records[0]["orientation"]["e2"] == "4"


def test_trees(files):
    code, out = run("trees", files["H"])
    assert code == 0 and len(lines(out)) == 11
    code, out = run("trees", files["H"], "--beta", "4,3,2,1,e3,e2,e1", "--dot")
    assert out.count("digraph T {") == 11


def test_bijection(files):
    code, out = run("bijection", files["H"], "--exhaustive")
    assert code == 0
    assert sum(x.startswith("pass ") for x in out.splitlines()) == 12
    assert out.splitlines()[-1] == "12 passed, 0 failed"
    code, out = run("bijection", files["H"], "--beta", "4,3,2,1,e3,e2,e1")
    assert 'pass [1, 1, 0] [["1", "e2"], ["2", "e1"], ["3", "e3"]]' in out


def test_fire(files):
    code, out = run("fire", files["H"], "--config", "1,2,0", "--script", files["script"])
    assert code == 0
    # the set step leaves vertex 1 negative, which fire reports as is
    assert lines(out) == [[1, 2, 0], [1, 0, 1], [-1, 0, 1]]


def test_cyclings(files):
    code, out = run("cyclings", files["H"])
    records = lines(out)
    assert records[-1] == {"union": ELEVEN}
    assert any(r["cycling"] == [["1", "3", "2"], ["1", "2", "4"], ["1", "3", "4"]] for r in records[:-1])
    code, out = run("cyclings", files["H"], "--cover")
    assert code == 0 and lines(out)
    code, out = run("cyclings", files["H"], "--sink-first", "--dot")
    assert "digraph D {" in out


def test_star(files):
    code, out = run("star", files["S"], "--dot")
    record = json.loads(out.splitlines()[0])
    assert record["determinant"] == "12"
    assert record["rows"] == ["e1", "e2", "e3", "1", "2", "3"]
    assert record["laplacian"][3] == ["-1", "-1", "-1", "3", "0", "0"]
    assert run("star", files["H"])[0] == 1


def test_count():
    assert run("count", "--complete", "n=4,d=3") == (0, "1203\n")
    assert run("count", "--u", "3,5,6,6") == (0, "1203\n")
    assert run("count", "--bipartite", "2,2") == (0, "14\n")
    assert run("count", "--complete", "n=4")[0] == 1
    assert run("count", "--u", "6,5")[0] == 1


def test_ideal(files):
    code, out = run("ideal", files["H"])
    assert out.splitlines() == [
        "x3^2\t[0, 0, 2]", "x2^2\t[0, 2, 0]", "x1^2*x2^1*x3^1\t[2, 1, 1]", "x1^3\t[3, 0, 0]",
    ]
    assert len(run("ideal", files["H"], "--all")[1].splitlines()) == 7


def test_domain_errors(files, capsys):
    bad = files["dir"] / "bad.json"
    bad.write_text('{"vertices": ["1", "2", "3"], "edges": [["1", "2"]], "sink": "3"}')
    assert run("enumerate", str(bad))[0] == 1
    assert "not connected" in capsys.readouterr().err
    assert run("enumerate", str(files["dir"] / "missing.json"))[0] == 1
    assert run("check", files["H"], "--config", "1,x,0")[0] == 1
    assert run("check", files["H"], "--config", "1,0")[0] == 1
    assert run("trees", files["H"], "--beta", "4,3,zz")[0] == 1
    assert run("fire", files["H"], "--config", "1,2,0", "--script", files["H"])[0] == 1


def test_size_guard_message(files, capsys):
    assert run("trees", files["H"], "--max-size", "3")[0] == 1
    err = capsys.readouterr().err
    assert "guard of 3" in err and "--max-size" in err


def test_usage_errors(files):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["check", files["H"]])
    assert exc.value.code == 2


def test_every_subcommand_registered():
    parser = build_parser()
    sub = next(a for a in parser._actions if a.dest == "command")
    assert set(sub.choices) == {
        "validate", "check", "enumerate", "maximal", "trees", "bijection", "fire",
        "cyclings", "star", "count", "ideal", "orientations",
    }


def test_module_entry_point_is_deterministic(files):
    cmd = [sys.executable, "-m", "hyperchip", "cyclings", files["H"]]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    # six distinct vertex-induced cyclings plus the union line
    assert first.decode().count("\n") == 7


def test_sample_data_file():
    path = Path(__file__).resolve().parents[1] / "data" / "H_star_running.json"
    code, out = run("enumerate", str(path))
    assert lines(out) == ELEVEN
