import json

import pytest

from etmaps import __version__
from etmaps.cli import main
from conftest import map_fixture_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_tetrahedron(capsys):
    code, out, _ = run(capsys, "classify", map_fixture_path("tetrahedron"))
    assert code == 0
    assert out.splitlines()[0] == "class 1"
    assert "V=4 E=6 F=4 chi=2 orientable=yes boundary=no |Aut|=24" in out


def test_classify_a7_class5(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "classify", map_fixture_path("a7_class5"), "--json", str(report))
    assert code == 0 and out.startswith("class 5")
    doc = json.loads(report.read_text())
    assert doc["version"] == __version__ and doc["class"] == "5" and len(doc["digests"]["map"]) == 64


def test_classify_refusals(capsys, tmp_path):
    code, _, err = run(capsys, "classify", map_fixture_path("disconnected"))
    assert code == 2 and "connected" in err
    code, _, err = run(capsys, "classify", map_fixture_path("path3"))
    assert code == 3 and "edge-transitive" in err
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"flags": 3, "r0": [1, 0, 2], "r1": [0, 1, 2], "r2": [0, 2, 1]}))
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 2 and "relation" in err
    code, _, _ = run(capsys, "classify", str(tmp_path / "missing.json"))
    assert code == 2


def test_search_a6_class1(capsys):
    code, out, _ = run(capsys, "search", "--group", "A6", "--class", "1", "--exhaustive")
    assert code == 0 and "NOT_REALIZED, m=0" in out


def test_search_psl2_11_class5(capsys):
    code, out, _ = run(capsys, "search", "--group", "psl2_11", "--class", "5", "--exhaustive")
    assert code == 0 and "NOT_REALIZED" in out


def test_search_u33_class5(capsys, tmp_path):
    report = tmp_path / "s.json"
    code, out, _ = run(capsys, "search", "--group", "U3_3", "--class", "5", "--budget", "1000000", "--seed", "7",
                       "--out", str(tmp_path), "--json", str(report))
    assert code == 0 and "REALIZED" in out and "NOT_REALIZED" not in out
    doc = json.loads(report.read_text())
    assert doc["seed"] == 7 and doc["witness_files"]
    from etmaps.groupzoo import load_fixture
    from etmaps.parent import load_tuple
    from etmaps.search import verify_witness
    assert verify_witness(load_tuple(doc["witness_files"][0]), load_fixture("U3_3"))["ok"]


def test_search_deterministic(capsys):
    args = ("search", "--group", "A7", "--class", "4", "--budget", "500", "--seed", "3", "--json", "-")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    strip = lambda s: [l for l in s.splitlines() if "elapsed" not in l]
    assert strip(out1) == strip(out2)


def test_search_group_file(capsys, tmp_path):
    g = tmp_path / "s4.json"
    g.write_text(json.dumps({"degree": 4, "generators": ["(1,2)", "(1,2,3,4)"], "name": "S4"}))
    code, out, _ = run(capsys, "search", "--group", str(g), "--class", "1", "--exhaustive")
    assert code == 0 and out.startswith("S4 class 1: REALIZED")


def test_search_bad_inputs(capsys):
    assert run(capsys, "search", "--group", "nonsense", "--class", "1")[0] == 2
    assert run(capsys, "search", "--group", "A5", "--class", "7")[0] == 2


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--group", "M11", "--classes", "2A,4A,11A", "--oracle")
    assert code == 0 and "N(2A,4A,11A) = 7920" in out and "agrees" in out
    code, out, _ = run(capsys, "count", "--group", "psl2_7", "--classes", "1A,1A,1A")
    assert code == 0 and out.strip() == "N(1A,1A,1A) = 1"
    code, out, _ = run(capsys, "count", "--group", "psl2_7", "--classes", "all", "--oracle")
    assert code == 0 and "216 triples, 0 disagreements" in out
    assert run(capsys, "count", "--group", "A5", "--classes", "1A,2A")[0] == 2
    assert run(capsys, "count", "--group", "A5", "--classes", "1A,2A,9Z")[0] == 2


def test_verify_table_small(capsys, tmp_path):
    report = tmp_path / "t.json"
    code, out, _ = run(capsys, "verify-table", "--groups", "A5,psl2_7", "--json", str(report))
    assert code == 0
    assert "28 cells, 0 contradictions" in out
    doc = json.loads(report.read_text())
    cells = {(c["group"], c["class"]): c for c in doc["cells"]}
    assert cells[("A5", "2ex")]["verdict"] == "NOT_REALIZED"
    assert cells[("psl2_7", "1")]["verdict"] == "NOT_REALIZED"
    assert set(doc["digests"]) == {"A5", "psl2_7"}


def test_version(capsys):
    with pytest.raises(SystemExit):
        main(["--version"])
    assert __version__ in capsys.readouterr().out
