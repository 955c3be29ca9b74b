import io
import json

import pytest

from leecodes.cli import run
from leecodes.codes import CodeSpec
from leecodes.criterion import CriterionReport


def call(argv):
    buf = io.StringIO()
    code = run(argv, out=buf)
    return code, buf.getvalue()


def test_check_json():
    code, out = call(["check", "5", "--json"])
    assert code == 0
    d = json.loads(out)
    assert d["verdict"] == "nonexistence_proven" and d["a"] == 23 and d["b"] == 30
    assert CriterionReport.from_dict(d).to_json() == out.strip()


def test_check_plain():
    code, out = call(["check", "3"])
    assert code == 0 and "verdict=composite_p" in out


def test_scan_csv():
    code, out = call(["scan", "1000", "--csv"])
    assert code == 0
    assert out.splitlines() == [
        "threshold,prime_count,applicable_count",
        "10,6,4",
        "100,36,34",
        "1000,225,222",
    ]


def test_scan_threads_and_per_n(tmp_path):
    f1, f2 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    c1, o1 = call(["scan", "500", "--csv", "--thresholds", "50,500", "--per-n", str(f1)])
    c2, o2 = call(["scan", "500", "--csv", "--thresholds", "50,500", "--threads", "3",
                   "--per-n", str(f2)])
    assert c1 == c2 == 0 and o1 == o2
    assert f1.read_bytes() == f2.read_bytes()
    lines = f1.read_text().splitlines()
    assert len(lines) == 500 and json.loads(lines[4])["n"] == 5


def test_scan_plain_table():
    code, out = call(["scan", "100"])
    assert code == 0
    assert out.splitlines()[-1].split() == ["100", "36", "34"]


def test_scan_bad_thresholds():
    code, out = call(["scan", "100", "--thresholds", "50,500"])
    assert code == 1 and out == ""


def test_sphere():
    assert call(["sphere", "5", "2", "--count-only"]) == (0, "61\n")
    code, out = call(["sphere", "2", "1", "--q", "3"])
    assert out.splitlines() == ["0 0", "0 1", "0 2", "1 0", "2 0"]
    code, out = call(["sphere", "2", "2", "--q", "3"])
    assert code == 1 and out == ""


def test_construct_and_verify(tmp_path):
    path = tmp_path / "code.json"
    code, out = call(["construct", "gw2", "3", "--out", str(path)])
    assert code == 0 and out == ""
    CodeSpec.from_dict(json.loads(path.read_text()))
    code, out = call(["verify", str(path)])
    assert code == 0 and json.loads(out) == {"status": "perfect", "witness": None}


def test_construct_stdout():
    code, out = call(["construct", "gwn1", "3"])
    assert json.loads(out) == {"n": 3, "e": 1, "q": 7,
                               "repr": {"type": "homomorphism", "p": 7, "x": [1, 2, 3]}}


def test_verify_guard_exit_code(tmp_path):
    path = tmp_path / "big.json"
    path.write_text(json.dumps({"n": 2, "e": 5, "q": 61,
                                "repr": {"type": "lattice", "basis": [[6, 5], [-5, 6]]}}))
    code, out = call(["verify", str(path), "--max-points", "100"])
    assert code == 2 and out == ""


def test_verify_bad_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 2}')
    assert call(["verify", str(path)]) == (1, "")
    assert call(["verify", str(tmp_path / "missing.json")]) == (1, "")


def test_verify_not_packing(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"n": 2, "e": 2, "q": 13,
                                "repr": {"type": "centers", "points": [[0, 0], [1, 0]]}}))
    code, out = call(["verify", str(path)])
    d = json.loads(out)
    assert d["status"] == "not_packing" and d["witness"]["centers"] == [[0, 0], [1, 0]]


def test_search_witness():
    code, out = call(["search-witness", "5"])
    assert code == 0 and json.loads(out) == {"witnesses": [], "exhausted": True, "nodes": 305}
    code, out = call(["search-witness", "2", "--all"])
    assert json.loads(out)["witnesses"] == [[1, 5]]
    code, out = call(["search-witness", "2", "--all", "--no-symmetry"])
    assert len(json.loads(out)["witnesses"]) == 24
    code, out = call(["search-witness", "5", "--node-limit", "7"])
    assert json.loads(out) == {"witnesses": [], "exhausted": False, "nodes": 7}
    assert call(["search-witness", "3"]) == (1, "")


def test_verify_witness():
    code, out = call(["verify-witness", "2", "1,5"])
    d = json.loads(out)
    assert code == 0
    assert set(d) == {"bijective", "eq1", "lemma6", "lemma7", "e_n_nonzero", "n_in_X"}
    assert d["bijective"] and all(d["eq1"].values()) and d["n_in_X"] and d["e_n_nonzero"]
    code, out = call(["verify-witness", "2", "1,5", "--kmax", "6"])
    assert list(json.loads(out)["eq1"]) == ["1", "2", "3", "4", "5", "6"]
    code, out = call(["verify-witness", "2", "1,4"])
    d = json.loads(out)
    assert not d["bijective"] and d["lemma6"] is None and not all(d["eq1"].values())
    assert call(["verify-witness", "2", "1,5,7"]) == (1, "")


@pytest.mark.parametrize("argv", [
    ["check"],
    ["check", "0"],
    ["check", "x"],
    ["check", "5", "--bogus"],
    ["frobnicate"],
    ["construct", "gw9", "2"],
    ["scan", "10", "--thresholds", "a,b"],
    [],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        call(argv)
    assert exc.value.code == 1
    captured = capsys.readouterr()
    assert captured.out == "" and "usage" in captured.err


def test_outputs_are_deterministic():
    for argv in (["check", "17", "--json"], ["scan", "300", "--csv"], ["sphere", "3", "2"],
                 ["search-witness", "4", "--all"], ["verify-witness", "1", "1"]):
        assert call(argv) == call(argv)


def test_plots(tmp_path):
    fig = tmp_path / "scan.png"
    code, out = call(["scan", "1000", "--csv", "--plot", str(fig)])
    assert code == 0 and fig.stat().st_size > 0
    assert out.startswith("threshold,")
    codefile = tmp_path / "c.json"
    call(["construct", "gw2", "2", "--out", str(codefile)])
    tiling = tmp_path / "tiling.png"
    code, out = call(["verify", str(codefile), "--plot", str(tiling)])
    assert code == 0 and tiling.stat().st_size > 0
    c3 = tmp_path / "c3.json"
    call(["construct", "gwn1", "3", "--out", str(c3)])
    assert call(["verify", str(c3), "--plot", str(tmp_path / "x.png")]) == (1, "")


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "leecodes", "sphere", "5", "2", "--count-only"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "61\n"
    proc = subprocess.run([sys.executable, "-m", "leecodes", "check"], capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == ""
